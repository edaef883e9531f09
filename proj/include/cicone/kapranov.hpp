/**
 * Numerical intersection data for the blow-ups X_r of projective 3-space at
 * r general points followed by the proper transforms of the lines through
 * them, 1 <= r <= 5. X_4 is the permutohedral space and X_5 the moduli space
 * of stable six-pointed rational curves.
 *
 * Divisor classes live in the basis [H, E_1..E_r, E_12..E_{r-1 r}] and curve
 * classes in the dual basis under the intersection product, so that the
 * pairing of a divisor with a curve class is the plain dot product of their
 * coordinate vectors.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cone.hpp"

namespace cicone::kapranov {

struct BadRError : std::runtime_error {
    BadRError() : std::runtime_error("r must be between 1 and 5") {}
};

struct SpaceMismatchError : std::runtime_error {
    SpaceMismatchError() : std::runtime_error("classes live on different blow-ups") {}
};

struct BadLabelError : std::runtime_error {
    explicit BadLabelError(const std::string& what) : std::runtime_error(what) {}
};

// --- the coordinate system ---------------------------------------------------

struct KapranovSpace {
    int r = 0;

    explicit KapranovSpace(int r_) : r(r_)
    {
        if (r < 1 || r > 5) throw BadRError();
    }

    std::size_t dim() const { return 1 + static_cast<std::size_t>(r) + pair_count(); }
    std::size_t pair_count() const { return static_cast<std::size_t>(r) * (r - 1) / 2; }

    std::size_t h_index() const { return 0; }
    std::size_t e_index(int i) const
    {
        if (i < 1 || i > r) throw BadLabelError("point index out of range");
        return static_cast<std::size_t>(i);
    }
    // Pairs ordered lexicographically: 12, 13, ..., 1r, 23, ..., (r-1)r.
    std::size_t e_index(int j, int k) const
    {
        if (j > k) std::swap(j, k);
        if (j < 1 || k > r || j == k) throw BadLabelError("pair index out of range");
        std::size_t offset = 0;
        for (int a = 1; a < j; ++a) offset += static_cast<std::size_t>(r - a);
        return 1 + static_cast<std::size_t>(r) + offset + static_cast<std::size_t>(k - j - 1);
    }

    std::vector<std::string> labels() const
    {
        std::vector<std::string> ls{"H"};
        for (int i = 1; i <= r; ++i) ls.push_back("E" + std::to_string(i));
        for (int j = 1; j <= r; ++j)
            for (int k = j + 1; k <= r; ++k)
                ls.push_back("E" + std::to_string(j) + std::to_string(k));
        return ls;
    }

    friend bool operator==(const KapranovSpace& a, const KapranovSpace& b) { return a.r == b.r; }
};

struct DivisorClass {
    KapranovSpace space;
    RatVec coords;
};

struct CurveClass {
    KapranovSpace space;
    RatVec coords;
};

inline Rat pairing(const DivisorClass& d, const CurveClass& c)
{
    if (!(d.space == c.space)) throw SpaceMismatchError();
    return dot(d.coords, c.coords);
}

// --- labels -------------------------------------------------------------------

/// Partition of {1..6} into four nonempty blocks; the blocks are stored
/// sorted, ordered by their minimum element. 65 distinct values.
struct PartitionMu {
    std::array<std::vector<int>, 4> blocks;
};

inline std::vector<PartitionMu> all_fcurve_partitions()
{
    std::vector<PartitionMu> out;
    // Assign each of 1..6 a block id; keep assignments whose ids first appear
    // in increasing order, so each partition is produced exactly once and the
    // blocks come out ordered by minimum element.
    std::array<int, 6> assign{};
    const auto rec = [&](auto&& self, int elt, int used) -> void {
        if (elt == 6) {
            if (used != 4) return;
            PartitionMu mu;
            for (int e = 0; e < 6; ++e) mu.blocks[assign[e]].push_back(e + 1);
            out.push_back(std::move(mu));
            return;
        }
        for (int b = 0; b <= used && b < 4; ++b) {
            assign[elt] = b;
            self(self, elt + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Boundary divisor label: a subset J of {1..6} with 2 <= |J| <= 4, stored
/// canonically with 6 in J (the divisor of J and of its complement agree).
struct BoundaryLabel {
    std::vector<int> j;  // sorted, contains 6

    explicit BoundaryLabel(std::vector<int> members) : j(std::move(members))
    {
        std::sort(j.begin(), j.end());
        if (std::adjacent_find(j.begin(), j.end()) != j.end())
            throw BadLabelError("repeated element in boundary label");
        for (int x : j)
            if (x < 1 || x > 6) throw BadLabelError("boundary label element out of range");
        if (j.size() < 2 || j.size() > 4) throw BadLabelError("boundary label size out of range");
        if (std::find(j.begin(), j.end(), 6) == j.end()) {
            std::vector<int> comp;
            for (int x = 1; x <= 6; ++x)
                if (std::find(j.begin(), j.end(), x) == j.end()) comp.push_back(x);
            j = std::move(comp);
            if (j.size() < 2 || j.size() > 4)
                throw BadLabelError("boundary label size out of range");
        }
    }
};

inline std::vector<BoundaryLabel> all_boundary_labels()
{
    std::vector<BoundaryLabel> out;
    for (int i = 1; i <= 5; ++i) out.push_back(BoundaryLabel({i, 6}));
    for (int j = 1; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k) out.push_back(BoundaryLabel({j, k, 6}));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) out.push_back(BoundaryLabel({i, j, k, 6}));
    return out;
}

/// Two disjoint unordered pairs inside {1..5}; the fifth point is implicit.
/// 15 distinct values.
struct KvLabel {
    std::array<std::array<int, 2>, 2> pairs;

    KvLabel(std::array<int, 2> p, std::array<int, 2> q)
    {
        if (p[0] > p[1]) std::swap(p[0], p[1]);
        if (q[0] > q[1]) std::swap(q[0], q[1]);
        if (p[0] > q[0]) std::swap(p, q);
        pairs = {p, q};
        std::vector<int> all{p[0], p[1], q[0], q[1]};
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw BadLabelError("pairs are not disjoint");
        for (int x : all)
            if (x < 1 || x > 5) throw BadLabelError("pair element out of range");
    }
};

inline std::vector<KvLabel> all_kv_labels()
{
    std::vector<KvLabel> out;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = a + 1; c <= 5; ++c)
                for (int d = c + 1; d <= 5; ++d) {
                    if (c == b || d == b) continue;
                    out.push_back(KvLabel({a, b}, {c, d}));
                }
    return out;
}

// --- cone inequality systems ---------------------------------------------------

namespace detail {

inline void push_unique(std::vector<Halfspace>& rows, std::set<IntVec>& seen, IntVec row)
{
    Halfspace h(std::move(row));
    if (seen.insert(h.normal).second) rows.push_back(std::move(h));
}

}  // namespace detail

/**
 * Defining inequalities of the nef cone of X_r in the coordinates
 * (d_h; d_1..d_r; d_12..): four families indexed by tuples of distinct
 * points. A family is instantiated with as many existing point indices as it
 * has slots for; when r is too small to fill every slot, coefficients whose
 * indices cannot be filled are set to zero. The fourth family needs all five
 * points and so only appears for r = 5.
 */
inline std::vector<Halfspace> nef_hrep(int r)
{
    const KapranovSpace sp(r);
    const std::size_t dim = sp.dim();
    std::vector<Halfspace> rows;
    std::set<IntVec> seen;
    const auto emit = [&](IntVec row) { detail::push_unique(rows, seen, std::move(row)); };

    // family 1: -d_ij >= 0
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            IntVec row(dim, Int(0));
            row[sp.e_index(i, j)] = -1;
            emit(std::move(row));
        }
    // family 2: d_h + d_i + d_j - d_ij >= 0  (r = 1: d_h + d_1 >= 0)
    if (r == 1) {
        IntVec row(dim, Int(0));
        row[sp.h_index()] = 1;
        row[sp.e_index(1)] = 1;
        emit(std::move(row));
    } else {
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                IntVec row(dim, Int(0));
                row[sp.h_index()] = 1;
                row[sp.e_index(i)] = 1;
                row[sp.e_index(j)] = 1;
                row[sp.e_index(i, j)] = -1;
                emit(std::move(row));
            }
    }
    // family 3: -d_i + d_ij + d_ik >= 0 over distinct i, j, k
    for (int i = 1; i <= r; ++i) {
        if (r >= 3) {
            for (int j = 1; j <= r; ++j)
                for (int k = j + 1; k <= r; ++k) {
                    if (j == i || k == i) continue;
                    IntVec row(dim, Int(0));
                    row[sp.e_index(i)] = -1;
                    row[sp.e_index(i, j)] += 1;
                    row[sp.e_index(i, k)] += 1;
                    emit(std::move(row));
                }
        } else if (r == 2) {
            IntVec row(dim, Int(0));
            row[sp.e_index(i)] = -1;
            row[sp.e_index(i, 3 - i)] = 1;
            emit(std::move(row));
        } else {
            IntVec row(dim, Int(0));
            row[sp.e_index(i)] = -1;
            emit(std::move(row));
        }
    }
    // family 4: d_h + d_i + d_jk + d_lm >= 0 with {i,j,k,l,m} = {1..5}
    if (r == 5) {
        for (int i = 1; i <= 5; ++i) {
            std::vector<int> rest;
            for (int x = 1; x <= 5; ++x)
                if (x != i) rest.push_back(x);
            const std::array<std::array<int, 4>, 3> splits{
                {{rest[0], rest[1], rest[2], rest[3]},
                 {rest[0], rest[2], rest[1], rest[3]},
                 {rest[0], rest[3], rest[1], rest[2]}}};
            for (const auto& s : splits) {
                IntVec row(dim, Int(0));
                row[sp.h_index()] = 1;
                row[sp.e_index(i)] = 1;
                row[sp.e_index(s[0], s[1])] = 1;
                row[sp.e_index(s[2], s[3])] = 1;
                emit(std::move(row));
            }
        }
    }
    return rows;
}

/**
 * Defining inequalities of the movable cone of X_r in the dual coordinates
 * (c_h; c_1..c_r; c_12..), one row per generator of the effective cone. The
 * fourth family comes from the Keel-Vermeire classes and is implied by the
 * first three when r <= 4, so it is emitted only for r = 5.
 */
inline std::vector<Halfspace> mov_hrep(int r)
{
    const KapranovSpace sp(r);
    const std::size_t dim = sp.dim();
    std::vector<Halfspace> rows;
    std::set<IntVec> seen;
    const auto emit = [&](IntVec row) { detail::push_unique(rows, seen, std::move(row)); };

    // c_i >= 0
    for (int i = 1; i <= r; ++i) {
        IntVec row(dim, Int(0));
        row[sp.e_index(i)] = 1;
        emit(std::move(row));
    }
    // c_jk >= 0
    for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
            IntVec row(dim, Int(0));
            row[sp.e_index(j, k)] = 1;
            emit(std::move(row));
        }
    // c_h - c_i - c_j - c_k - c_ij - c_ik - c_jk >= 0 over triples,
    // instantiated with however many points exist
    {
        std::vector<std::vector<int>> triples;
        if (r >= 3) {
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j)
                    for (int k = j + 1; k <= r; ++k) triples.push_back({i, j, k});
        } else if (r == 2) {
            triples.push_back({1, 2});
        } else {
            triples.push_back({1});
        }
        for (const std::vector<int>& t : triples) {
            IntVec row(dim, Int(0));
            row[sp.h_index()] = 1;
            for (std::size_t a = 0; a < t.size(); ++a) {
                row[sp.e_index(t[a])] = -1;
                for (std::size_t b = a + 1; b < t.size(); ++b) row[sp.e_index(t[a], t[b])] = -1;
            }
            emit(std::move(row));
        }
    }
    // 2c_h - sum c_i - c_jl - c_kl - c_jm - c_km >= 0 (Keel-Vermeire), r = 5
    if (r == 5) {
        for (const KvLabel& kv : all_kv_labels()) {
            IntVec row(dim, Int(0));
            row[sp.h_index()] = 2;
            for (int i = 1; i <= 5; ++i) row[sp.e_index(i)] = -1;
            const auto& p = kv.pairs[0];
            const auto& q = kv.pairs[1];
            row[sp.e_index(p[0], q[0])] = -1;
            row[sp.e_index(p[0], q[1])] = -1;
            row[sp.e_index(p[1], q[0])] = -1;
            row[sp.e_index(p[1], q[1])] = -1;
            emit(std::move(row));
        }
    }
    return rows;
}

// --- intersection products ------------------------------------------------------

namespace detail {

struct TableEntry {
    std::size_t coord;
    int coeff;
};

/// Sparse table of products of basis divisors: entry (a,b) lists the nonzero
/// coordinates of the product of basis elements a and b in the dual basis.
struct ProductTable {
    std::size_t dim;
    std::vector<std::vector<TableEntry>> cells;  // indexed a * dim + b, a <= b

    const std::vector<TableEntry>& at(std::size_t a, std::size_t b) const
    {
        if (a > b) std::swap(a, b);
        return cells[a * dim + b];
    }
};

inline const ProductTable& product_table(int r)
{
    static std::array<std::optional<ProductTable>, 6> cache;
    auto& slot = cache[static_cast<std::size_t>(r)];
    if (slot) return *slot;

    const KapranovSpace sp(r);
    const std::size_t dim = sp.dim();
    ProductTable t;
    t.dim = dim;
    t.cells.assign(dim * dim, {});
    const auto cell = [&](std::size_t a, std::size_t b) -> std::vector<TableEntry>& {
        if (a > b) std::swap(a, b);
        return t.cells[a * dim + b];
    };

    cell(sp.h_index(), sp.h_index()) = {{sp.h_index(), 1}};
    for (int i = 1; i <= r; ++i) cell(sp.e_index(i), sp.e_index(i)) = {{sp.e_index(i), 1}};
    for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
            const std::size_t jk = sp.e_index(j, k);
            cell(sp.h_index(), jk) = {{jk, -1}};
            cell(sp.e_index(j), jk) = {{jk, -1}};
            cell(sp.e_index(k), jk) = {{jk, -1}};
            cell(jk, jk) = {{jk, 2},
                            {sp.h_index(), -1},
                            {sp.e_index(j), -1},
                            {sp.e_index(k), -1}};
        }
    slot = std::move(t);
    return *slot;
}

}  // namespace detail

/// Bilinear product of two divisor coordinate vectors, as integer dual-basis
/// coordinates. The hot path of the comparison algorithm.
inline IntVec pair_product_raw(int r, const IntVec& u, const IntVec& v)
{
    const detail::ProductTable& t = detail::product_table(r);
    IntVec out(t.dim, Int(0));
    for (std::size_t a = 0; a < t.dim; ++a) {
        for (std::size_t b = a; b < t.dim; ++b) {
            const auto& entries = t.at(a, b);
            if (entries.empty()) continue;
            Int scale = u[a] * v[b];
            if (a != b) scale += u[b] * v[a];
            if (scale == 0) continue;
            for (const detail::TableEntry& e : entries) out[e.coord] += e.coeff * scale;
        }
    }
    return out;
}

/// Intersection product of two divisor classes on the same X_r.
inline CurveClass pair_product(const DivisorClass& d1, const DivisorClass& d2)
{
    if (!(d1.space == d2.space)) throw SpaceMismatchError();
    const detail::ProductTable& t = detail::product_table(d1.space.r);
    RatVec out(t.dim, Rat(0));
    for (std::size_t a = 0; a < t.dim; ++a)
        for (std::size_t b = a; b < t.dim; ++b) {
            const auto& entries = t.at(a, b);
            if (entries.empty()) continue;
            Rat scale = d1.coords[a] * d2.coords[b];
            if (a != b) scale += d1.coords[b] * d2.coords[a];
            if (scale == 0) continue;
            for (const detail::TableEntry& e : entries) out[e.coord] += e.coeff * scale;
        }
    return {d1.space, std::move(out)};
}

// --- distinguished classes on X_5 --------------------------------------------------

/// Class of the boundary divisor with the given canonical label, r = 5.
inline DivisorClass boundary_class(const BoundaryLabel& label)
{
    const KapranovSpace sp(5);
    RatVec coords(sp.dim(), Rat(0));
    std::vector<int> core;  // label members below 6
    for (int x : label.j)
        if (x != 6) core.push_back(x);
    switch (core.size()) {
        case 1:
            coords[sp.e_index(core[0])] = 1;
            break;
        case 2:
            coords[sp.e_index(core[0], core[1])] = 1;
            break;
        case 3:
            coords[sp.h_index()] = 1;
            for (std::size_t a = 0; a < 3; ++a) {
                coords[sp.e_index(core[a])] = -1;
                for (std::size_t b = a + 1; b < 3; ++b) coords[sp.e_index(core[a], core[b])] = -1;
            }
            break;
        default:
            throw BadLabelError("boundary label must have 2 to 4 members");
    }
    return {sp, std::move(coords)};
}

/// Class of the Keel-Vermeire divisor indexed by two disjoint pairs, r = 5.
inline DivisorClass kv_class(const KvLabel& label)
{
    const KapranovSpace sp(5);
    RatVec coords(sp.dim(), Rat(0));
    coords[sp.h_index()] = 2;
    for (int i = 1; i <= 5; ++i) coords[sp.e_index(i)] = -1;
    const auto& p = label.pairs[0];
    const auto& q = label.pairs[1];
    coords[sp.e_index(p[0], q[0])] = -1;
    coords[sp.e_index(p[0], q[1])] = -1;
    coords[sp.e_index(p[1], q[0])] = -1;
    coords[sp.e_index(p[1], q[1])] = -1;
    return {sp, std::move(coords)};
}

/// The 25 boundary classes followed by the 15 Keel-Vermeire classes.
inline std::vector<DivisorClass> eff_generators_m06()
{
    std::vector<DivisorClass> out;
    std::set<IntVec> seen;
    for (const BoundaryLabel& l : all_boundary_labels()) {
        DivisorClass d = boundary_class(l);
        if (seen.insert(primitive(d.coords)).second) out.push_back(std::move(d));
    }
    for (const KvLabel& l : all_kv_labels()) {
        DivisorClass d = kv_class(l);
        if (seen.insert(primitive(d.coords)).second) out.push_back(std::move(d));
    }
    return out;
}

/**
 * Dual-basis coordinate vectors of the 65 one-dimensional boundary strata of
 * X_5, one per partition of {1..6} into four blocks. The hyperplane pairing
 * is 1 exactly when {6} is a block; the exceptional pairings follow from the
 * boundary pairing rule applied through the dictionary E_J = Delta_{J u {6}}.
 */
inline std::vector<CurveClass> fcurve_classes()
{
    const KapranovSpace sp(5);
    std::vector<CurveClass> out;
    for (const PartitionMu& mu : all_fcurve_partitions()) {
        RatVec coords(sp.dim(), Rat(0));
        const auto is_block = [&](const std::vector<int>& s) {
            return std::any_of(mu.blocks.begin(), mu.blocks.end(),
                               [&](const std::vector<int>& b) { return b == s; });
        };
        const auto pairing_with_delta = [&](std::vector<int> k) -> int {
            std::sort(k.begin(), k.end());
            std::vector<int> comp;
            for (int x = 1; x <= 6; ++x)
                if (std::find(k.begin(), k.end(), x) == k.end()) comp.push_back(x);
            if (is_block(k) || is_block(comp)) return -1;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b) {
                    std::vector<int> u = mu.blocks[a];
                    u.insert(u.end(), mu.blocks[b].begin(), mu.blocks[b].end());
                    std::sort(u.begin(), u.end());
                    if (u == k) return 1;
                }
            return 0;
        };

        const std::vector<int> six{6};
        coords[sp.h_index()] = is_block(six) ? 1 : 0;
        for (int i = 1; i <= 5; ++i) coords[sp.e_index(i)] = pairing_with_delta({i, 6});
        for (int j = 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k)
                coords[sp.e_index(j, k)] = pairing_with_delta({j, k, 6});
        out.push_back({sp, std::move(coords)});
    }
    return out;
}

/// Canonical divisor class of X_5.
inline DivisorClass canonical_class_m06()
{
    const KapranovSpace sp(5);
    RatVec coords(sp.dim(), Rat(1));
    coords[sp.h_index()] = -4;
    for (int i = 1; i <= 5; ++i) coords[sp.e_index(i)] = 2;
    return {sp, std::move(coords)};
}

/**
 * Pullback of a curve class along the blow-down X_5 -> X_4: the coordinates
 * over the shared basis labels are copied and the coordinates dual to E_5 and
 * the E_i5 are zero, because the pushforward of divisors fixes H and the E_J
 * with 5 not in J and kills the rest.
 */
inline CurveClass pullback_l4_to_m06(const CurveClass& gamma)
{
    if (gamma.space.r != 4) throw SpaceMismatchError();
    const KapranovSpace src(4), dst(5);
    RatVec coords(dst.dim(), Rat(0));
    coords[dst.h_index()] = gamma.coords[src.h_index()];
    for (int i = 1; i <= 4; ++i) coords[dst.e_index(i)] = gamma.coords[src.e_index(i)];
    for (int j = 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k)
            coords[dst.e_index(j, k)] = gamma.coords[src.e_index(j, k)];
    return {dst, std::move(coords)};
}

}  // namespace cicone::kapranov
