/**
 * Pointed rational cones with dual descriptions.
 *
 * A cone is handled in two exact representations: facet inequalities
 * (H-rep, homogeneous halfspaces <a,x> >= 0) and primitive integer
 * extremal rays (V-rep). Conversion in both directions runs through an
 * incremental double-description method whose adjacency test is the
 * algebraic one: two rays of the current cone are adjacent iff their
 * common tight constraints have rank dim-2.
 *
 * All data is integerized on entry: rational inputs are scaled to
 * primitive integer vectors, so equality of rays is plain coordinatewise
 * equality and output order is the lexicographic one.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "linalg.hpp"

namespace cicone {

// --- domain types ----------------------------------------------------------

/// Primitive nonzero integer vector; the canonical representative of a ray
/// class under positive scaling. Construction canonicalizes.
struct Ray {
    IntVec v;

    Ray() = default;
    explicit Ray(IntVec coords) : v(std::move(coords)) { make_primitive(v); }
    explicit Ray(const RatVec& coords) : v(primitive(coords)) {}

    friend bool operator==(const Ray& a, const Ray& b) { return a.v == b.v; }
    friend bool operator<(const Ray& a, const Ray& b) { return lex_less(a.v, b.v); }
};

/// Homogeneous halfspace <normal, x> >= 0 with primitive nonzero normal.
struct Halfspace {
    IntVec normal;

    Halfspace() = default;
    explicit Halfspace(IntVec n) : normal(std::move(n)) { make_primitive(normal); }
    explicit Halfspace(const RatVec& n) : normal(primitive(n)) {}

    friend bool operator==(const Halfspace& a, const Halfspace& b) { return a.normal == b.normal; }
    friend bool operator<(const Halfspace& a, const Halfspace& b)
    {
        return lex_less(a.normal, b.normal);
    }
};

// --- errors -----------------------------------------------------------------

struct NotPointedError : std::runtime_error {
    std::vector<IntVec> lineality;
    explicit NotPointedError(std::vector<IntVec> lin)
        : std::runtime_error("cone has a nontrivial lineality space"), lineality(std::move(lin))
    {
    }
};

struct EmptyInputError : std::runtime_error {
    EmptyInputError() : std::runtime_error("no generators given") {}
};

struct NotFullDimensionalError : std::runtime_error {
    NotFullDimensionalError() : std::runtime_error("generators do not span the ambient space") {}
};

struct TooLargeError : std::runtime_error {
    TooLargeError() : std::runtime_error("system exceeds the brute-force oracle bounds") {}
};

namespace detail {

// Canonical constraint list: primitive normals, lexicographically sorted,
// duplicates removed. The sort fixes the double-description insertion order.
inline std::vector<IntVec> canonical_rows(std::vector<IntVec> rows)
{
    for (IntVec& r : rows) make_primitive(r);
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

inline std::vector<IntVec> primitive_lineality(const std::vector<IntVec>& rows)
{
    RatMat m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) m.push_back(to_rat(r));
    std::vector<IntVec> lin;
    for (const RatVec& k : kernel_basis(m)) lin.push_back(primitive(k));
    return lin;
}

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

// Indices of set bits in a & b, in increasing order.
inline std::vector<std::size_t> common_bits(const Bits& a, const Bits& b)
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t x = a[w] & b[w];
        while (x) {
            out.push_back((w << 6) + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

/**
 * Extremal rays of {x : <a,x> >= 0 for all canonical constraint rows a}.
 *
 * The cone must be pointed, i.e. the rows must have full column rank; the
 * caller is expected to have checked this. Starts from a simplicial cone cut
 * out by a greedily chosen independent subset of the rows and inserts the
 * remaining constraints one at a time.
 */
inline std::vector<IntVec> dd_rays(std::size_t dim, const std::vector<IntVec>& rows)
{
    const std::size_t m = rows.size();
    const std::size_t words = (m + 63) / 64;

    // Initial simplicial cone from the first rank-many independent rows.
    std::vector<std::size_t> init;
    {
        IntRankAccumulator acc(dim);
        for (std::size_t i = 0; i < m && acc.rank() < dim; ++i)
            if (acc.add(rows[i])) init.push_back(i);
    }
    RatMat a0(dim, RatVec(dim));
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t j = 0; j < dim; ++j) a0[k][j] = rows[init[k]][j];
    const RatMat inv = *inverse(a0);

    std::vector<IntVec> rays(dim);
    std::vector<Bits> tight(dim, Bits(words, 0));
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec col(dim);
        for (std::size_t k = 0; k < dim; ++k) col[k] = inv[k][j];
        rays[j] = primitive(col);
        for (std::size_t k = 0; k < dim; ++k)
            if (k != j) set_bit(tight[j], init[k]);
    }

    std::vector<std::size_t> processed = init;
    std::vector<bool> in_init(m, false);
    for (std::size_t i : init) in_init[i] = true;

    for (std::size_t c = 0; c < m; ++c) {
        if (in_init[c]) continue;
        const IntVec& a = rows[c];

        std::vector<Int> vals(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(a, rays[i]);
            if (vals[i] > 0)
                pos.push_back(i);
            else if (vals[i] < 0)
                neg.push_back(i);
            else {
                zero.push_back(i);
                set_bit(tight[i], c);
            }
        }
        processed.push_back(c);
        if (neg.empty()) continue;

        std::vector<IntVec> new_rays;
        std::vector<Bits> new_tight;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                const std::vector<std::size_t> common = common_bits(tight[p], tight[n]);
                if (common.size() + 2 < dim) continue;
                if (dim >= 2) {
                    IntRankAccumulator acc(dim);
                    for (std::size_t idx : common)
                        if (acc.add(rows[idx]) && acc.rank() + 2 == dim) break;
                    if (acc.rank() + 2 != dim) continue;
                }
                // Positive combination of p and n lying on the hyperplane.
                IntVec w(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    w[j] = vals[p] * rays[n][j] - vals[n] * rays[p][j];
                make_primitive(w);
                Bits tb(words, 0);
                for (std::size_t idx : processed)
                    if (dot(rows[idx], w) == 0) set_bit(tb, idx);
                new_rays.push_back(std::move(w));
                new_tight.push_back(std::move(tb));
            }
        }

        std::vector<IntVec> kept;
        std::vector<Bits> kept_tight;
        kept.reserve(pos.size() + zero.size() + new_rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] >= 0) {
                kept.push_back(std::move(rays[i]));
                kept_tight.push_back(std::move(tight[i]));
            }
        }
        for (std::size_t i = 0; i < new_rays.size(); ++i) {
            kept.push_back(std::move(new_rays[i]));
            kept_tight.push_back(std::move(new_tight[i]));
        }
        rays = std::move(kept);
        tight = std::move(kept_tight);
    }

    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

// Rank check + NotPointed with lineality payload, shared by the public entry
// points that require a pointed H-cone.
inline void require_pointed(std::size_t dim, const std::vector<IntVec>& rows)
{
    IntRankAccumulator acc(dim);
    for (const IntVec& r : rows)
        if (acc.add(r) && acc.rank() == dim) return;
    throw NotPointedError(primitive_lineality(rows));
}

}  // namespace detail

// --- halfspaces -> extremal rays --------------------------------------------

inline std::vector<Ray> rays_from_halfspaces(std::size_t dim,
                                             const std::vector<Halfspace>& halfspaces)
{
    std::vector<IntVec> rows;
    rows.reserve(halfspaces.size());
    for (const Halfspace& h : halfspaces) rows.push_back(h.normal);
    rows = detail::canonical_rows(std::move(rows));
    detail::require_pointed(dim, rows);
    std::vector<Ray> out;
    for (IntVec& r : detail::dd_rays(dim, rows)) out.push_back(Ray(std::move(r)));
    return out;
}

// --- extremal rays -> halfspaces --------------------------------------------

/**
 * Minimal facet description of the cone generated by `rays`. When the cone is
 * not full-dimensional the description starts with equation pairs (+a, -a)
 * spanning the orthogonal complement of the linear span, followed by the
 * facets proper; membership is then still "every halfspace >= 0".
 */
inline std::vector<Halfspace> halfspaces_from_rays(std::size_t dim, const std::vector<Ray>& rays)
{
    if (rays.empty()) throw EmptyInputError();
    std::vector<IntVec> gens;
    gens.reserve(rays.size());
    for (const Ray& r : rays) gens.push_back(r.v);
    gens = detail::canonical_rows(std::move(gens));

    std::size_t span = 0;
    {
        IntRankAccumulator acc(dim);
        for (const IntVec& g : gens)
            if (acc.add(g)) ++span;
    }

    std::vector<Halfspace> out;
    if (span == dim) {
        for (IntVec& n : detail::dd_rays(dim, gens)) out.push_back(Halfspace(std::move(n)));
        return out;
    }

    // Equations: a basis of span(gens)^perp, emitted as opposite pairs.
    RatMat gen_mat;
    for (const IntVec& g : gens) gen_mat.push_back(to_rat(g));
    std::vector<IntVec> equations;
    for (const RatVec& k : kernel_basis(gen_mat)) equations.push_back(primitive(k));
    std::sort(equations.begin(), equations.end(), lex_less);
    for (const IntVec& e : equations) {
        out.push_back(Halfspace(e));
        IntVec neg(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
        out.push_back(Halfspace(std::move(neg)));
    }

    // Facets inside the span: pick an independent subset of the generators as
    // a basis, convert to span coordinates, dualize there, and lift back.
    std::vector<IntVec> basis;
    {
        IntRankAccumulator acc(dim);
        for (const IntVec& g : gens)
            if (acc.add(g)) basis.push_back(g);
    }
    RatMat basis_cols(dim, RatVec(span));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < span; ++k) basis_cols[j][k] = basis[k][j];
    std::vector<IntVec> coords;
    for (const IntVec& g : gens) {
        const RatVec c = *solve_linear(basis_cols, to_rat(g));
        coords.push_back(primitive(c));
    }
    coords = detail::canonical_rows(std::move(coords));

    RatMat gram(span, RatVec(span));
    for (std::size_t k = 0; k < span; ++k)
        for (std::size_t l = 0; l < span; ++l) gram[k][l] = dot(basis[k], basis[l]);
    std::vector<Halfspace> facets;
    for (const IntVec& fn : detail::dd_rays(span, coords)) {
        const RatVec x = *solve_linear(gram, to_rat(fn));
        RatVec lifted(dim, Rat(0));
        for (std::size_t k = 0; k < span; ++k)
            for (std::size_t j = 0; j < dim; ++j) lifted[j] += x[k] * Rat(basis[k][j]);
        facets.push_back(Halfspace(lifted));
    }
    std::sort(facets.begin(), facets.end());
    out.insert(out.end(), facets.begin(), facets.end());
    return out;
}

/// Extremal rays of the dual cone {y : <y, r> >= 0 for every input ray}.
inline std::vector<Ray> dual_rays(std::size_t dim, const std::vector<Ray>& rays)
{
    std::vector<IntVec> rows;
    rows.reserve(rays.size());
    for (const Ray& r : rays) rows.push_back(r.v);
    rows = detail::canonical_rows(std::move(rows));
    {
        IntRankAccumulator acc(dim);
        std::size_t rk = 0;
        for (const IntVec& r : rows)
            if (acc.add(r)) ++rk;
        if (rk != dim) throw NotFullDimensionalError();
    }
    std::vector<Ray> out;
    for (IntVec& r : detail::dd_rays(dim, rows)) out.push_back(Ray(std::move(r)));
    return out;
}

// --- the Cone carrier ---------------------------------------------------------

/// A pointed rational cone holding whichever representations are known.
/// Missing representations are computed on demand and cached.
struct Cone {
    std::size_t dim = 0;
    std::optional<std::vector<Halfspace>> hrep;
    std::optional<std::vector<Ray>> vrep;
    std::vector<IntVec> lineality;  // empty for every pipeline cone

    static Cone from_halfspaces(std::size_t dim, std::vector<Halfspace> hs)
    {
        Cone c;
        c.dim = dim;
        c.hrep = std::move(hs);
        return c;
    }

    static Cone from_rays(std::size_t dim, std::vector<Ray> rays)
    {
        Cone c;
        c.dim = dim;
        c.vrep = std::move(rays);
        return c;
    }

    const std::vector<Halfspace>& halfspaces()
    {
        if (!hrep) hrep = halfspaces_from_rays(dim, *vrep);
        return *hrep;
    }

    const std::vector<Ray>& rays()
    {
        if (!vrep) vrep = rays_from_halfspaces(dim, *hrep);
        return *vrep;
    }
};

inline bool is_member(const RatVec& x, Cone& cone)
{
    for (const Halfspace& h : cone.halfspaces())
        if (dot(h.normal, x) < 0) return false;
    return true;
}

/// True iff r lies in the cone and its tight constraints have rank dim-1.
inline bool is_extremal(Cone& cone, const Ray& r)
{
    const std::vector<Halfspace>& hs = cone.halfspaces();
    IntRankAccumulator acc(cone.dim);
    for (const Halfspace& h : hs) {
        const Int s = dot(h.normal, r.v);
        if (s < 0) return false;
        if (s == 0) acc.add(h.normal);
    }
    return acc.rank() + 1 == cone.dim;
}

inline bool is_positive_multiple(const RatVec& u, const RatVec& v)
{
    if (is_zero(u) || is_zero(v)) return false;
    return primitive(u) == primitive(v);
}

// --- generator reduction ------------------------------------------------------

/**
 * Reduce an arbitrary generating set to the extremal rays of the cone it
 * spans: zero vectors are dropped (count reported through `zeros_dropped`),
 * the rest are canonicalized, deduplicated, and filtered so that no survivor
 * lies in the cone generated by the others. Throws NotPointedError when the
 * generated cone contains a line, where "extremal ray" stops being meaningful.
 */
inline std::vector<Ray> minimal_generators(std::size_t dim, const std::vector<RatVec>& vectors,
                                           std::size_t* zeros_dropped = nullptr)
{
    std::size_t zeros = 0;
    std::vector<IntVec> gens;
    for (const RatVec& v : vectors) {
        if (is_zero(v))
            ++zeros;
        else
            gens.push_back(primitive(v));
    }
    if (zeros_dropped) *zeros_dropped = zeros;
    if (gens.empty()) return {};
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Ray> rays;
    rays.reserve(gens.size());
    for (IntVec& g : gens) rays.push_back(Ray(std::move(g)));
    const std::vector<Halfspace> hs = halfspaces_from_rays(dim, rays);
    {
        std::vector<IntVec> rows;
        for (const Halfspace& h : hs) rows.push_back(h.normal);
        IntRankAccumulator acc(dim);
        std::size_t rk = 0;
        for (const IntVec& r : rows)
            if (acc.add(r)) ++rk;
        if (rk != dim) throw NotPointedError(detail::primitive_lineality(rows));
    }

    std::vector<Ray> out;
    for (const Ray& r : rays) {
        std::vector<const IntVec*> tight_rows;
        for (const Halfspace& h : hs)
            if (dot(h.normal, r.v) == 0) tight_rows.push_back(&h.normal);
        if (tight_rows.size() + 1 < dim) continue;
        IntRankAccumulator acc(dim);
        for (const IntVec* row : tight_rows)
            if (acc.add(*row) && acc.rank() + 1 == dim) break;
        if (acc.rank() + 1 == dim) out.push_back(r);
    }
    return out;
}

inline std::vector<Ray> minimal_generators(std::size_t dim, const std::vector<IntVec>& vectors,
                                           std::size_t* zeros_dropped = nullptr)
{
    std::vector<RatVec> rats;
    rats.reserve(vectors.size());
    for (const IntVec& v : vectors) rats.push_back(to_rat(v));
    return minimal_generators(dim, rats, zeros_dropped);
}

// --- incremental hull reduction ------------------------------------------------

/// Extremal rays and facets of the cone spanned by a (possibly very large)
/// generating set.
struct HullReduction {
    std::vector<Ray> extremal;       // lexicographically sorted
    std::vector<Halfspace> facets;   // lexicographically sorted
};

/// Progress hook for long hull reductions: (generators visited, current
/// extremal candidates, current facets).
using HullObserver = std::function<void(std::size_t, std::size_t, std::size_t)>;

/**
 * Computes the facet description and extremal rays of cone(gens) for a
 * full-dimensional pointed cone, streaming over the generators: a generator
 * inside the cone built so far is discarded immediately (the cone only ever
 * grows, so the test stays valid), violators are buffered and periodically
 * folded in by dualizing the enlarged set and keeping its extremal rays.
 * Output is identical to halfspaces_from_rays + a full extremality filter,
 * at a fraction of the cost when most generators are interior points.
 */
inline HullReduction incremental_hull(std::size_t dim, const std::vector<Ray>& gens,
                                      const HullObserver& observe = {})
{
    if (gens.empty()) throw EmptyInputError();
    std::vector<IntVec> input;
    input.reserve(gens.size());
    for (const Ray& r : gens) input.push_back(r.v);
    std::sort(input.begin(), input.end(), lex_less);
    input.erase(std::unique(input.begin(), input.end()), input.end());

    {
        IntRankAccumulator acc(dim);
        std::size_t rk = 0;
        for (const IntVec& v : input)
            if (acc.add(v) && ++rk == dim) break;
        if (rk != dim) throw NotFullDimensionalError();
    }

    std::vector<IntVec> current;  // extremal rays of the cone built so far
    std::vector<IntVec> facets;
    std::vector<IntVec> buffer;
    const std::size_t chunk = 4096;

    const auto reduce = [&]() {
        std::vector<IntVec> all = current;
        all.insert(all.end(), buffer.begin(), buffer.end());
        buffer.clear();
        all = detail::canonical_rows(std::move(all));
        {
            IntRankAccumulator acc(dim);
            std::size_t rk = 0;
            for (const IntVec& v : all)
                if (acc.add(v) && ++rk == dim) break;
            if (rk != dim) {  // not spanning yet: keep everything, no facets
                current = std::move(all);
                facets.clear();
                return;
            }
        }
        facets = detail::dd_rays(dim, all);
        if (facets.empty()) throw NotPointedError(detail::primitive_lineality(all));
        std::vector<IntVec> kept;
        for (const IntVec& v : all) {
            std::vector<const IntVec*> tight;
            for (const IntVec& f : facets)
                if (dot(f, v) == 0) tight.push_back(&f);
            if (tight.size() + 1 < dim) continue;
            IntRankAccumulator acc(dim);
            for (const IntVec* row : tight)
                if (acc.add(*row) && acc.rank() + 1 == dim) break;
            if (acc.rank() + 1 == dim) kept.push_back(v);
        }
        current = std::move(kept);
    };

    // Visit the generators in a strided order: consecutive lexicographic
    // entries are near-parallel, and a hull built from a thin slice makes
    // everything else a violator. A spread-out early sample stabilizes the
    // facet set quickly; the result does not depend on the order.
    const std::size_t n = input.size();
    std::size_t stride = 1;
    if (n > 2 * chunk) {
        stride = n / chunk;
        while (std::gcd(stride, n) != 1) ++stride;
    }
    std::size_t idx = 0;
    for (std::size_t step = 0; step < n; ++step, idx = (idx + stride) % n) {
        const IntVec& p = input[idx];
        bool inside = !facets.empty();
        for (const IntVec& f : facets) {
            if (dot(f, p) < 0) {
                inside = false;
                break;
            }
        }
        if (inside) continue;
        buffer.push_back(p);
        if (buffer.size() >= chunk) {
            reduce();
            if (observe) observe(step + 1, current.size(), facets.size());
        }
    }
    if (!buffer.empty()) reduce();
    if (observe) observe(n, current.size(), facets.size());

    HullReduction out;
    std::sort(current.begin(), current.end(), lex_less);
    std::sort(facets.begin(), facets.end(), lex_less);
    for (IntVec& v : current) out.extremal.push_back(Ray(std::move(v)));
    for (IntVec& f : facets) out.facets.push_back(Halfspace(std::move(f)));
    return out;
}

// --- independent enumeration oracle -------------------------------------------

/**
 * Brute-force extremal ray enumeration: every (dim-1)-subset of constraint
 * normals of rank dim-1 pins down a line; its feasible orientation, if any,
 * is an extremal ray. Only intended as an independent check of the
 * double-description engine at small sizes.
 */
inline std::vector<Ray> brute_force_rays(std::size_t dim, const std::vector<Halfspace>& halfspaces)
{
    std::vector<IntVec> rows;
    for (const Halfspace& h : halfspaces) rows.push_back(h.normal);
    rows = detail::canonical_rows(std::move(rows));
    if (dim > 6 || rows.size() > 20) throw TooLargeError();
    detail::require_pointed(dim, rows);

    const std::size_t m = rows.size();
    const std::size_t k = dim - 1;
    std::vector<IntVec> found;
    if (k == 0) {
        // Pointed line: the single feasible direction.
        for (const Int s : {1, -1}) {
            IntVec cand{Int(s)};
            if (std::all_of(rows.begin(), rows.end(),
                            [&](const IntVec& row) { return dot(row, cand) >= 0; }))
                found.push_back(std::move(cand));
        }
        std::vector<Ray> out;
        for (IntVec& v : found) out.push_back(Ray(std::move(v)));
        return out;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const auto advance = [&]() -> bool {
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    if (k > m) return {};
    do {
        RatMat sub;
        for (std::size_t i : idx) sub.push_back(to_rat(rows[i]));
        const std::vector<RatVec> ker = kernel_basis(sub);
        if (ker.size() != 1) continue;
        IntVec cand = primitive(ker[0]);
        bool ok_pos = true, ok_neg = true;
        for (const IntVec& row : rows) {
            const Int s = dot(row, cand);
            if (s < 0) ok_pos = false;
            if (s > 0) ok_neg = false;
            if (!ok_pos && !ok_neg) break;
        }
        if (!ok_pos && !ok_neg) continue;
        if (ok_neg && !ok_pos)
            for (Int& x : cand) x = -x;
        found.push_back(std::move(cand));
    } while (k > 0 && advance());

    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<Ray> out;
    for (IntVec& v : found) out.push_back(Ray(std::move(v)));
    return out;
}

}  // namespace cicone
