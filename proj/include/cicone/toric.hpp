/**
 * Smooth complete toric threefolds from fan data: validation, star
 * subdivisions (torus-invariant blow-ups), the divisor class group in a
 * chosen basis of ray classes, wall curve classes, and products of invariant
 * divisors. Everything needed to run the cone comparison on a fan.
 *
 * Conventions: rays are primitive integer 3-vectors; maximal cones are index
 * triples; a wall is a ray pair lying in exactly two maximal cones. Curve
 * classes are written in the basis dual to the chosen divisor basis, so the
 * k-th coordinate of a curve class is its intersection number with the k-th
 * basis divisor.
 */
#pragma once

#include <array>
#include <map>
#include <string>

#include "cone.hpp"

namespace cicone::toric {

struct NotAFaceError : std::runtime_error {
    NotAFaceError() : std::runtime_error("the given rays do not span a cone of the fan") {}
};

struct BadRError : std::runtime_error {
    BadRError() : std::runtime_error("torus-invariant centers exist only for r between 1 and 4")
    {
    }
};

struct SingularBasisError : std::runtime_error {
    SingularBasisError() : std::runtime_error("chosen divisor classes are linearly dependent") {}
};

using ToricDivisorClass = RatVec;  // coordinates in the chosen basis of ray classes
using ToricCurveClass = RatVec;   // coordinates in the intersection-dual basis

struct Fan {
    std::vector<IntVec> rays;                  // primitive integer 3-vectors
    std::vector<std::array<int, 3>> max_cones;  // ray index triples
};

/// A wall: ray pair (a,b) together with the opposite ray of each of the two
/// incident maximal cones.
struct Wall {
    int a, b;
    int c, c_prime;
};

struct FanDiagnostics {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// --- basic fan machinery -----------------------------------------------------

inline Int det3(const IntVec& u, const IntVec& v, const IntVec& w)
{
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
}

inline std::vector<Wall> walls(const Fan& fan)
{
    std::map<std::pair<int, int>, std::vector<int>> opposite;
    for (const auto& mc : fan.max_cones) {
        for (int i = 0; i < 3; ++i) {
            int a = mc[(i + 1) % 3], b = mc[(i + 2) % 3];
            if (a > b) std::swap(a, b);
            opposite[{a, b}].push_back(mc[i]);
        }
    }
    std::vector<Wall> out;
    for (const auto& [pair, opp] : opposite) {
        if (opp.size() != 2) continue;  // validate() reports this case
        out.push_back({pair.first, pair.second, std::min(opp[0], opp[1]),
                       std::max(opp[0], opp[1])});
    }
    return out;
}

/**
 * Structural checks: primitive distinct rays, unimodular (hence smooth,
 * simplicial, full-dimensional) maximal cones, every wall in exactly two
 * maximal cones, and a connected wall graph. The wall conditions stand in
 * for completeness; all fans built by this module are complete.
 */
inline FanDiagnostics validate(const Fan& fan)
{
    FanDiagnostics diag;
    const int n = static_cast<int>(fan.rays.size());
    for (int i = 0; i < n; ++i) {
        const IntVec& u = fan.rays[i];
        if (u.size() != 3) {
            diag.issues.push_back("ray " + std::to_string(i) + " is not a 3-vector");
            return diag;
        }
        if (is_zero(u)) {
            diag.issues.push_back("ray " + std::to_string(i) + " is zero");
            continue;
        }
        if (primitive(u) != u)
            diag.issues.push_back("ray " + std::to_string(i) + " is not primitive");
        for (int j = 0; j < i; ++j)
            if (fan.rays[j] == u)
                diag.issues.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) +
                                      " coincide");
    }
    if (!diag.issues.empty()) return diag;

    std::set<std::array<int, 3>> seen;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::array<int, 3> mc = fan.max_cones[c];
        std::sort(mc.begin(), mc.end());
        if (mc[0] < 0 || mc[2] >= n || mc[0] == mc[1] || mc[1] == mc[2]) {
            diag.issues.push_back("maximal cone " + std::to_string(c) + " has bad ray indices");
            continue;
        }
        if (!seen.insert(mc).second)
            diag.issues.push_back("maximal cone " + std::to_string(c) + " repeats an earlier one");
        const Int d = det3(fan.rays[mc[0]], fan.rays[mc[1]], fan.rays[mc[2]]);
        if (d != 1 && d != -1)
            diag.issues.push_back("maximal cone " + std::to_string(c) +
                                  " is not smooth (|det| = " + d.str() + ")");
    }
    if (!diag.issues.empty()) return diag;

    std::map<std::pair<int, int>, std::vector<std::size_t>> incident;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& mc = fan.max_cones[c];
        for (int i = 0; i < 3; ++i) {
            int a = mc[(i + 1) % 3], b = mc[(i + 2) % 3];
            if (a > b) std::swap(a, b);
            incident[{a, b}].push_back(c);
        }
    }
    for (const auto& [pair, cones] : incident)
        if (cones.size() != 2)
            diag.issues.push_back("wall {" + std::to_string(pair.first) + "," +
                                  std::to_string(pair.second) + "} lies in " +
                                  std::to_string(cones.size()) + " maximal cones");
    if (!diag.issues.empty()) return diag;

    // connectivity of the wall graph
    std::vector<bool> visited(fan.max_cones.size(), false);
    std::vector<std::size_t> stack{0};
    visited[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        const auto& mc = fan.max_cones[c];
        for (int i = 0; i < 3; ++i) {
            int a = mc[(i + 1) % 3], b = mc[(i + 2) % 3];
            if (a > b) std::swap(a, b);
            for (std::size_t other : incident[{a, b}]) {
                if (!visited[other]) {
                    visited[other] = true;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
    }
    if (count != fan.max_cones.size()) diag.issues.push_back("wall graph is not connected");
    return diag;
}

// --- blow-ups -------------------------------------------------------------------

/**
 * Star subdivision at the cone spanned by 2 or 3 ray indices: inserts the sum
 * of the generators as a new ray and replaces every incident maximal cone by
 * the cones obtained by substituting the new ray for one generator.
 */
inline Fan star_subdivide(const Fan& fan, std::vector<int> face)
{
    std::sort(face.begin(), face.end());
    if (face.size() != 2 && face.size() != 3) throw NotAFaceError();
    const auto contains_face = [&](const std::array<int, 3>& mc) {
        return std::all_of(face.begin(), face.end(), [&](int f) {
            return mc[0] == f || mc[1] == f || mc[2] == f;
        });
    };
    std::vector<std::size_t> incident;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
        if (contains_face(fan.max_cones[c])) incident.push_back(c);
    if (incident.empty()) throw NotAFaceError();
    if (face.size() == 3 && incident.size() != 1) throw NotAFaceError();

    Fan out;
    out.rays = fan.rays;
    IntVec sum(3, Int(0));
    for (int f : face) {
        if (f < 0 || static_cast<std::size_t>(f) >= fan.rays.size()) throw NotAFaceError();
        for (int j = 0; j < 3; ++j) sum[j] += fan.rays[f][j];
    }
    const int new_ray = static_cast<int>(out.rays.size());
    out.rays.push_back(std::move(sum));

    std::size_t next_incident = 0;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        if (next_incident < incident.size() && incident[next_incident] == c) {
            ++next_incident;
            for (int f : face) {
                std::array<int, 3> nc = fan.max_cones[c];
                for (int& x : nc)
                    if (x == f) x = new_ray;
                std::sort(nc.begin(), nc.end());
                out.max_cones.push_back(nc);
            }
        } else {
            out.max_cones.push_back(fan.max_cones[c]);
        }
    }
    return out;
}

/// The standard fan of projective 3-space.
inline Fan p3_fan()
{
    Fan fan;
    fan.rays = {IntVec{Int(-1), Int(-1), Int(-1)}, IntVec{Int(1), Int(0), Int(0)},
                IntVec{Int(0), Int(1), Int(0)}, IntVec{Int(0), Int(0), Int(1)}};
    fan.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return fan;
}

/**
 * Torus-invariant model of the blow-up of projective 3-space at r points and
 * the lines between them, r <= 4: the points are (the maximal cones of) r
 * torus-fixed points, the lines their pairwise intersections. Blow-ups run in
 * order of increasing dimension of the centers: all points first, then all
 * lines, each group in index order.
 */
inline Fan kapranov_fan(int r)
{
    if (r < 1 || r > 4) throw BadRError();
    Fan fan = p3_fan();
    const std::vector<std::array<int, 3>> points(fan.max_cones.begin(),
                                                 fan.max_cones.begin() + r);
    for (const auto& p : points) fan = star_subdivide(fan, {p[0], p[1], p[2]});
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            std::vector<int> shared;
            for (int x : points[i])
                for (int y : points[j])
                    if (x == y) shared.push_back(x);
            fan = star_subdivide(fan, shared);
        }
    }
    return fan;
}

// --- divisor class group -----------------------------------------------------------

/// The three relations among ray divisor classes: for each lattice coordinate
/// j, sum over rays of <e_j, u_rho> [D_rho] = 0.
inline std::array<IntVec, 3> relations(const Fan& fan)
{
    std::array<IntVec, 3> rel;
    for (int j = 0; j < 3; ++j) {
        rel[j].resize(fan.rays.size());
        for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) rel[j][rho] = fan.rays[rho][j];
    }
    return rel;
}

struct BasisChoice {
    std::vector<int> ray_indices;  // size = #rays - 3
};

/// Greedy default: take ray classes from the highest index downward while
/// they stay independent modulo the relations; reported in increasing order.
inline BasisChoice default_basis(const Fan& fan)
{
    const std::size_t n = fan.rays.size();
    const auto rel = relations(fan);
    // [e_i | relations] as columns; a candidate set is independent iff adding
    // its unit columns keeps the column rank growing.
    std::vector<int> chosen;
    IntRankAccumulator acc(n);
    for (const IntVec& r : rel) acc.add(r);
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
        IntVec unit(n, Int(0));
        unit[static_cast<std::size_t>(i)] = 1;
        if (acc.add(unit)) chosen.push_back(i);
    }
    std::sort(chosen.begin(), chosen.end());
    return {std::move(chosen)};
}

/**
 * Coordinates of the class of the ray divisor D_i in the chosen basis,
 * obtained by reducing modulo the three lattice relations.
 */
inline ToricDivisorClass divisor_in_basis(const Fan& fan, const BasisChoice& basis, int ray)
{
    const std::size_t n = fan.rays.size();
    const std::size_t k = basis.ray_indices.size();
    const auto rel = relations(fan);
    // e_ray = sum_b x_b e_b + sum_j y_j rel_j, solved for (x, y).
    RatMat a(n, RatVec(k + 3, Rat(0)));
    for (std::size_t col = 0; col < k; ++col)
        a[static_cast<std::size_t>(basis.ray_indices[col])][col] = 1;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t row = 0; row < n; ++row) a[row][k + j] = rel[j][row];
    RatVec b(n, Rat(0));
    b[static_cast<std::size_t>(ray)] = 1;
    {
        RatMat chk = a;
        if (rank(std::move(chk)) != k + 3) throw SingularBasisError();
    }
    const auto sol = solve_linear(a, b);
    if (!sol) throw SingularBasisError();
    return RatVec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
}

// --- curves and products --------------------------------------------------------------

/**
 * Class of the invariant curve of a wall, from the relation
 * u_c + u_c' + alpha u_a + beta u_b = 0: the wall curve meets D_c and D_c'
 * once, D_a with multiplicity alpha and D_b with multiplicity beta. On a
 * smooth fan alpha and beta are integers.
 */
inline ToricCurveClass wall_curve_class(const Fan& fan, const Wall& w, const BasisChoice& basis)
{
    RatMat a(3, RatVec(2));
    RatVec b(3);
    for (int j = 0; j < 3; ++j) {
        a[static_cast<std::size_t>(j)][0] = fan.rays[static_cast<std::size_t>(w.a)][j];
        a[static_cast<std::size_t>(j)][1] = fan.rays[static_cast<std::size_t>(w.b)][j];
        b[static_cast<std::size_t>(j)] = -(Rat(fan.rays[static_cast<std::size_t>(w.c)][j]) +
                                           Rat(fan.rays[static_cast<std::size_t>(w.c_prime)][j]));
    }
    const RatVec coeff = *solve_linear(a, b);
    RatVec numbers(fan.rays.size(), Rat(0));  // D_rho . V(wall), all rays
    numbers[static_cast<std::size_t>(w.c)] = 1;
    numbers[static_cast<std::size_t>(w.c_prime)] = 1;
    numbers[static_cast<std::size_t>(w.a)] = coeff[0];
    numbers[static_cast<std::size_t>(w.b)] = coeff[1];
    ToricCurveClass out(basis.ray_indices.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = numbers[static_cast<std::size_t>(basis.ray_indices[i])];
    return out;
}

/// All ray divisor classes and all wall curve classes.
inline std::pair<std::vector<ToricDivisorClass>, std::vector<ToricCurveClass>>
eff_and_ne_generators(const Fan& fan, const BasisChoice& basis)
{
    std::vector<ToricDivisorClass> eff;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        eff.push_back(divisor_in_basis(fan, basis, static_cast<int>(i)));
    std::vector<ToricCurveClass> ne;
    for (const Wall& w : walls(fan)) ne.push_back(wall_curve_class(fan, w, basis));
    return {std::move(eff), std::move(ne)};
}

namespace detail {

inline std::array<Int, 3> ext_gcd(const Int& a, const Int& b)
{
    // returns (g, x, y) with x a + y b = g >= 0
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

}  // namespace detail

/// A deterministic integer vector m with <m, u> = -1 for primitive u,
/// assembled from the extended gcd of the coordinates.
inline IntVec dual_pairing_vector(const IntVec& u)
{
    const auto [g01, x, y] = detail::ext_gcd(u[0], u[1]);
    const auto [g, p, q] = detail::ext_gcd(g01, u[2]);
    // g = 1 since u is primitive
    return IntVec{-(p * x), -(p * y), -q};
}

/**
 * Product of two prime invariant divisors as a curve class. For distinct
 * rays this is the wall class (zero when the rays span no cone); a square
 * D_i^2 is rewritten through an auxiliary vector m with <m, u_i> = -1 as
 * sum over other rays of <m, u_rho> D_i . D_rho, which is independent of the
 * choice of m.
 */
inline ToricCurveClass prime_product_with_m(const Fan& fan, const BasisChoice& basis, int i,
                                            const IntVec& m)
{
    const std::vector<Wall> ws = walls(fan);
    const std::size_t k = basis.ray_indices.size();
    ToricCurveClass out(k, Rat(0));
    for (const Wall& w : ws) {
        int other = -1;
        if (w.a == i)
            other = w.b;
        else if (w.b == i)
            other = w.a;
        else
            continue;
        const Int scale = dot(m, fan.rays[static_cast<std::size_t>(other)]);
        if (scale == 0) continue;
        const ToricCurveClass wc = wall_curve_class(fan, w, basis);
        for (std::size_t t = 0; t < k; ++t) out[t] += Rat(scale) * wc[t];
    }
    return out;
}

inline ToricCurveClass prime_product(const Fan& fan, const BasisChoice& basis, int i, int j)
{
    if (i != j) {
        for (const Wall& w : walls(fan))
            if ((w.a == i && w.b == j) || (w.a == j && w.b == i))
                return wall_curve_class(fan, w, basis);
        return ToricCurveClass(basis.ray_indices.size(), Rat(0));
    }
    return prime_product_with_m(fan, basis, i, dual_pairing_vector(fan.rays[static_cast<std::size_t>(i)]));
}

/// Bilinear extension of prime_product over basis coordinates.
inline ToricCurveClass class_product(const Fan& fan, const BasisChoice& basis,
                                     const ToricDivisorClass& x, const ToricDivisorClass& y)
{
    const std::size_t k = basis.ray_indices.size();
    ToricCurveClass out(k, Rat(0));
    for (std::size_t a = 0; a < k; ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < k; ++b) {
            if (y[b] == 0) continue;
            const ToricCurveClass p =
                prime_product(fan, basis, basis.ray_indices[a], basis.ray_indices[b]);
            for (std::size_t t = 0; t < k; ++t) out[t] += x[a] * y[b] * p[t];
        }
    }
    return out;
}

/**
 * Precomputed product structure for one fan and basis: the pairwise products
 * of basis divisors as integer curve vectors, for the repeated products the
 * comparison algorithm needs.
 */
struct ToricProducts {
    Fan fan;
    BasisChoice basis;
    std::vector<std::vector<IntVec>> table;  // k x k integer curve vectors

    ToricProducts(Fan f, BasisChoice b) : fan(std::move(f)), basis(std::move(b))
    {
        const std::size_t k = basis.ray_indices.size();
        table.assign(k, std::vector<IntVec>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b2 = 0; b2 < k; ++b2) {
                const ToricCurveClass p =
                    prime_product(fan, basis, basis.ray_indices[a], basis.ray_indices[b2]);
                IntVec row(k);
                for (std::size_t t = 0; t < k; ++t) {
                    // intersection numbers of invariant divisors are integers
                    row[t] = boost::multiprecision::numerator(p[t]);
                    if (boost::multiprecision::denominator(p[t]) != 1)
                        throw std::logic_error("non-integral prime divisor product");
                }
                table[a][b2] = std::move(row);
            }
    }

    IntVec product(const IntVec& x, const IntVec& y) const
    {
        const std::size_t k = table.size();
        IntVec out(k, Int(0));
        for (std::size_t a = 0; a < k; ++a) {
            if (x[a] == 0) continue;
            for (std::size_t b = 0; b < k; ++b) {
                if (y[b] == 0) continue;
                const Int scale = x[a] * y[b];
                for (std::size_t t = 0; t < k; ++t) out[t] += scale * table[a][b][t];
            }
        }
        return out;
    }
};

}  // namespace cicone::toric
