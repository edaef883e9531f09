/**
 * The cone comparison: generate the pairwise products of the extremal nef
 * rays through a product oracle, test each extremal movable ray for being a
 * non-trivial multiple of a product, and assemble the verdict together with
 * separating certificates for the rays that fail.
 *
 * For a threefold the complete intersection cone is spanned by the pairwise
 * products of nef classes, and it equals the movable cone exactly when every
 * extremal movable ray is a positive multiple of one of those products.
 */
#pragma once

#include <functional>

#include "cone.hpp"
#include "kapranov.hpp"

namespace cicone::compare {

/// Pairwise intersection product in dual-basis coordinates; bilinear and
/// symmetric. Bound to the blow-up product table or to a toric product table.
using ProductOracle = std::function<IntVec(const IntVec&, const IntVec&)>;

/// Raised when a product of nef classes violates a movable inequality. The
/// complete intersection cone always lies in the movable cone, so this
/// signals inconsistent input data, not a mathematical possibility.
struct CiNotInMovError : std::runtime_error {
    CiNotInMovError()
        : std::runtime_error("a product of nef rays violates a movable inequality")
    {
    }
};

struct Generators {
    std::vector<Ray> rays;        // canonical, deduplicated, sorted
    std::size_t zeros_dropped = 0;
};

/// All products of pairs of nef extremal rays, canonicalized through
/// primitive(); zero products are dropped but counted.
inline Generators nef_power_generators(const std::vector<Ray>& nef_rays,
                                       const ProductOracle& oracle)
{
    Generators out;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < nef_rays.size(); ++i) {
        for (std::size_t j = i; j < nef_rays.size(); ++j) {
            IntVec p = oracle(nef_rays[i].v, nef_rays[j].v);
            if (is_zero(p)) {
                ++out.zeros_dropped;
                continue;
            }
            make_primitive(p);
            seen.insert(std::move(p));
        }
    }
    out.rays.reserve(seen.size());
    for (const IntVec& v : seen) out.rays.push_back(Ray(v));
    return out;
}

/// The movable extremal rays that are not a non-trivial multiple of any
/// product generator. `generators` must be canonical and sorted.
inline std::vector<Ray> not_in_ci(const std::vector<Ray>& mov_rays,
                               const std::vector<Ray>& generators)
{
    std::vector<Ray> out;
    for (const Ray& gamma : mov_rays)
        if (!std::binary_search(generators.begin(), generators.end(), gamma)) out.push_back(gamma);
    std::sort(out.begin(), out.end());
    return out;
}

enum class Verdict { equal, strict };

/// A movable extremal ray outside the complete intersection cone together
/// with a facet of that cone separating it.
struct Certificate {
    Ray gamma;
    Halfspace facet;
};

struct CompareReport {
    std::string variety;
    std::size_t dim = 0;
    std::vector<Ray> nef_rays;
    std::vector<Ray> mov_rays;
    std::vector<Ray> product_generators;
    std::size_t zero_products = 0;
    std::vector<Ray> not_in_ci;
    Verdict verdict = Verdict::equal;
    std::vector<Ray> ci_extremal_rays;
    std::vector<Ray> common_extremal_rays;
    std::vector<Certificate> certificates;
};

/**
 * Run the whole comparison. `mov_ineq` is the inequality description of the
 * movable cone, used both for the containment sanity check and implicitly as
 * the definition of the movable rays the caller passes in.
 */
inline CompareReport verdict_and_certificates(std::string variety, std::size_t dim,
                                              std::vector<Ray> nef_rays,
                                              std::vector<Ray> mov_rays,
                                              const ProductOracle& oracle,
                                              const std::vector<Halfspace>& mov_ineq)
{
    CompareReport report;
    report.variety = std::move(variety);
    report.dim = dim;
    std::sort(nef_rays.begin(), nef_rays.end());
    std::sort(mov_rays.begin(), mov_rays.end());
    report.nef_rays = std::move(nef_rays);
    report.mov_rays = std::move(mov_rays);

    Generators gens = nef_power_generators(report.nef_rays, oracle);
    report.zero_products = gens.zeros_dropped;
    report.product_generators = std::move(gens.rays);

    for (const Ray& g : report.product_generators)
        for (const Halfspace& h : mov_ineq)
            if (dot(h.normal, g.v) < 0) throw CiNotInMovError();

    report.not_in_ci = not_in_ci(report.mov_rays, report.product_generators);
    report.verdict = report.not_in_ci.empty() ? Verdict::equal : Verdict::strict;

    // Facets of the cone spanned by the products, then its extremal rays.
    std::vector<Halfspace> facets;
    bool full_dim = false;
    {
        IntRankAccumulator acc(dim);
        std::size_t rk = 0;
        for (const Ray& g : report.product_generators)
            if (acc.add(g.v) && ++rk == dim) break;
        full_dim = rk == dim;
    }
    if (full_dim) {
        HullReduction hull = incremental_hull(dim, report.product_generators);
        facets = std::move(hull.facets);
        report.ci_extremal_rays = std::move(hull.extremal);
    } else {
        facets = halfspaces_from_rays(dim, report.product_generators);
        for (const Ray& g : report.product_generators) {
            std::vector<const IntVec*> tight;
            for (const Halfspace& h : facets)
                if (dot(h.normal, g.v) == 0) tight.push_back(&h.normal);
            if (tight.size() + 1 < dim) continue;
            IntRankAccumulator acc(dim);
            for (const IntVec* row : tight)
                if (acc.add(*row) && acc.rank() + 1 == dim) break;
            if (acc.rank() + 1 == dim) report.ci_extremal_rays.push_back(g);
        }
    }

    for (const Ray& m : report.mov_rays)
        if (std::binary_search(report.ci_extremal_rays.begin(), report.ci_extremal_rays.end(),
                               m))
            report.common_extremal_rays.push_back(m);

    for (const Ray& gamma : report.not_in_ci) {
        const Halfspace* separating = nullptr;
        for (const Halfspace& h : facets) {
            if (dot(h.normal, gamma.v) < 0) {
                separating = &h;
                break;
            }
        }
        if (!separating)
            throw std::logic_error("ray outside the product cone has no separating facet");
        report.certificates.push_back({gamma, *separating});
    }
    return report;
}

/// True iff every ray reported outside the complete intersection cone pairs
/// strictly negatively with the given canonical class coordinates.
inline bool k_negativity_check(const CompareReport& report, const RatVec& canonical_coords)
{
    for (const Ray& gamma : report.not_in_ci)
        if (dot(canonical_coords, to_rat(gamma.v)) >= 0) return false;
    return true;
}

/**
 * The distinguished curve class 6 H* + 2(E_1* + .. + E_4*) + E_15* + E_25* +
 * E_35* on the five-point blow-up: checks that it is extremal in the movable
 * cone, appears among the extremal rays of the product cone, and is not a
 * positive multiple of the pullback of any movable extremal ray from the
 * four-point blow-up.
 */
inline bool both_extremal_not_pullback_check(const std::vector<Halfspace>& mov_ineq_x5,
                                             const std::vector<Ray>& ci_extremal_x5,
                                             const std::vector<Ray>& mov_rays_x4)
{
    const kapranov::KapranovSpace sp(5);
    RatVec g(sp.dim(), Rat(0));
    g[sp.h_index()] = 6;
    for (int i = 1; i <= 4; ++i) g[sp.e_index(i)] = 2;
    g[sp.e_index(1, 5)] = 1;
    g[sp.e_index(2, 5)] = 1;
    g[sp.e_index(3, 5)] = 1;
    const Ray gamma(g);

    Cone mov = Cone::from_halfspaces(sp.dim(), mov_ineq_x5);
    if (!is_extremal(mov, gamma)) return false;
    if (std::find(ci_extremal_x5.begin(), ci_extremal_x5.end(), gamma) == ci_extremal_x5.end())
        return false;
    for (const Ray& delta : mov_rays_x4) {
        const kapranov::CurveClass up =
            kapranov::pullback_l4_to_m06({kapranov::KapranovSpace(4), to_rat(delta.v)});
        if (is_positive_multiple(up.coords, to_rat(gamma.v))) return false;
    }
    return true;
}

}  // namespace cicone::compare
