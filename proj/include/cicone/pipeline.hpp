/**
 * Variety bundles and the end-to-end comparison pipeline shared by the
 * command-line tool and the acceptance suite: inequality systems plus a
 * product oracle per variety, ray enumeration, the comparison report, and
 * the optional internal cross-checks.
 */
#pragma once

#include <memory>

#include "compare.hpp"
#include "kapranov.hpp"
#include "toric.hpp"

namespace cicone::pipeline {

struct VarietyData {
    std::string id;
    std::size_t dim = 0;
    std::vector<Halfspace> nef_ineq;
    std::vector<Halfspace> mov_ineq;
    compare::ProductOracle oracle;
    std::optional<int> blowup_r;  // set for the built-in blow-up family
};

/// The built-in blow-up family member X_r in its Kapranov coordinates.
inline VarietyData blowup_variety(int r)
{
    VarietyData v;
    v.id = "x" + std::to_string(r);
    v.dim = kapranov::KapranovSpace(r).dim();
    v.nef_ineq = kapranov::nef_hrep(r);
    v.mov_ineq = kapranov::mov_hrep(r);
    v.oracle = [r](const IntVec& a, const IntVec& b) {
        return kapranov::pair_product_raw(r, a, b);
    };
    v.blowup_r = r;
    return v;
}

struct FanInvalidError : std::runtime_error {
    explicit FanInvalidError(const std::string& what) : std::runtime_error(what) {}
};

/// A smooth complete toric threefold given by its fan. The nef system is the
/// wall curve classes, the movable system the ray divisor classes.
inline VarietyData toric_variety(toric::Fan fan, std::optional<toric::BasisChoice> basis,
                                 std::string id)
{
    const toric::FanDiagnostics diag = toric::validate(fan);
    if (!diag.ok()) {
        std::string msg = "invalid fan:";
        for (const std::string& s : diag.issues) msg += "\n  " + s;
        throw FanInvalidError(msg);
    }
    toric::BasisChoice b = basis ? *basis : toric::default_basis(fan);
    if (b.ray_indices.size() != fan.rays.size() - 3)
        throw FanInvalidError("basis must name #rays - 3 ray indices");

    VarietyData v;
    v.id = std::move(id);
    v.dim = b.ray_indices.size();
    const auto [eff, ne] = toric::eff_and_ne_generators(fan, b);
    std::set<IntVec> seen;
    for (const RatVec& c : ne) {
        Halfspace h(c);
        if (seen.insert(h.normal).second) v.nef_ineq.push_back(std::move(h));
    }
    seen.clear();
    for (const RatVec& c : eff) {
        Halfspace h(c);
        if (seen.insert(h.normal).second) v.mov_ineq.push_back(std::move(h));
    }
    auto table = std::make_shared<toric::ToricProducts>(std::move(fan), std::move(b));
    v.oracle = [table](const IntVec& x, const IntVec& y) { return table->product(x, y); };
    return v;
}

struct CrossCheck {
    std::string name;
    bool passed;
};

struct RunOutcome {
    compare::CompareReport report;
    std::optional<bool> k_negative;  // only for the five-point blow-up
    std::vector<CrossCheck> cross_checks;
    int exit_code = 0;  // 0 cones equal, 10 strict inclusion
};

namespace detail {

inline bool same_ray_set(std::vector<Ray> a, std::vector<Ray> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace detail

/**
 * Enumerate both cones, run the comparison, and (per variety kind) the
 * requested consistency checks: the two duality cross-checks on the
 * five-point blow-up, agreement with the torus-invariant model for r <= 4,
 * and independence of the auxiliary vector for toric self-intersections.
 */
inline RunOutcome run_compare(const VarietyData& v, bool cross_check = false)
{
    RunOutcome out;
    const std::vector<Ray> nef_rays = rays_from_halfspaces(v.dim, v.nef_ineq);
    const std::vector<Ray> mov_rays = rays_from_halfspaces(v.dim, v.mov_ineq);
    out.report =
        compare::verdict_and_certificates(v.id, v.dim, nef_rays, mov_rays, v.oracle, v.mov_ineq);
    if (v.blowup_r == 5) {
        out.k_negative =
            compare::k_negativity_check(out.report, kapranov::canonical_class_m06().coords);
    }
    if (cross_check && v.blowup_r == 5) {
        std::vector<Ray> fcurves, effs;
        for (const kapranov::CurveClass& c : kapranov::fcurve_classes())
            fcurves.push_back(Ray(c.coords));
        for (const kapranov::DivisorClass& d : kapranov::eff_generators_m06())
            effs.push_back(Ray(d.coords));
        out.cross_checks.push_back(
            {"nef-duality", detail::same_ray_set(dual_rays(v.dim, fcurves), nef_rays)});
        out.cross_checks.push_back(
            {"mov-duality", detail::same_ray_set(dual_rays(v.dim, effs), mov_rays)});
    } else if (cross_check && v.blowup_r && *v.blowup_r <= 4) {
        const VarietyData tv =
            toric_variety(toric::kapranov_fan(*v.blowup_r), std::nullopt, v.id + "-fan");
        const RunOutcome to = run_compare(tv, false);
        out.cross_checks.push_back(
            {"toric-verdict", to.report.verdict == out.report.verdict});
        out.cross_checks.push_back(
            {"toric-nef-count", to.report.nef_rays.size() == out.report.nef_rays.size()});
        out.cross_checks.push_back(
            {"toric-mov-count", to.report.mov_rays.size() == out.report.mov_rays.size()});
    }
    out.exit_code = out.report.verdict == compare::Verdict::equal ? 0 : 10;
    return out;
}

/// Consistency check for a user fan: self-intersections recomputed with a
/// shifted auxiliary vector must agree.
inline bool m_independence_check(const toric::Fan& fan, const toric::BasisChoice& basis)
{
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const IntVec& u = fan.rays[i];
        const IntVec m = toric::dual_pairing_vector(u);
        IntVec m2 = m;
        // add a vector orthogonal to u
        IntVec shift{u[1], -u[0], Int(0)};
        if (is_zero(shift)) shift = IntVec{Int(0), u[2], -u[1]};
        for (int j = 0; j < 3; ++j) m2[static_cast<std::size_t>(j)] += shift[static_cast<std::size_t>(j)];
        if (toric::prime_product_with_m(fan, basis, static_cast<int>(i), m) !=
            toric::prime_product_with_m(fan, basis, static_cast<int>(i), m2))
            return false;
    }
    return true;
}

}  // namespace cicone::pipeline
