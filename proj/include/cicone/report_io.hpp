/**
 * Deterministic report rendering and the file set a comparison run leaves
 * behind: `nef.rays`, `mov.rays`, `ci.generators`, `NotEq`, and `report`.
 * The same inputs always produce byte-identical files.
 */
#pragma once

#include <filesystem>

#include <json.hpp>

#include "cone_io.hpp"
#include "pipeline.hpp"

namespace cicone::pipeline {

enum class ReportFormat { text, structured };

namespace detail {

inline nlohmann::json rays_json(const std::vector<Ray>& rays)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const Ray& r : rays) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& x : r.v) row.push_back(x.str());
        arr.push_back(std::move(row));
    }
    return arr;
}

inline std::string ray_to_string(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace detail

/// Full machine-readable report. The product generator list is included
/// while it is small; above the cutoff only its count appears and the
/// complete list lives in the `ci.generators` file next to the report.
inline void write_structured_report(std::ostream& out, const RunOutcome& o)
{
    const compare::CompareReport& r = o.report;
    nlohmann::json j;
    j["variety"] = r.variety;
    j["dimension"] = r.dim;
    j["verdict"] = r.verdict == compare::Verdict::equal ? "equal" : "strict";
    j["counts"] = {{"nef_rays", r.nef_rays.size()},
                   {"mov_rays", r.mov_rays.size()},
                   {"product_generators", r.product_generators.size()},
                   {"zero_products", r.zero_products},
                   {"ci_extremal_rays", r.ci_extremal_rays.size()},
                   {"common_extremal_rays", r.common_extremal_rays.size()},
                   {"not_in_ci", r.not_in_ci.size()}};
    j["nef_rays"] = detail::rays_json(r.nef_rays);
    j["mov_rays"] = detail::rays_json(r.mov_rays);
    if (r.product_generators.size() <= 10000)
        j["product_generators"] = detail::rays_json(r.product_generators);
    else
        j["product_generators_file"] = "ci.generators";
    j["ci_extremal_rays"] = detail::rays_json(r.ci_extremal_rays);
    j["common_extremal_rays"] = detail::rays_json(r.common_extremal_rays);
    j["not_in_ci"] = detail::rays_json(r.not_in_ci);
    j["certificates"] = nlohmann::json::array();
    for (const compare::Certificate& c : r.certificates) {
        nlohmann::json cert;
        cert["ray"] = detail::rays_json({c.gamma})[0];
        cert["separating_facet"] = detail::rays_json({Ray(c.facet.normal)})[0];
        j["certificates"].push_back(std::move(cert));
    }
    if (o.k_negative) j["canonical_negativity"] = *o.k_negative;
    if (!o.cross_checks.empty()) {
        j["cross_checks"] = nlohmann::json::object();
        for (const CrossCheck& c : o.cross_checks) j["cross_checks"][c.name] = c.passed;
    }
    out << j.dump(2) << "\n";
}

/// Human-oriented summary.
inline void write_text_report(std::ostream& out, const RunOutcome& o)
{
    const compare::CompareReport& r = o.report;
    out << "variety: " << r.variety << "\n";
    out << "dimension of the class space: " << r.dim << "\n";
    out << "nef extremal rays: " << r.nef_rays.size() << "\n";
    out << "movable extremal rays: " << r.mov_rays.size() << "\n";
    out << "distinct nonzero pair products: " << r.product_generators.size() << " (plus "
        << r.zero_products << " zero products)\n";
    out << "extremal rays of the product cone: " << r.ci_extremal_rays.size() << "\n";
    out << "movable extremal rays shared with the product cone: "
        << r.common_extremal_rays.size() << "\n";
    out << "movable extremal rays outside the product cone: " << r.not_in_ci.size() << "\n";
    out << "verdict: "
        << (r.verdict == compare::Verdict::equal
                ? "the complete intersection cone equals the movable cone"
                : "strict inclusion: the movable cone is larger")
        << "\n";
    for (const compare::Certificate& c : r.certificates)
        out << "  outside ray " << detail::ray_to_string(c.gamma.v)
            << "  separated by facet " << detail::ray_to_string(c.facet.normal) << "\n";
    if (o.k_negative)
        out << "canonical pairing: "
            << (*o.k_negative ? "every outside ray pairs negatively with the canonical class"
                              : "canonical negativity FAILED")
            << "\n";
    for (const CrossCheck& c : o.cross_checks)
        out << "cross-check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << "\n";
}

/// Writes the five run artifacts into `dir` (created if needed).
inline void write_run_files(const std::filesystem::path& dir, const RunOutcome& o,
                            ReportFormat format)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const compare::CompareReport& r = o.report;
    {
        std::ofstream f(dir / "nef.rays");
        write_rays(f, r.dim, r.nef_rays);
    }
    {
        std::ofstream f(dir / "mov.rays");
        write_rays(f, r.dim, r.mov_rays);
    }
    {
        std::ofstream f(dir / "ci.generators");
        write_rays(f, r.dim, r.product_generators);
    }
    {
        std::ofstream f(dir / "NotEq");
        write_rays(f, r.dim, r.not_in_ci);
    }
    {
        std::ofstream f(dir / "report");
        if (format == ReportFormat::structured)
            write_structured_report(f, o);
        else
            write_text_report(f, o);
    }
}

}  // namespace cicone::pipeline
