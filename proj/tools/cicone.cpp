// Command-line driver: pick a variety (a built-in blow-up or a user fan),
// enumerate its nef and movable cones, compare the movable cone with the
// cone of pairwise nef products, and leave the run artifacts on disk.
//
// Exit codes: 0 the cones are equal, 10 the inclusion is strict, 2 input or
// validation error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cicone/fan_io.hpp"
#include "cicone/pipeline.hpp"
#include "cicone/report_io.hpp"

namespace {

using namespace cicone;

struct Options {
    std::string variety;
    std::string fan_path;
    std::string basis;
    std::string out_dir = ".";
    std::string format = "text";
    bool cross_check = false;
};

std::optional<toric::BasisChoice> parse_basis(const std::string& basis)
{
    if (basis.empty()) return std::nullopt;
    toric::BasisChoice b;
    std::stringstream ss(basis);
    std::string tok;
    while (std::getline(ss, tok, ',')) b.ray_indices.push_back(std::stoi(tok));
    return b;
}

// Selector forms: x1..x5, l4 (= x4), m06 (= x5), toric:<path>, or a bare
// path given through --fan.
pipeline::VarietyData resolve_variety(const Options& opt)
{
    std::string sel = opt.variety;
    std::string fan_path = opt.fan_path;
    if (sel.rfind("toric:", 0) == 0) {
        fan_path = sel.substr(6);
        sel.clear();
    }
    if (!fan_path.empty()) {
        std::ifstream in(fan_path);
        if (!in) throw std::runtime_error("cannot open fan file '" + fan_path + "'");
        toric::Fan fan = toric::fan_from_json(in);
        const std::string id = std::filesystem::path(fan_path).stem().string();
        return pipeline::toric_variety(std::move(fan), parse_basis(opt.basis), id);
    }
    if (sel == "l4") sel = "x4";
    if (sel == "m06") sel = "x5";
    if (sel.size() == 2 && sel[0] == 'x' && sel[1] >= '1' && sel[1] <= '5')
        return pipeline::blowup_variety(sel[1] - '0');
    throw std::runtime_error("unknown variety '" + opt.variety +
                             "' (expected x1..x5, l4, m06, or toric:<fan file>)");
}

int run_command(const Options& opt)
{
    const pipeline::VarietyData data = resolve_variety(opt);
    pipeline::RunOutcome outcome = pipeline::run_compare(data, opt.cross_check);
    if (opt.cross_check && !data.blowup_r) {
        // for user fans: self-intersection consistency
        std::string fan_path = opt.fan_path;
        if (opt.variety.rfind("toric:", 0) == 0) fan_path = opt.variety.substr(6);
        std::ifstream in(fan_path);
        toric::Fan fan = toric::fan_from_json(in);
        const auto basis = parse_basis(opt.basis);
        outcome.cross_checks.push_back(
            {"m-independence",
             pipeline::m_independence_check(fan, basis ? *basis : toric::default_basis(fan))});
    }
    pipeline::write_run_files(opt.out_dir, outcome,
                              opt.format == "structured" ? pipeline::ReportFormat::structured
                                                         : pipeline::ReportFormat::text);
    for (const pipeline::CrossCheck& c : outcome.cross_checks) {
        if (!c.passed) {
            std::cerr << "cross-check '" << c.name << "' failed\n";
            return 2;
        }
    }
    std::cout << (outcome.report.verdict == compare::Verdict::equal ? "cones equal"
                                                                    : "strict inclusion")
              << "; artifacts written to " << opt.out_dir << "\n";
    return outcome.exit_code;
}

int export_command(const Options& opt, const std::string& which)
{
    const pipeline::VarietyData data = resolve_variety(opt);
    std::filesystem::create_directories(opt.out_dir);
    const std::filesystem::path path =
        std::filesystem::path(opt.out_dir) / (data.id + "." + which);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");

    if (which == "nef-ineq") {
        write_halfspaces(out, data.dim, data.nef_ineq);
    } else if (which == "mov-ineq") {
        write_halfspaces(out, data.dim, data.mov_ineq);
    } else if (which == "nef-rays") {
        write_rays(out, data.dim, rays_from_halfspaces(data.dim, data.nef_ineq));
    } else if (which == "mov-rays") {
        write_rays(out, data.dim, rays_from_halfspaces(data.dim, data.mov_ineq));
    } else if (which == "ne-rays" || which == "eff-rays") {
        const auto& ineq = which == "ne-rays" ? data.nef_ineq : data.mov_ineq;
        std::vector<IntVec> rows;
        for (const Halfspace& h : ineq) rows.push_back(h.normal);
        write_rays(out, data.dim, minimal_generators(data.dim, rows));
    } else {
        throw std::runtime_error("unknown export kind '" + which + "'");
    }
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "cicone: nef, movable, effective and Mori cones of blown-up projective "
        "threefolds, and the complete-intersection-vs-movable comparison"};
    app.require_subcommand(1);

    Options opt;
    std::string export_kind;

    CLI::App* run = app.add_subcommand("run", "run the full comparison for one variety");
    run->add_option("variety,--variety", opt.variety, "x1..x5, l4, m06, or toric:<fan file>");
    run->add_option("--fan", opt.fan_path, "fan file of a smooth complete toric threefold");
    run->add_option("--basis", opt.basis, "comma-separated ray indices for the divisor basis");
    run->add_option("--out", opt.out_dir, "output directory (default: current)");
    run->add_option("--format", opt.format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    run->add_flag("--cross-check", opt.cross_check,
                  "run the internal consistency checks for the chosen variety");

    CLI::App* exp = app.add_subcommand("export", "write one cone description to a file");
    exp->add_option("variety,--variety", opt.variety, "x1..x5, l4, m06, or toric:<fan file>");
    exp->add_option("which", export_kind,
                    "nef-ineq | mov-ineq | nef-rays | mov-rays | ne-rays | eff-rays")
        ->required();
    exp->add_option("--fan", opt.fan_path, "fan file of a smooth complete toric threefold");
    exp->add_option("--basis", opt.basis, "comma-separated ray indices for the divisor basis");
    exp->add_option("--out", opt.out_dir, "output directory (default: current)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(opt);
        return export_command(opt, export_kind);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
