#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "painleve/runner.hpp"

using namespace painleve;

int main(int argc, char** argv) {
    CLI::App app{
        "painleve-verify: symbolic-numeric verification of the coupled Painleve systems of "
        "types D5(1), B4(1), D4(2), B3(1) and A4(1)"};

    std::string system_arg = "all";
    std::vector<std::string> suite_arg;
    uint64_t seed = 0;
    int points = 25;
    int series_order = 6;
    double rel_tol = 1e-10;
    std::string format = "json";
    std::string out_path;
    std::string export_dir;

    app.add_option("--system", system_arg, "system subset: d5, b4, d4_2, b3, a4 or all")
        ->capture_default_str();
    app.add_option("--suite", suite_arg,
                   "suites to run: relations symmetry divisors charts translations "
                   "degenerations subgroup-limits numeric (default: all symbolic suites)")
        ->delimiter(',');
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--points", points, "points per identity test")->capture_default_str();
    app.add_option("--series-order", series_order, "eps series truncation order")
        ->capture_default_str();
    app.add_option("--rel-tol", rel_tol, "integrator relative tolerance")
        ->capture_default_str();
    app.add_option("--format", format, "report format: json or markdown")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--export-trajectories", export_dir,
                   "write one CSV trajectory per numeric flow-commutation check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.points = points;
    cfg.series_order = series_order;
    cfg.rel_tol = rel_tol;
    cfg.export_dir = export_dir;

    if (system_arg == "all") {
        cfg.systems = {SystemId::D5, SystemId::B4, SystemId::D4_2, SystemId::B3, SystemId::A4};
    } else {
        auto id = system_from_name(system_arg);
        if (!id) {
            std::cerr << "unknown system: " << system_arg << "\n";
            return 2;
        }
        cfg.systems = {*id};
    }

    if (suite_arg.empty()) {
        // all symbolic suites; numeric runs only on request
        cfg.suites = {"relations",    "symmetry",      "divisors",       "charts",
                      "translations", "degenerations", "subgroup-limits"};
    } else {
        for (const auto& s : suite_arg) {
            const auto& known = SuiteConfig::known_suites();
            if (std::find(known.begin(), known.end(), s) == known.end()) {
                std::cerr << "unknown suite: " << s << "\n";
                return 2;
            }
        }
        cfg.suites = suite_arg;
    }
    if (cfg.suites.empty() || cfg.systems.empty()) {
        std::cerr << "empty suite or system selection\n";
        return 2;
    }
    if (points < 1 || series_order < 3) {
        std::cerr << "--points must be >= 1 and --series-order >= 3\n";
        return 2;
    }
    if (format != "json" && format != "markdown") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }

    VerificationReport report = run_suites(cfg);

    std::string rendered = (format == "json") ? render_json(report) : render_markdown(report);

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }

    std::cerr << "checks: " << report.records.size() << ", pass "
              << report.count(CheckStatus::Pass) << ", fail " << report.count(CheckStatus::Fail)
              << ", indeterminate " << report.count(CheckStatus::Indeterminate) << ", warning "
              << report.count(CheckStatus::Warning) << "\n";
    return report.all_passed() ? 0 : 1;
}
