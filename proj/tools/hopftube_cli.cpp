#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hopftube/errors.hpp"
#include "hopftube/report.hpp"
#include "hopftube/scenario.hpp"
#include "hopftube/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tube spectra, Hopf diagnostics and projective duality checks"};
    app.require_subcommand(0, 1);

    std::string config;
    std::string out_dir = "reports";
    unsigned long long seed = 0;
    double fd_step = 0.0;
    double tol = 0.0;

    CLI::App* run = app.add_subcommand("run", "run a canned scenario or a config file");
    run->add_option("config", config, "canned scenario name or path to a config file")
        ->required();
    run->add_option("--out", out_dir, "directory for the report files");
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--fd-step", fd_step, "override the finite-difference step");
    run->add_option("--tol", tol, "override the Hopf-defect tolerance");

    CLI::App* list = app.add_subcommand("list", "list the canned scenarios");
    CLI::App* version = app.add_subcommand("version", "print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (version->parsed()) {
        std::cout << hopftube::kVersion << "\n";
        return 0;
    }
    if (list->parsed()) {
        std::cout << hopftube::list_scenarios();
        return 0;
    }
    if (!run->parsed()) {
        std::cout << app.help();
        return 2;
    }

    try {
        const hopftube::Scenario sc = hopftube::resolve_scenario(config);
        hopftube::RunOverrides ov;
        if (run->count("--seed")) ov.seed = seed;
        if (run->count("--fd-step")) ov.fd_step = fd_step;
        if (run->count("--tol")) ov.tol = tol;

        const auto t0 = std::chrono::steady_clock::now();
        const hopftube::Report rep = hopftube::run_scenario(sc, ov);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();

        for (const auto& c : rep.checks) {
            std::cout << "  " << c.name << ": "
                      << (!c.applicable ? "INAPPLICABLE"
                                        : (c.passed ? "PASS" : "FAIL"))
                      << "\n";
        }
        const auto paths = hopftube::write_report_files(rep, out_dir);
        for (const auto& p : paths) std::cout << "wrote " << p << "\n";
        std::cout << "overall: " << (rep.overall_pass() ? "PASS" : "FAIL")
                  << " (" << ms << " ms)\n";
        return rep.overall_pass() ? 0 : 1;
    } catch (const hopftube::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hopftube::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
