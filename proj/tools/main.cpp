#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bkit/report.hpp"
#include "bkit/runner.hpp"
#include "bkit/specfile.hpp"

namespace {

struct CommonOptions {
    std::string spec_path;
    std::string out_path;
    int degree = 0;
    int nodes = 0;
    int grid = 0;
    double tol_scale = 0.0;
    unsigned seed = 1;
};

int execute(const std::string& command, const CommonOptions& opt) {
    bkit::spec::DomainSpecFile spec;
    try {
        spec = bkit::spec::parse_spec_file(opt.spec_path);
    } catch (const std::exception& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    }
    if (opt.degree > 0) spec.solver.degree = opt.degree;
    if (opt.nodes > 0) spec.solver.nodes = opt.nodes;
    if (opt.grid > 0) spec.solver.grid = opt.grid;
    if (opt.tol_scale > 0) spec.solver.tol_scale = opt.tol_scale;

    std::vector<bkit::report::ReportRow> rows;
    try {
        rows = bkit::run::run_command(command, spec, opt.seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }

    const std::string title = command + " on " + spec.kind_name() + " spec";
    bkit::report::write_report(std::cout, title, rows);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "cannot write '" << opt.out_path << "'\n";
            return 2;
        }
        bkit::report::write_report(out, title, rows);
    }
    return bkit::report::all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "bergmankit: Bergman/Szego kernels, Green's functions and minimal-domain "
        "classification on planar domains"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string chosen;
    for (const std::string& name : bkit::run::command_names()) {
        auto* sub = app.add_subcommand(name, "run the '" + name + "' verification suite");
        sub->add_option("--spec", opt.spec_path, "domain spec file")->required();
        sub->add_option("--out", opt.out_path, "write the report to this path");
        sub->add_option("--degree", opt.degree, "basis truncation degree override");
        sub->add_option("--nodes", opt.nodes, "boundary nodes per curve override");
        sub->add_option("--grid", opt.grid, "scan grid resolution override");
        sub->add_option("--tol-scale", opt.tol_scale, "tolerance scale override");
        sub->add_option("--seed", opt.seed, "sample-point seed");
        sub->callback([&chosen, name]() { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return execute(chosen, opt);
}
