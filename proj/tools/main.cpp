#include <CLI11.hpp>

#include <iostream>

#include "zhc/json_io.hpp"
#include "zhc/presets.hpp"

namespace {

int finish(const zhc::Report& report, const std::string& report_path) {
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.pass && !c.witness.empty()) std::cout << "  (" << c.witness << ")";
        std::cout << "\n";
    }
    for (const auto& [name, table] : report.dims) {
        std::cout << name << ":";
        for (int d : table) std::cout << " " << d;
        std::cout << "\n";
    }
    if (!report_path.empty()) zhc::write_report(report, report_path);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for Harish-Chandra projections of U(g) (x) V and Zhelobenko operators"};
    app.require_subcommand(1);

    std::string algebra = "sl2", module = "adjoint", report_path, input_path;
    std::uint64_t seed = 1;
    int degree = 3, j_max = 5, samples = 0, simple_index = 1;

    auto add_common = [&](CLI::App* cmd, bool with_module) {
        cmd->add_option("--algebra", algebra, "Algebra preset (sl2|sl3|gl2|sl2xsl2) or JSON path");
        if (with_module) cmd->add_option("--module", module, "Module preset (adjoint|natural|trivial|symN) or JSON path");
        cmd->add_option("--report", report_path, "Write a JSON report to this path");
        cmd->add_option("--seed", seed, "Seed for randomized checks");
    };

    CLI::App* check = app.add_subcommand("check", "Run a verification suite");
    check->require_subcommand(1);

    CLI::App* gauss = check->add_subcommand("gauss", "Hypergeometric evaluation of xi on isotypic vectors");
    gauss->add_option("--j-max", j_max, "Largest spin to verify");
    gauss->add_option("--report", report_path, "Write a JSON report to this path");

    CLI::App* braid = check->add_subcommand("braid", "Braid relations of the Zhelobenko operators");
    add_common(braid, true);
    braid->add_option("--samples", samples, "Number of random elements (default 20)");

    CLI::App* xisq = check->add_subcommand("xi-square", "Squares of the Zhelobenko operators");
    add_common(xisq, true);
    xisq->add_option("--samples", samples, "Number of random elements (default 50)");

    CLI::App* hc = check->add_subcommand("hc", "Filtration-wise Harish-Chandra image verification");
    add_common(hc, true);
    hc->add_option("--degree", degree, "Filtration degree bound");

    CLI::App* chev = check->add_subcommand("chevalley", "Graded restriction criterion and Broer condition");
    add_common(chev, true);
    chev->add_option("--degree", degree, "Degree bound");

    CLI::App* project = app.add_subcommand("project", "Harish-Chandra projection of an element of U(g) (x) V");
    add_common(project, true);
    project->add_option("--input", input_path, "Element JSON file")->required();

    CLI::App* xi_cmd = app.add_subcommand("xi", "Apply a Zhelobenko operator to an element of Z");
    add_common(xi_cmd, true);
    xi_cmd->add_option("--i", simple_index, "Simple root index (1-based)");
    xi_cmd->add_option("--input", input_path, "Element JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gauss->parsed()) return finish(zhc::check_gauss(j_max), report_path);

        const zhc::ReductiveLieAlgebra alg = zhc::load_algebra(algebra);
        const zhc::FiniteModule mod = zhc::load_module(alg, module);

        if (braid->parsed()) return finish(zhc::check_braid(alg, mod, seed, samples > 0 ? samples : 20), report_path);
        if (xisq->parsed())
            return finish(zhc::check_xi_square(alg, mod, seed, samples > 0 ? samples : 50), report_path);
        if (hc->parsed()) return finish(zhc::check_hc(alg, mod, degree), report_path);
        if (chev->parsed()) return finish(zhc::check_chevalley(alg, mod, degree), report_path);

        if (project->parsed()) {
            const zhc::BimoduleElement elem = zhc::load_element(alg, mod, input_path);
            const zhc::ZElement image = zhc::hc_project(alg, mod, elem);
            std::cout << zhc::z_str(mod, image) << "\n";
            zhc::Report rep;
            rep.command = "project";
            rep.inputs = {{"algebra", algebra}, {"module", module}, {"input", input_path}, {"result", zhc::z_str(mod, image)}};
            rep.add("projection-computed", true);
            if (!report_path.empty()) zhc::write_report(rep, report_path);
            return 0;
        }
        if (xi_cmd->parsed()) {
            if (simple_index < 1 || simple_index > alg.rank())
                throw std::invalid_argument("--i must be in 1.." + std::to_string(alg.rank()));
            const zhc::BimoduleElement elem = zhc::load_element(alg, mod, input_path);
            // xi acts on the coset of the element in Z.
            const zhc::ZElement z = zhc::hc_project(alg, mod, elem);
            const zhc::ZElement image = zhc::xi(alg, mod, simple_index - 1, z);
            std::cout << zhc::z_str(mod, image) << "\n";
            zhc::Report rep;
            rep.command = "xi";
            rep.inputs = {{"algebra", algebra},
                          {"module", module},
                          {"input", input_path},
                          {"i", std::to_string(simple_index)},
                          {"result", zhc::z_str(mod, image)}};
            rep.add("xi-computed", true);
            if (!report_path.empty()) zhc::write_report(rep, report_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
