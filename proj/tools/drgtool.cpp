#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "drg/app.hpp"
#include "drg/errors.hpp"

namespace {

int emit(const drg::app::CommandOutput& out) {
    std::cout << out.text;
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"distance-regular graph bound and matching toolkit"};
    cli.require_subcommand(1);

    drg::app::RunConfig cfg;
    cli.add_option("--seed", cfg.seed, "seed for randomized components");
    cli.add_option("--threads", cfg.threads, "worker threads (0 = all hardware threads)");
    cli.add_option("--time-limit", cfg.time_limit_s, "solver time limit in seconds");
    cli.add_option("--node-limit", cfg.node_limit, "solver search-node limit");
    cli.add_flag("--json", cfg.json, "emit JSON instead of text");

    std::string target, name, out_path, which, suite;
    int t_level = -1;

    auto* catalog = cli.add_subcommand("catalog", "list or export built-in graphs");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    auto* cat_list = catalog->add_subcommand("list", "list all built-in graphs");
    cat_list->fallthrough();
    auto* cat_export = catalog->add_subcommand("export", "write a built-in graph as DIMACS");
    cat_export->fallthrough();
    cat_export->add_option("name", name, "catalog entry, e.g. hamming(3,3)")->required();
    cat_export->add_option("--out", out_path, "output file (default: stdout)");

    auto* params = cli.add_subcommand("params", "intersection array, layers, spectrum");
    params->fallthrough();
    params->add_option("target", target, "catalog name or DIMACS file")->required();

    auto* analyze = cli.add_subcommand("analyze", "full bound report for one graph");
    analyze->fallthrough();
    analyze->add_option("target", target, "catalog name or DIMACS file")->required();

    auto* table = cli.add_subcommand("table", "recompute a published table");
    table->fallthrough();
    table->add_option("which", which, "section2_examples or section2_alpha")->required();

    auto* maxcut = cli.add_subcommand("maxcut", "maximum cut with proof when feasible");
    maxcut->fallthrough();
    maxcut->add_option("target", target, "catalog name or DIMACS file")->required();

    auto* alpha = cli.add_subcommand("alpha", "maximum independent set");
    alpha->fallthrough();
    alpha->add_option("target", target, "catalog name or DIMACS file")->required();

    auto* extend = cli.add_subcommand("extend", "matching extendability");
    extend->fallthrough();
    extend->add_option("target", target, "catalog name or DIMACS file")->required();
    extend->add_option("--t", t_level, "test one level instead of searching the exact value");

    auto* verify = cli.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "catalog, lemmas, extendability, or all")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = cli.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (catalog->parsed()) {
            if (catalog->get_subcommand("list")->parsed())
                return emit(drg::app::run_catalog_list(cfg));
            return emit(drg::app::run_catalog_export(name, out_path, cfg));
        }
        if (params->parsed()) return emit(drg::app::run_params(target, cfg));
        if (analyze->parsed()) return emit(drg::app::run_analyze(target, cfg));
        if (table->parsed()) return emit(drg::app::run_table(which, cfg));
        if (maxcut->parsed()) return emit(drg::app::run_maxcut(target, cfg));
        if (alpha->parsed()) return emit(drg::app::run_alpha(target, cfg));
        if (extend->parsed()) return emit(drg::app::run_extend(target, t_level, cfg));
        if (verify->parsed()) return emit(drg::app::run_verify(suite, cfg));
    } catch (const drg::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const drg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
