#include <iostream>

#include "CLI11.hpp"

#include "sparing/cli.hpp"

namespace {

void add_common_options(CLI::App& app, sparing::cli::RunConfig& cfg) {
    app.add_option("--gen", cfg.gen_spec,
                   "generator spec: figure1, path:n, cycle:n, complete:n, "
                   "complete_bipartite:m,n, random:n,p[,seed]");
    app.add_option("--in", cfg.input_path, "edge-list input file");
    app.add_option("--method", cfg.method, "greedy|exact|brute")
        ->check(CLI::IsMember({"greedy", "exact", "brute"}));
    app.add_option("--seed", cfg.seed, "seed for generators and batches");
    app.add_option("--budget", cfg.budget_seconds,
                   "time budget in seconds for exact methods");
    app.add_option("--dot", cfg.dot_path, "write annotated DOT to this path");
    app.add_option("--csv", cfg.csv_path, "write compare CSV to this path");
    app.add_flag("--trace", cfg.trace, "print per-iteration trace lines");
}

} // namespace

int main(int argc, char** argv) {
    sparing::cli::RunConfig cfg;

    CLI::App app{"sparing numbers of graphs: greedy and exact solvers, "
                 "weak integer additive set-labelings"};
    app.require_subcommand(0, 1);
    add_common_options(app, cfg);

    // Bare `sparing --gen ...` behaves like the sparing subcommand.
    CLI::App* sub_sparing =
        app.add_subcommand("sparing", "compute the sparing number");
    CLI::App* sub_label =
        app.add_subcommand("label", "emit a verified set-labeling");
    CLI::App* sub_trace =
        app.add_subcommand("trace", "print the greedy iteration trace");
    CLI::App* sub_gen = app.add_subcommand("gen", "emit a generated edge list");
    CLI::App* sub_compare =
        app.add_subcommand("compare", "greedy vs exact over a seeded batch");
    for (CLI::App* sub : {sub_sparing, sub_label, sub_trace, sub_gen}) {
        add_common_options(*sub, cfg);
    }
    add_common_options(*sub_compare, cfg);
    sub_compare->add_option("--count", cfg.count, "number of batch instances");
    sub_compare->add_option("--nmin", cfg.n_min, "minimum vertex count");
    sub_compare->add_option("--nmax", cfg.n_max, "maximum vertex count");
    sub_compare->add_option("--pmin", cfg.p_min, "minimum edge probability");
    sub_compare->add_option("--pmax", cfg.p_max, "maximum edge probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sparing::cli::kInputError;
    }

    for (CLI::App* sub : app.get_subcommands())
        cfg.command = sub->get_name();

    return sparing::cli::run_command(cfg, std::cout, std::cerr);
}
