#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mofdo/experiment.hpp"

auto main(int argc, char** argv) -> int
{
    CLI::App app { "Seeded MOFDO experiments over the ZDT, MMF and welded-beam problems" };

    mofdo::ExperimentConfig config;
    auto& m = config.mofdo;
    double mutation_rate = -1.0;
    int wf = 0;
    std::string format = "table";
    bool emit_reference = false;
    std::string out = "results";

    app.add_option("--problem", config.problems, "Problem name(s), comma separated")
        ->required()
        ->delimiter(',');
    app.add_option("--runs", config.runs, "Independent runs per problem")->check(CLI::PositiveNumber);
    app.add_option("--iterations", m.iterations, "Iterations per run");
    app.add_option("--pop", m.population_size, "Population size")->check(CLI::Range(2, 1 << 24));
    app.add_option("--archive", m.archive_capacity, "Archive capacity")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.base_seed, "Base seed; run k uses seed + k");
    app.add_option("--wf", wf, "Weight factor")->check(CLI::IsMember({ 0, 1 }));
    app.add_option("--grid-divisions", m.grid_divisions, "Grid cells per objective")->check(CLI::PositiveNumber);
    app.add_option("--leader-pressure", m.leader_pressure, "Leader selection exponent");
    app.add_option("--delete-pressure", m.delete_pressure, "Eviction exponent");
    app.add_option("--inflation", m.grid_inflation, "Grid inflation rate");
    app.add_option("--mutation-index", m.mutation.distribution_index, "Polynomial mutation distribution index");
    app.add_option("--mutation-rate", mutation_rate, "Per-variable mutation probability (default 1/dimension)")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--ref-points", config.ref_points, "Reference front size")->check(CLI::Range(100, 1 << 24));
    app.add_option("--out", out, "Output directory");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({ "table", "structured" }));
    app.add_option("--threads", config.threads, "Worker threads (0: all cores)");
    app.add_flag("--emit-reference", emit_reference, "Only write <out>/<problem>_reference.txt for each problem");

    CLI11_PARSE(app, argc, argv);

    m.weight_factor = wf;
    if (mutation_rate >= 0.0) {
        m.mutation.per_variable_rate = mutation_rate;
    }
    config.format = format == "structured" ? mofdo::OutputFormat::StructuredText : mofdo::OutputFormat::TableText;
    config.out_dir = out;

    if (emit_reference) {
        for (auto const& name : config.problems) {
            auto const status
                = mofdo::emit_reference_front(name, config.ref_points, config.out_dir / (name + "_reference.txt"), std::cerr);
            if (status != mofdo::exit_status::ok) {
                return status;
            }
        }
        return mofdo::exit_status::ok;
    }
    return mofdo::run_experiment(config, std::cerr);
}
