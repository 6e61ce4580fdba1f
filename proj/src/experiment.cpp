#include "mofdo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mofdo/front_io.hpp"
#include "mofdo/metrics.hpp"

namespace mofdo {

namespace {

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto open_for_write(std::filesystem::path const& path) -> std::ofstream
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw OutputError("cannot write " + path.string());
    }
    return os;
}

void ensure_directory(std::filesystem::path const& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw OutputError("cannot create directory " + dir.string());
    }
}

// Runs tasks 0..count-1 on up to `threads` workers. Results land by index, so
// completion order does not matter.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn fn)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next { 0 };
    auto worker = [&] {
        for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    auto const n = std::max<std::size_t>(1, std::min(threads, count));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    for (auto const& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

auto config_json(ExperimentConfig const& config) -> nlohmann::ordered_json
{
    auto const& m = config.mofdo;
    nlohmann::ordered_json j;
    j["problems"] = config.problems;
    j["runs"] = config.runs;
    j["base_seed"] = config.base_seed;
    j["iterations"] = m.iterations;
    j["population"] = m.population_size;
    j["archive"] = m.archive_capacity;
    j["weight_factor"] = m.weight_factor;
    j["grid_divisions"] = m.grid_divisions;
    j["leader_pressure"] = m.leader_pressure;
    j["delete_pressure"] = m.delete_pressure;
    j["inflation"] = m.grid_inflation;
    j["mutation_index"] = m.mutation.distribution_index;
    if (m.mutation.per_variable_rate) {
        j["mutation_rate"] = *m.mutation.per_variable_rate;
    } else {
        j["mutation_rate"] = "1/dimension";
    }
    j["ref_points"] = config.ref_points;
    return j;
}

void write_trace(std::filesystem::path const& path, RunRecord const& record)
{
    auto os = open_for_write(path);
    os << "iteration,archive_size,igd\n";
    for (std::size_t t = 0; t < record.discovery_trace.size(); ++t) {
        os << t + 1 << ',' << record.discovery_trace[t] << ',' << format_real(record.igd_trace[t]) << '\n';
    }
}

} // namespace

auto run_experiment(ExperimentConfig const& config, std::ostream& log) -> int
{
    std::vector<std::unique_ptr<Problem>> problems;
    try {
        for (auto const& name : config.problems) {
            problems.push_back(make_problem(name));
        }
    } catch (UnknownProblem const& e) {
        log << "error: unknown problem '" << e.name() << "'\n";
        return exit_status::unknown_problem;
    }
    if (config.runs < 1 || problems.empty()) {
        log << "error: need at least one problem and one run\n";
        return exit_status::failure;
    }

    try {
        config.mofdo.validate();
        ensure_directory(config.out_dir);

        auto const threads = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;

        nlohmann::ordered_json doc;
        doc["config"] = config_json(config);
        doc["problems"] = nlohmann::ordered_json::array();
        std::ostringstream table;
        table << "problem,runs,igd_avg,igd_std,igd_best,igd_worst\n";

        for (auto const& problem : problems) {
            auto const dir = config.out_dir / problem->name();
            ensure_directory(dir);

            auto const reference = problem->reference_front(config.ref_points);
            {
                auto os = open_for_write(dir / "reference.txt");
                write_front(os, reference.points);
            }

            std::vector<RunRecord> records(config.runs);
            parallel_for(config.runs, threads, [&](std::size_t k) {
                auto cfg = config.mofdo;
                cfg.seed = config.base_seed + k;
                records[k] = run(*problem, cfg, &reference);
            });

            std::vector<double> finals;
            nlohmann::ordered_json pj;
            pj["name"] = problem->name();
            pj["reference_points"] = reference.points.size();
            pj["runs"] = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < records.size(); ++k) {
                auto const& r = records[k];
                auto const stem = "run_" + std::to_string(k);
                {
                    auto os = open_for_write(dir / (stem + "_front.txt"));
                    write_solutions(os, r.final_archive, true);
                }
                write_trace(dir / (stem + "_trace.csv"), r);

                // iterations == 0 leaves the trace empty; score the initial archive instead
                auto const final_igd = r.igd_trace.empty() ? igd(objectives_of(r.final_archive), reference)
                                                           : r.igd_trace.back();
                finals.push_back(final_igd);
                auto const feasible = std::count_if(
                    r.final_archive.begin(), r.final_archive.end(), [](auto const& s) { return s.feasible(); });
                pj["runs"].push_back({
                    { "run", k },
                    { "seed", r.seed },
                    { "final_igd", final_igd },
                    { "archive_size", r.final_archive.size() },
                    { "feasible", feasible },
                });
                log << problem->name() << " run " << k << " seed " << r.seed << " igd " << format_real(final_igd)
                    << " archive " << r.final_archive.size() << " (" << r.wall_time << " s)\n";
            }

            auto const s = summarize(finals);
            pj["summary"] = { { "igd_avg", s.mean }, { "igd_std", s.std }, { "igd_best", s.best }, { "igd_worst", s.worst } };
            doc["problems"].push_back(std::move(pj));
            table << problem->name() << ',' << config.runs << ',' << format_real(s.mean) << ',' << format_real(s.std)
                  << ',' << format_real(s.best) << ',' << format_real(s.worst) << '\n';
        }

        if (config.format == OutputFormat::StructuredText) {
            auto os = open_for_write(config.out_dir / "experiment.json");
            os << doc.dump(2) << '\n';
        } else {
            auto os = open_for_write(config.out_dir / "summary.csv");
            os << table.str();
        }
    } catch (OutputError const& e) {
        log << "error: " << e.what() << '\n';
        return exit_status::unwritable_output;
    } catch (std::exception const& e) {
        log << "error: " << e.what() << '\n';
        return exit_status::failure;
    }
    return exit_status::ok;
}

auto emit_reference_front(std::string const& problem_name, std::size_t n_points, std::filesystem::path const& path,
    std::ostream& log) -> int
{
    try {
        auto const problem = make_problem(problem_name);
        auto const front = problem->reference_front(n_points);
        if (path.has_parent_path()) {
            ensure_directory(path.parent_path());
        }
        auto os = open_for_write(path);
        write_front(os, front.points);
    } catch (UnknownProblem const& e) {
        log << "error: unknown problem '" << e.name() << "'\n";
        return exit_status::unknown_problem;
    } catch (OutputError const& e) {
        log << "error: " << e.what() << '\n';
        return exit_status::unwritable_output;
    } catch (std::exception const& e) {
        log << "error: " << e.what() << '\n';
        return exit_status::failure;
    }
    return exit_status::ok;
}

} // namespace mofdo
