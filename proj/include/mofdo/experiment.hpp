#ifndef MOFDO_EXPERIMENT_HPP
#define MOFDO_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mofdo/algorithm.hpp"

namespace mofdo {

enum class OutputFormat { TableText, StructuredText };

struct ExperimentConfig {
    std::vector<std::string> problems;
    std::size_t runs = 1;
    std::uint64_t base_seed = 0;
    MofdoConfig mofdo;
    std::filesystem::path out_dir = "results";
    OutputFormat format = OutputFormat::TableText;
    std::size_t ref_points = 1000;
    std::size_t threads = 0; // 0: hardware concurrency
};

namespace exit_status {
    constexpr int ok = 0;
    constexpr int failure = 1;
    constexpr int unknown_problem = 2;
    constexpr int unwritable_output = 3;
} // namespace exit_status

// Runs every problem `runs` times with seeds base_seed + run index and writes
// under out_dir/<problem>/:
//   reference.txt             reference front
//   run_<k>_front.txt         final archive, objectives then decision variables
//   run_<k>_trace.csv         iteration,archive_size,igd
// plus out_dir/summary.csv (table text) or out_dir/experiment.json
// (structured text). Diagnostics go to log; the return value is an
// exit_status code.
auto run_experiment(ExperimentConfig const& config, std::ostream& log) -> int;

// Writes the reference front of a registered problem as a point table.
auto emit_reference_front(std::string const& problem_name, std::size_t n_points, std::filesystem::path const& path,
    std::ostream& log) -> int;

} // namespace mofdo

#endif
