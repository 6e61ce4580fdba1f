#ifndef MOFDO_ALGORITHM_HPP
#define MOFDO_ALGORITHM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mofdo/archive.hpp"
#include "mofdo/mutation.hpp"
#include "mofdo/problems.hpp"
#include "mofdo/rng.hpp"

namespace mofdo {

struct ScoutBee {
    EvaluatedSolution evaluation; // evaluation.position is the bee's position
    std::optional<std::vector<double>> saved_pace;

    [[nodiscard]] auto position() const -> std::vector<double> const& { return evaluation.position; }
};

struct MofdoConfig {
    std::size_t population_size = 100;
    std::size_t iterations = 500;
    std::size_t archive_capacity = 100;
    int weight_factor = 0; // wf, 0 or 1
    std::size_t grid_divisions = 7;
    double leader_pressure = 2.0; // beta
    double delete_pressure = 2.0; // gamma
    double grid_inflation = 1.0;
    MutationParams mutation;
    std::uint64_t seed = 0;
    // Off by default. When on, objective sums entering the fitness weight are
    // taken after min-max scaling to the archive's current grid box.
    bool normalize_fitness = false;

    void validate() const;
    [[nodiscard]] auto archive_params() const -> ArchiveParams;
};

struct RunRecord {
    std::vector<EvaluatedSolution> final_archive;
    std::vector<double> igd_trace;            // empty without a reference front
    std::vector<std::size_t> discovery_trace; // archive size after each iteration
    std::uint64_t seed = 0;
    MofdoConfig config;
    double wall_time = 0.0; // seconds
};

// Per-objective affine map applied before objective sums are taken.
struct ObjectiveScaling {
    std::vector<double> offset;
    std::vector<double> scale;
};

// Sum of the leader's objectives over the current solution's, in absolute
// value, minus the weight factor. A zero current sum yields +infinity, which
// sends compute_pace to the random-walk branch.
auto fitness_weight(EvaluatedSolution const& current, EvaluatedSolution const& leader, int weight_factor,
    ObjectiveScaling const* scaling = nullptr) -> double;

// Pace from explicit draws. walk holds one value in [-1, 1] per coordinate and
// is used in the random-walk branch (fw >= 1, fw <= 0 or non-finite fw);
// otherwise the sign of direction decides between moving toward (negative)
// and away from (nonnegative) the leader, scaled by fw.
//
// The random-walk condition covers both fw in {0, 1} with a zero sum and
// fw >= 1 or fw <= -1, so the leader-relative branches only ever see fw
// strictly inside (0, 1).
auto pace_from_draws(std::span<double const> position, std::span<double const> leader_position, double fw,
    std::span<double const> walk, double direction) -> std::vector<double>;

auto compute_pace(ScoutBee const& bee, EvaluatedSolution const& leader, double fw, Rng& rng) -> std::vector<double>;

struct SwarmState {
    std::vector<ScoutBee> bees;
    Archive archive;
};

// Evaluates a random population and seeds the archive with its
// non-dominated members.
auto initialize(Problem const& problem, MofdoConfig const& config, Rng& rng) -> SwarmState;

// One pass over every bee: leader, fitness weight, pace move, saved-pace
// retry, mutation and archive maintenance.
void step(SwarmState& state, Problem const& problem, MofdoConfig const& config, Rng& rng);

auto run(Problem const& problem, MofdoConfig const& config, ReferenceFront const* reference = nullptr) -> RunRecord;

} // namespace mofdo

#endif
