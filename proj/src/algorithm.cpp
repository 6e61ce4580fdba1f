#include "mofdo/algorithm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mofdo/metrics.hpp"

namespace mofdo {

namespace {

auto objective_sum(EvaluatedSolution const& s, ObjectiveScaling const* scaling) -> double
{
    if (scaling == nullptr) {
        return std::accumulate(s.objectives.begin(), s.objectives.end(), 0.0);
    }
    double sum = 0.0;
    for (std::size_t o = 0; o < s.objectives.size(); ++o) {
        sum += (s.objectives[o] - scaling->offset[o]) / scaling->scale[o];
    }
    return sum;
}

auto moved(Problem const& problem, std::vector<double> const& position, std::vector<double> const& pace)
    -> std::vector<double>
{
    std::vector<double> x(position.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = position[j] + pace[j];
    }
    return problem.clamp_to_bounds(x);
}

// Used only when the archive is empty: the non-dominated bee with the
// lowest objective sum.
auto fallback_leader(std::vector<ScoutBee> const& bees) -> EvaluatedSolution
{
    std::vector<EvaluatedSolution> all;
    all.reserve(bees.size());
    for (auto const& b : bees) {
        all.push_back(b.evaluation);
    }
    auto nd = nondominated_filter(all);
    return *std::min_element(nd.begin(), nd.end(), [](auto const& a, auto const& b) {
        return objective_sum(a, nullptr) < objective_sum(b, nullptr);
    });
}

} // namespace

void MofdoConfig::validate() const
{
    if (population_size < 2) {
        throw std::invalid_argument("population size must be at least 2");
    }
    if (weight_factor != 0 && weight_factor != 1) {
        throw std::invalid_argument("weight factor must be 0 or 1");
    }
    if (!(leader_pressure > 0.0)) {
        throw std::invalid_argument("leader pressure must be positive");
    }
    if (!(delete_pressure > 0.0)) {
        throw std::invalid_argument("delete pressure must be positive");
    }
    archive_params().validate();
    mutation.validate();
}

auto MofdoConfig::archive_params() const -> ArchiveParams
{
    return ArchiveParams {
        .capacity = archive_capacity,
        .grid_divisions = grid_divisions,
        .grid_inflation = grid_inflation,
        .delete_pressure = delete_pressure,
    };
}

auto fitness_weight(EvaluatedSolution const& current, EvaluatedSolution const& leader, int weight_factor,
    ObjectiveScaling const* scaling) -> double
{
    auto const denom = objective_sum(current, scaling);
    if (denom == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(objective_sum(leader, scaling) / denom) - static_cast<double>(weight_factor);
}

auto pace_from_draws(std::span<double const> position, std::span<double const> leader_position, double fw,
    std::span<double const> walk, double direction) -> std::vector<double>
{
    if (position.size() != leader_position.size()) {
        throw std::invalid_argument("bee and leader differ in dimension");
    }
    std::vector<double> pace(position.size());
    if (!(fw > 0.0 && fw < 1.0)) {
        if (walk.size() != position.size()) {
            throw std::invalid_argument("random walk length differs from dimension");
        }
        for (std::size_t j = 0; j < pace.size(); ++j) {
            pace[j] = position[j] * walk[j];
        }
        return pace;
    }
    auto const sign = direction < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < pace.size(); ++j) {
        pace[j] = (position[j] - leader_position[j]) * fw * sign;
    }
    return pace;
}

auto compute_pace(ScoutBee const& bee, EvaluatedSolution const& leader, double fw, Rng& rng) -> std::vector<double>
{
    auto const& x = bee.position();
    if (!(fw > 0.0 && fw < 1.0)) {
        std::vector<double> walk(x.size());
        for (auto& r : walk) {
            r = rng.uniform(-1.0, 1.0);
        }
        return pace_from_draws(x, leader.position, fw, walk, 0.0);
    }
    return pace_from_draws(x, leader.position, fw, {}, rng.uniform(-1.0, 1.0));
}

auto initialize(Problem const& problem, MofdoConfig const& config, Rng& rng) -> SwarmState
{
    config.validate();
    auto const& spec = problem.spec();
    SwarmState state { {}, Archive(config.archive_params()) };
    state.bees.reserve(config.population_size);
    std::vector<EvaluatedSolution> initial;
    for (std::size_t i = 0; i < config.population_size; ++i) {
        std::vector<double> x(spec.dimension);
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = rng.uniform(spec.lower_bounds[j], spec.upper_bounds[j]);
        }
        auto eval = problem.evaluate(x);
        initial.push_back(eval);
        state.bees.push_back(ScoutBee { std::move(eval), std::nullopt });
    }
    for (auto& s : nondominated_filter(initial)) {
        state.archive.insert(std::move(s), rng);
    }
    return state;
}

void step(SwarmState& state, Problem const& problem, MofdoConfig const& config, Rng& rng)
{
    for (auto& bee : state.bees) {
        EvaluatedSolution leader = state.archive.empty() ? fallback_leader(state.bees)
                                                         : state.archive.select_leader(rng, config.leader_pressure);

        std::optional<ObjectiveScaling> scaling;
        if (config.normalize_fitness && !state.archive.empty()) {
            auto const& grid = state.archive.grid();
            ObjectiveScaling s { grid.lower, {} };
            for (std::size_t o = 0; o < grid.lower.size(); ++o) {
                s.scale.push_back(grid.upper[o] - grid.lower[o]);
            }
            scaling = std::move(s);
        }

        auto const fw = fitness_weight(bee.evaluation, leader, config.weight_factor, scaling ? &*scaling : nullptr);
        auto pace = compute_pace(bee, leader, fw, rng);
        auto candidate = problem.evaluate(moved(problem, bee.position(), pace));

        if (constrained_dominates(candidate, bee.evaluation)) {
            bee.evaluation = std::move(candidate);
            bee.saved_pace = std::move(pace);
        } else if (bee.saved_pace) {
            auto retry = problem.evaluate(moved(problem, bee.position(), *bee.saved_pace));
            if (constrained_dominates(retry, bee.evaluation)) {
                bee.evaluation = std::move(retry);
            }
        }

        // mutation only feeds the archive; the bee keeps its own position
        auto mutated = problem.evaluate(polynomial_mutation(bee.position(), problem.spec(), config.mutation, rng));
        state.archive.insert(bee.evaluation, rng);
        state.archive.insert(std::move(mutated), rng);
    }
}

auto run(Problem const& problem, MofdoConfig const& config, ReferenceFront const* reference) -> RunRecord
{
    auto const start = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    auto state = initialize(problem, config, rng);

    RunRecord record;
    record.seed = config.seed;
    record.config = config;
    record.discovery_trace.reserve(config.iterations);
    for (std::size_t t = 0; t < config.iterations; ++t) {
        step(state, problem, config, rng);
        record.discovery_trace.push_back(state.archive.size());
        if (reference != nullptr) {
            record.igd_trace.push_back(igd(objectives_of(state.archive.members()), *reference));
        }
    }
    record.final_archive = state.archive.members();
    record.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace mofdo
