#ifndef MOFDO_PROBLEMS_HPP
#define MOFDO_PROBLEMS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mofdo/dominance.hpp"

namespace mofdo {

using Tunables = std::map<std::string, double>;

struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
    std::vector<double> lower_bounds;
    std::vector<double> upper_bounds;
    std::size_t objective_count = 2;
    bool has_constraints = false;
    Tunables tunables;
};

struct ReferenceFront {
    enum class Source { Analytic, OracleGrid };

    std::vector<ObjectiveVector> points;
    Source source = Source::Analytic;
};

class UnknownProblem : public std::invalid_argument {
public:
    explicit UnknownProblem(std::string const& name)
        : std::invalid_argument("unknown problem: " + name), name_(name) { }

    [[nodiscard]] auto name() const -> std::string const& { return name_; }

private:
    std::string name_;
};

// A benchmark or design problem. Evaluation is pure and reentrant.
class Problem {
public:
    explicit Problem(ProblemSpec spec);
    virtual ~Problem() = default;

    Problem(Problem const&) = delete;
    auto operator=(Problem const&) -> Problem& = delete;

    [[nodiscard]] auto spec() const -> ProblemSpec const& { return spec_; }
    [[nodiscard]] auto name() const -> std::string const& { return spec_.name; }
    [[nodiscard]] auto dimension() const -> std::size_t { return spec_.dimension; }
    [[nodiscard]] auto objective_count() const -> std::size_t { return spec_.objective_count; }

    // Throws std::invalid_argument when x has the wrong length or leaves the box.
    [[nodiscard]] auto evaluate(std::span<double const> x) const -> EvaluatedSolution;

    [[nodiscard]] auto clamp_to_bounds(std::span<double const> x) const -> std::vector<double>;

    // Requires n_points >= 100; the result holds at most n_points mutually
    // non-dominated points.
    [[nodiscard]] virtual auto reference_front(std::size_t n_points) const -> ReferenceFront;

protected:
    // Writes objectives into f and returns the total constraint violation.
    virtual auto compute(std::span<double const> x, std::span<double> f) const -> double = 0;

    [[nodiscard]] auto tunable(std::string const& key) const -> double { return spec_.tunables.at(key); }

    // Dense decision-space grid over the feasible region, non-dominated
    // filter, then farthest-point downsampling. The grid holds roughly
    // grid_points points; each refinement round re-grids the neighbourhood of
    // every survivor at half the previous spacing.
    [[nodiscard]] auto oracle_grid_front(std::size_t n_points, std::size_t grid_points, std::size_t refine_rounds = 0) const
        -> ReferenceFront;

private:
    struct GridSample {
        ObjectiveVector objectives;
        std::vector<double> position;
    };

    void scan_grid(std::span<double const> lo, std::span<double const> hi, std::size_t per_dim,
        std::vector<GridSample>& out) const;

    ProblemSpec spec_;
};

// Registered names: zdt1..zdt5, mmf1..mmf12, welded_beam. Overrides replace
// tunables (e.g. "dimension", "np", "q", "yield_stress"). Throws
// UnknownProblem for anything else.
auto make_problem(std::string_view name, Tunables const& overrides = {}) -> std::unique_ptr<Problem>;

auto problem_names() -> std::vector<std::string>;

// Welded-beam constraint values g1..g4 at x = (h, l, t, b); each must be >= 0
// for a feasible design. Uses the "shear_stress", "yield_stress" and "load"
// tunables.
auto welded_beam_constraints(std::span<double const> x, Tunables const& tunables) -> std::array<double, 4>;

// Greedy max-min selection of k points; the first pick is the point with the
// smallest first objective. Deterministic; returns indices in pick order.
auto farthest_point_selection(std::span<ObjectiveVector const> points, std::size_t k) -> std::vector<std::size_t>;

} // namespace mofdo

#endif
