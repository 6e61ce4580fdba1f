#ifndef MOFDO_DOMINANCE_HPP
#define MOFDO_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mofdo {

// A point in objective space. Every objective is minimized.
using ObjectiveVector = std::vector<double>;

struct EvaluatedSolution {
    std::vector<double> position;
    ObjectiveVector objectives;
    double violation = 0.0; // total constraint shortfall, 0 when feasible

    [[nodiscard]] auto feasible() const -> bool { return violation <= 0.0; }

    friend auto operator==(EvaluatedSolution const&, EvaluatedSolution const&) -> bool = default;
};

// Pareto dominance: a is no worse in every objective and strictly better in
// at least one. Throws std::invalid_argument on length mismatch or a
// non-finite entry.
auto dominates(std::span<double const> a, std::span<double const> b) -> bool;

// Feasibility-first dominance. A feasible solution beats an infeasible one,
// two infeasible solutions compare by violation, two feasible ones by
// dominates().
auto constrained_dominates(EvaluatedSolution const& a, EvaluatedSolution const& b) -> bool;

// Indices of the points not dominated by any other point, in input order.
// Equal vectors do not dominate each other, so duplicates all survive.
auto nondominated_indices(std::span<ObjectiveVector const> points) -> std::vector<std::size_t>;

// Members not constrained-dominated by any other member, in input order.
auto nondominated_filter(std::span<EvaluatedSolution const> set) -> std::vector<EvaluatedSolution>;

} // namespace mofdo

#endif
