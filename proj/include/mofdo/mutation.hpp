#ifndef MOFDO_MUTATION_HPP
#define MOFDO_MUTATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "mofdo/problems.hpp"
#include "mofdo/rng.hpp"

namespace mofdo {

struct MutationParams {
    double distribution_index = 5.0; // q
    // Probability of perturbing each coordinate; empty means 1 / dimension.
    std::optional<double> per_variable_rate;

    void validate() const;
    [[nodiscard]] auto rate_for(std::size_t dimension) const -> double;
};

// Perturbation factor in [-1, 1] for a uniform draw v in [0, 1].
auto mutation_alpha(double v, double distribution_index) -> double;

// One coordinate: x + alpha * max(x - lo, hi - x), clamped to [lo, hi].
auto mutate_coordinate(double x, double lo, double hi, double v, double distribution_index) -> double;

// Polynomial mutation of an in-bounds vector. Each coordinate is perturbed
// independently with the configured rate; the result stays in bounds.
auto polynomial_mutation(std::span<double const> x, ProblemSpec const& problem, MutationParams const& params,
    Rng& rng) -> std::vector<double>;

} // namespace mofdo

#endif
