#include "mofdo/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mofdo {

void MutationParams::validate() const
{
    if (!(distribution_index > 0.0) || !std::isfinite(distribution_index)) {
        throw std::invalid_argument("mutation distribution index must be positive");
    }
    if (per_variable_rate && !(*per_variable_rate >= 0.0 && *per_variable_rate <= 1.0)) {
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    }
}

auto MutationParams::rate_for(std::size_t dimension) const -> double
{
    return per_variable_rate.value_or(1.0 / static_cast<double>(dimension));
}

auto mutation_alpha(double v, double distribution_index) -> double
{
    auto const e = 1.0 / (distribution_index + 1.0);
    return v < 0.5 ? std::pow(2.0 * v, e) - 1.0 : 1.0 - std::pow(2.0 * (1.0 - v), e);
}

auto mutate_coordinate(double x, double lo, double hi, double v, double distribution_index) -> double
{
    auto const reach = std::max(x - lo, hi - x);
    return std::clamp(x + mutation_alpha(v, distribution_index) * reach, lo, hi);
}

auto polynomial_mutation(std::span<double const> x, ProblemSpec const& problem, MutationParams const& params,
    Rng& rng) -> std::vector<double>
{
    if (x.size() != problem.dimension) {
        throw std::invalid_argument("decision vector length differs from problem dimension");
    }
    auto const rate = params.rate_for(problem.dimension);
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (rng.bernoulli(rate)) {
            out[j] = mutate_coordinate(out[j], problem.lower_bounds[j], problem.upper_bounds[j], rng.uniform(),
                params.distribution_index);
        }
    }
    return out;
}

} // namespace mofdo
