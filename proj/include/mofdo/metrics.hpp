#ifndef MOFDO_METRICS_HPP
#define MOFDO_METRICS_HPP

#include <span>
#include <vector>

#include "mofdo/dominance.hpp"
#include "mofdo/problems.hpp"

namespace mofdo {

struct RunSummary {
    double mean = 0.0;
    double std = 0.0; // sample standard deviation, 0 for a single value
    double best = 0.0;
    double worst = 0.0;
};

// Inverted generational distance: sqrt(sum_i d_i^2) / n, where d_i is the
// distance from reference point i to its nearest obtained point and n is the
// reference size. Throws std::invalid_argument on an empty obtained set or
// mismatched objective counts.
auto igd(std::span<ObjectiveVector const> obtained, std::span<ObjectiveVector const> reference) -> double;
auto igd(std::span<ObjectiveVector const> obtained, ReferenceFront const& reference) -> double;

auto objectives_of(std::span<EvaluatedSolution const> set) -> std::vector<ObjectiveVector>;

auto summarize(std::span<double const> values) -> RunSummary;

} // namespace mofdo

#endif
