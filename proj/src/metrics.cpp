#include "mofdo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mofdo {

auto igd(std::span<ObjectiveVector const> obtained, std::span<ObjectiveVector const> reference) -> double
{
    if (obtained.empty()) {
        throw std::invalid_argument("igd of an empty obtained set");
    }
    if (reference.empty()) {
        throw std::invalid_argument("igd against an empty reference front");
    }
    auto const m = reference.front().size();
    auto check = [m](auto const& p) {
        if (p.size() != m) {
            throw std::invalid_argument("igd inputs differ in objective count");
        }
    };
    std::for_each(obtained.begin(), obtained.end(), check);
    std::for_each(reference.begin(), reference.end(), check);

    double sum = 0.0;
    for (auto const& r : reference) {
        auto best = std::numeric_limits<double>::infinity();
        for (auto const& p : obtained) {
            double d2 = 0.0;
            for (std::size_t o = 0; o < m; ++o) {
                auto const d = r[o] - p[o];
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        sum += best;
    }
    return std::sqrt(sum) / static_cast<double>(reference.size());
}

auto igd(std::span<ObjectiveVector const> obtained, ReferenceFront const& reference) -> double
{
    return igd(obtained, std::span<ObjectiveVector const>(reference.points));
}

auto objectives_of(std::span<EvaluatedSolution const> set) -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> out;
    out.reserve(set.size());
    for (auto const& s : set) {
        out.push_back(s.objectives);
    }
    return out;
}

auto summarize(std::span<double const> values) -> RunSummary
{
    if (values.empty()) {
        throw std::invalid_argument("summary of no values");
    }
    auto const n = static_cast<double>(values.size());
    RunSummary s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (auto v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.std = std::sqrt(ss / (n - 1.0));
    }
    auto const [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.best = *lo;
    s.worst = *hi;
    // the rounded mean of equal values can drift a last bit outside [best, worst]
    s.mean = std::clamp(s.mean, s.best, s.worst);
    return s;
}

} // namespace mofdo
