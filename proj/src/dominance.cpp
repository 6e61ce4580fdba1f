#include "mofdo/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mofdo {

namespace {

void check_finite(std::span<double const> v)
{
    if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); })) {
        throw std::invalid_argument("objective vector has a non-finite entry");
    }
}

auto dominates_unchecked(std::span<double const> a, std::span<double const> b) -> bool
{
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strictly = strictly || a[i] < b[i];
    }
    return strictly;
}

// Lexicographic sweep for two objectives, O(n log n).
auto nondominated_2d(std::span<ObjectiveVector const> points) -> std::vector<std::size_t>
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        auto const& p = points[i];
        auto const& q = points[j];
        return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
    });

    std::vector<std::size_t> keep;
    double best_before = std::numeric_limits<double>::infinity(); // min f2 over strictly smaller f1
    std::size_t g = 0;
    while (g < order.size()) {
        // a group shares the same f1; its first element carries the group's min f2
        auto const f1 = points[order[g]][0];
        auto const group_min = points[order[g]][1];
        std::size_t e = g;
        while (e < order.size() && points[order[e]][0] == f1) {
            if (points[order[e]][1] == group_min && group_min < best_before) {
                keep.push_back(order[e]);
            }
            ++e;
        }
        best_before = std::min(best_before, group_min);
        g = e;
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

} // namespace

auto dominates(std::span<double const> a, std::span<double const> b) -> bool
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("objective vectors differ in length");
    }
    check_finite(a);
    check_finite(b);
    return dominates_unchecked(a, b);
}

auto constrained_dominates(EvaluatedSolution const& a, EvaluatedSolution const& b) -> bool
{
    if (a.feasible() != b.feasible()) {
        return a.feasible();
    }
    if (!a.feasible()) {
        return a.violation < b.violation;
    }
    return dominates(a.objectives, b.objectives);
}

auto nondominated_indices(std::span<ObjectiveVector const> points) -> std::vector<std::size_t>
{
    if (points.empty()) {
        return {};
    }
    auto const m = points.front().size();
    for (auto const& p : points) {
        if (p.size() != m) {
            throw std::invalid_argument("objective vectors differ in length");
        }
        check_finite(p);
    }
    if (m == 2) {
        return nondominated_2d(points);
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = j != i && dominates_unchecked(points[j], points[i]);
        }
        if (!dominated) {
            keep.push_back(i);
        }
    }
    return keep;
}

auto nondominated_filter(std::span<EvaluatedSolution const> set) -> std::vector<EvaluatedSolution>
{
    std::vector<EvaluatedSolution> out;
    if (set.empty()) {
        return out;
    }

    bool const any_feasible = std::any_of(set.begin(), set.end(), [](auto const& s) { return s.feasible(); });
    if (!any_feasible) {
        // only the least-violating members survive
        auto const best = std::min_element(set.begin(), set.end(), [](auto const& a, auto const& b) {
            return a.violation < b.violation;
        })->violation;
        std::copy_if(set.begin(), set.end(), std::back_inserter(out), [&](auto const& s) { return s.violation == best; });
        return out;
    }

    std::vector<std::size_t> feasible;
    std::vector<ObjectiveVector> objectives;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i].feasible()) {
            feasible.push_back(i);
            objectives.push_back(set[i].objectives);
        }
    }
    for (auto k : nondominated_indices(objectives)) {
        out.push_back(set[feasible[k]]);
    }
    return out;
}

} // namespace mofdo
