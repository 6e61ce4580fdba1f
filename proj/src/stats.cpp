#include "mofdo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace mofdo {

RankTable::RankTable(std::vector<std::vector<int>> ranks) : ranks_(std::move(ranks))
{
    if (ranks_.empty()) {
        throw std::invalid_argument("rank table has no rows");
    }
    auto const k = ranks_.front().size();
    totals_.assign(k, 0.0);
    for (auto const& row : ranks_) {
        if (row.size() != k) {
            throw std::invalid_argument("rank table rows differ in length");
        }
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < k; ++j) {
            if (sorted[j] != static_cast<int>(j + 1)) {
                throw std::invalid_argument("rank table row is not a permutation of 1..k");
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            totals_[j] += row[j];
        }
    }
}

auto chi_square_sf(double x, double dof) -> double
{
    if (!(dof > 0.0)) {
        throw std::invalid_argument("chi-square needs positive degrees of freedom");
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

auto friedman_from_totals(std::span<double const> totals, std::size_t n) -> FriedmanResult
{
    auto const k = totals.size();
    if (n < 2 || k < 3) {
        throw std::invalid_argument("friedman test needs n >= 2 functions and k >= 3 algorithms");
    }
    auto const nn = static_cast<double>(n);
    auto const kk = static_cast<double>(k);
    auto const sum_sq = std::accumulate(totals.begin(), totals.end(), 0.0, [](double acc, double r) { return acc + r * r; });
    auto chi = 12.0 / (nn * kk * (kk + 1.0)) * sum_sq - 3.0 * nn * (kk + 1.0);
    // equal totals give an exact zero up to rounding
    if (std::abs(chi) < 1e-9 * 3.0 * nn * (kk + 1.0)) {
        chi = 0.0;
    }
    return { chi, chi_square_sf(chi, kk - 1.0) };
}

auto friedman(RankTable const& table) -> FriedmanResult
{
    return friedman_from_totals(table.column_totals(), table.functions());
}

auto wilcoxon_rank_sum(std::span<double const> a, std::span<double const> b) -> double
{
    if (a.size() < 3 || b.size() < 3) {
        throw std::invalid_argument("rank-sum test needs at least three values per sample");
    }
    auto const n1 = a.size();
    auto const n2 = b.size();
    auto const total = n1 + n2;

    std::vector<std::pair<double, bool>> pooled; // value, belongs to a
    pooled.reserve(total);
    for (auto v : a) {
        pooled.emplace_back(v, true);
    }
    for (auto v : b) {
        pooled.emplace_back(v, false);
    }
    std::sort(pooled.begin(), pooled.end(), [](auto const& x, auto const& y) { return x.first < y.first; });

    double rank_sum_a = 0.0;
    double tie_term = 0.0; // sum of t^3 - t over tie groups
    for (std::size_t i = 0; i < total;) {
        auto j = i;
        while (j < total && pooled[j].first == pooled[i].first) {
            ++j;
        }
        auto const avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (auto q = i; q < j; ++q) {
            if (pooled[q].second) {
                rank_sum_a += avg_rank;
            }
        }
        auto const t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    auto const d1 = static_cast<double>(n1);
    auto const d2 = static_cast<double>(n2);
    auto const dn = static_cast<double>(total);
    auto const mean = d1 * (dn + 1.0) / 2.0;
    auto const variance = d1 * d2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (variance <= 0.0) {
        return 1.0;
    }
    auto const z = std::max(0.0, std::abs(rank_sum_a - mean) - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::numbers::sqrt2));
}

} // namespace mofdo
