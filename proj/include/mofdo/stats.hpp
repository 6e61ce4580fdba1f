#ifndef MOFDO_STATS_HPP
#define MOFDO_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mofdo {

// Whole-benchmark ranks: one row per test function, one column per
// algorithm. Each row is a permutation of 1..k (no ties).
class RankTable {
public:
    explicit RankTable(std::vector<std::vector<int>> ranks);

    [[nodiscard]] auto functions() const -> std::size_t { return ranks_.size(); }
    [[nodiscard]] auto algorithms() const -> std::size_t { return ranks_.empty() ? 0 : ranks_.front().size(); }
    [[nodiscard]] auto ranks() const -> std::vector<std::vector<int>> const& { return ranks_; }
    [[nodiscard]] auto column_totals() const -> std::vector<double> const& { return totals_; }

private:
    std::vector<std::vector<int>> ranks_;
    std::vector<double> totals_;
};

struct FriedmanResult {
    double chi_square = 0.0;
    double p_value = 1.0;
};

auto friedman(RankTable const& table) -> FriedmanResult;

// Same statistic from column rank totals over n functions. Requires n >= 2
// and at least three totals.
auto friedman_from_totals(std::span<double const> totals, std::size_t n) -> FriedmanResult;

// Upper tail of the chi-square distribution.
auto chi_square_sf(double x, double dof) -> double;

// Two-sided rank-sum p-value, normal approximation with tie and continuity
// corrections. Requires at least three values per sample.
auto wilcoxon_rank_sum(std::span<double const> a, std::span<double const> b) -> double;

constexpr double default_alpha = 0.05;

inline auto significant(double p_value, double alpha = default_alpha) -> bool { return p_value < alpha; }

} // namespace mofdo

#endif
