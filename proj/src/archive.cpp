#include "mofdo/archive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mofdo {

namespace {

constexpr double degenerate_half_width = 1e-9;

auto roulette(std::span<double const> probabilities, Rng& rng) -> std::size_t
{
    auto const u = rng.uniform();
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > 0.0) {
            last_positive = i;
        }
        acc += probabilities[i];
        if (u < acc) {
            return i;
        }
    }
    return last_positive; // rounding left u above the final partial sum
}

} // namespace

void ArchiveParams::validate() const
{
    if (capacity == 0) {
        throw std::invalid_argument("archive capacity must be positive");
    }
    if (grid_divisions == 0) {
        throw std::invalid_argument("grid divisions must be positive");
    }
    if (!(grid_inflation >= 0.0)) {
        throw std::invalid_argument("grid inflation must be nonnegative");
    }
    if (!(delete_pressure >= 0.0)) {
        throw std::invalid_argument("delete pressure must be nonnegative");
    }
}

auto GridIndex::cell_coordinates(std::span<double const> objectives) const -> std::vector<std::size_t>
{
    std::vector<std::size_t> coords(objectives.size());
    for (std::size_t d = 0; d < objectives.size(); ++d) {
        auto const width = (upper[d] - lower[d]) / static_cast<double>(divisions);
        auto const pos = std::floor((objectives[d] - lower[d]) / width);
        auto const clipped = std::clamp(pos, 0.0, static_cast<double>(divisions - 1));
        coords[d] = static_cast<std::size_t>(clipped);
    }
    return coords;
}

auto GridIndex::cell_of(std::span<double const> objectives) const -> CellKey
{
    CellKey key = 0;
    CellKey stride = 1;
    for (auto c : cell_coordinates(objectives)) {
        key += stride * c;
        stride *= divisions;
    }
    return key;
}

auto rebuild_grid(std::span<EvaluatedSolution const> members, std::size_t divisions, double inflation) -> GridIndex
{
    if (members.empty()) {
        throw std::invalid_argument("cannot build a grid over an empty archive");
    }
    GridIndex grid;
    grid.divisions = divisions;
    grid.inflation = inflation;

    auto const m = members.front().objectives.size();
    grid.lower.assign(m, 0.0);
    grid.upper.assign(m, 0.0);
    for (std::size_t d = 0; d < m; ++d) {
        auto lo = members.front().objectives[d];
        auto hi = lo;
        for (auto const& s : members) {
            lo = std::min(lo, s.objectives[d]);
            hi = std::max(hi, s.objectives[d]);
        }
        if (hi - lo <= 0.0) {
            lo -= degenerate_half_width;
            hi += degenerate_half_width;
        }
        auto const margin = inflation * (hi - lo) / static_cast<double>(divisions);
        grid.lower[d] = lo - margin;
        grid.upper[d] = hi + margin;
    }

    grid.member_cell.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto const key = grid.cell_of(members[i].objectives);
        grid.member_cell.push_back(key);
        grid.occupancy[key].push_back(i);
    }
    return grid;
}

auto cell_selection_probabilities(std::span<std::size_t const> occupancies, double exponent) -> std::vector<double>
{
    std::vector<double> p(occupancies.size(), 0.0);
    // weights relative to the extreme nonzero occupancy, so large exponents stay finite
    std::size_t ref = 0;
    for (auto c : occupancies) {
        if (c > 0) {
            ref = ref == 0 ? c : (exponent >= 0.0 ? std::max(ref, c) : std::min(ref, c));
        }
    }
    if (ref == 0) {
        throw std::invalid_argument("no occupied cell to select from");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < occupancies.size(); ++i) {
        if (occupancies[i] > 0) {
            p[i] = std::pow(static_cast<double>(occupancies[i]) / static_cast<double>(ref), exponent);
            total += p[i];
        }
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

Archive::Archive(ArchiveParams params) : params_(params) { params_.validate(); }

void Archive::refresh_grid()
{
    if (members_.empty()) {
        grid_ = GridIndex {};
        return;
    }
    grid_ = rebuild_grid(members_, params_.grid_divisions, params_.grid_inflation);
}

auto Archive::select_leader(Rng& rng, double pressure) const -> EvaluatedSolution const&
{
    if (members_.empty()) {
        throw std::logic_error("leader requested from an empty archive");
    }
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::size_t> const*> cells;
    counts.reserve(grid_.occupancy.size());
    for (auto const& [key, idx] : grid_.occupancy) {
        counts.push_back(idx.size());
        cells.push_back(&idx);
    }
    auto const probs = cell_selection_probabilities(counts, -pressure);
    auto const& cell = *cells[roulette(probs, rng)];
    return members_[cell[rng.index(cell.size())]];
}

auto Archive::insert(EvaluatedSolution candidate, Rng& rng) -> InsertOutcome
{
    for (auto const& m : members_) {
        if (constrained_dominates(m, candidate)) {
            return InsertOutcome::Rejected;
        }
        if (m.objectives == candidate.objectives && m.position == candidate.position) {
            return InsertOutcome::Rejected;
        }
    }

    std::erase_if(members_, [&](auto const& m) { return constrained_dominates(candidate, m); });
    members_.push_back(std::move(candidate));
    refresh_grid();

    if (members_.size() <= params_.capacity) {
        return InsertOutcome::Added;
    }

    // The candidate sits last; only the other members are eligible.
    auto const candidate_index = members_.size() - 1;
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::size_t>> eligible;
    for (auto const& [key, idx] : grid_.occupancy) {
        std::vector<std::size_t> pool;
        std::copy_if(idx.begin(), idx.end(), std::back_inserter(pool), [&](auto i) { return i != candidate_index; });
        counts.push_back(pool.empty() ? 0 : idx.size());
        eligible.push_back(std::move(pool));
    }
    auto const probs = cell_selection_probabilities(counts, params_.delete_pressure);
    auto const& pool = eligible[roulette(probs, rng)];
    auto const victim = pool[rng.index(pool.size())];
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
    refresh_grid();
    return InsertOutcome::AddedWithEviction;
}

} // namespace mofdo
