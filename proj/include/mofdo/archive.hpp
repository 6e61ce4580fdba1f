#ifndef MOFDO_ARCHIVE_HPP
#define MOFDO_ARCHIVE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mofdo/dominance.hpp"
#include "mofdo/rng.hpp"

namespace mofdo {

struct ArchiveParams {
    std::size_t capacity = 100;
    std::size_t grid_divisions = 7;
    double grid_inflation = 1.0;
    double delete_pressure = 2.0; // eviction roulette exponent on cell occupancy

    void validate() const;
};

// Hypercube partition of the archive's objective-space bounding box.
struct GridIndex {
    using CellKey = std::uint64_t;

    std::size_t divisions = 0;
    double inflation = 0.0;
    std::vector<double> lower; // per objective, inflated
    std::vector<double> upper;
    std::vector<CellKey> member_cell;                       // one entry per member
    std::map<CellKey, std::vector<std::size_t>> occupancy; // cell -> member indices, ascending

    [[nodiscard]] auto cell_of(std::span<double const> objectives) const -> CellKey;
    [[nodiscard]] auto cell_coordinates(std::span<double const> objectives) const -> std::vector<std::size_t>;
};

// Builds the grid over a set of objective vectors. Per objective the member
// range is widened by inflation * range / divisions on both sides and split
// into equal right-open cells (the last one right-closed). A zero range is
// replaced by a width of 2e-9 around the value.
auto rebuild_grid(std::span<EvaluatedSolution const> members, std::size_t divisions, double inflation) -> GridIndex;

// Roulette probabilities over cells with the given occupancies, weight
// occupancy^exponent. Negative exponents favour sparse cells.
auto cell_selection_probabilities(std::span<std::size_t const> occupancies, double exponent) -> std::vector<double>;

enum class InsertOutcome { Added, Rejected, AddedWithEviction };

// Capacity-bounded set of mutually non-dominated solutions (under
// constrained dominance) with a grid index kept in sync after every change.
class Archive {
public:
    explicit Archive(ArchiveParams params);

    [[nodiscard]] auto params() const -> ArchiveParams const& { return params_; }
    [[nodiscard]] auto members() const -> std::vector<EvaluatedSolution> const& { return members_; }
    [[nodiscard]] auto grid() const -> GridIndex const& { return grid_; }
    [[nodiscard]] auto size() const -> std::size_t { return members_.size(); }
    [[nodiscard]] auto empty() const -> bool { return members_.empty(); }

    // Picks a non-empty cell by roulette with weight occupancy^-pressure and
    // returns a uniformly chosen member of it. Requires a non-empty archive.
    [[nodiscard]] auto select_leader(Rng& rng, double pressure) const -> EvaluatedSolution const&;

    // Rejects candidates dominated by a member or already present. Otherwise
    // drops the members the candidate dominates, adds it, and when over
    // capacity evicts a random non-candidate member from a cell chosen with
    // weight occupancy^delete_pressure.
    auto insert(EvaluatedSolution candidate, Rng& rng) -> InsertOutcome;

private:
    void refresh_grid();

    ArchiveParams params_;
    std::vector<EvaluatedSolution> members_;
    GridIndex grid_;
};

} // namespace mofdo

#endif
