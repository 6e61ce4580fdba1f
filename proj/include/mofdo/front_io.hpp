#ifndef MOFDO_FRONT_IO_HPP
#define MOFDO_FRONT_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mofdo/dominance.hpp"

namespace mofdo {

// Plain-text point table:
//
//   # objectives=<n> [vars=<d>]
//   f1,...,fn[,x1,...,xd]
//
// one point per line, every value with 17 significant digits.

auto format_real(double v) -> std::string;

void write_front(std::ostream& os, std::span<ObjectiveVector const> points);
void write_solutions(std::ostream& os, std::span<EvaluatedSolution const> solutions, bool with_vars);

struct FrontTable {
    std::size_t objectives = 0;
    std::size_t vars = 0;
    std::vector<std::vector<double>> rows; // objectives first, then vars
};

// Throws std::runtime_error on a malformed header or row.
auto read_front(std::istream& is) -> FrontTable;

} // namespace mofdo

#endif
