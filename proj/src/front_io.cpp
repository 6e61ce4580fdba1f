#include "mofdo/front_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mofdo {

namespace {

void write_row(std::ostream& os, std::span<double const> head, std::span<double const> tail)
{
    bool first = true;
    for (auto part : { head, tail }) {
        for (auto v : part) {
            if (!first) {
                os << ',';
            }
            os << format_real(v);
            first = false;
        }
    }
    os << '\n';
}

auto parse_header_field(std::string const& header, std::string const& key) -> std::size_t
{
    auto const pos = header.find(key + "=");
    if (pos == std::string::npos) {
        return 0;
    }
    return std::stoul(header.substr(pos + key.size() + 1));
}

} // namespace

auto format_real(double v) -> std::string
{
    char buf[32];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc {}) {
        throw std::runtime_error("failed to format value");
    }
    return { buf, end };
}

void write_front(std::ostream& os, std::span<ObjectiveVector const> points)
{
    os << "# objectives=" << (points.empty() ? 0 : points.front().size()) << '\n';
    for (auto const& p : points) {
        write_row(os, p, {});
    }
}

void write_solutions(std::ostream& os, std::span<EvaluatedSolution const> solutions, bool with_vars)
{
    auto const m = solutions.empty() ? 0 : solutions.front().objectives.size();
    os << "# objectives=" << m;
    if (with_vars) {
        os << " vars=" << (solutions.empty() ? 0 : solutions.front().position.size());
    }
    os << '\n';
    for (auto const& s : solutions) {
        write_row(os, s.objectives, with_vars ? std::span<double const>(s.position) : std::span<double const>());
    }
}

auto read_front(std::istream& is) -> FrontTable
{
    std::string line;
    if (!std::getline(is, line) || !line.starts_with("# objectives=")) {
        throw std::runtime_error("front table lacks its '# objectives=' header");
    }
    FrontTable table;
    table.objectives = parse_header_field(line, "objectives");
    table.vars = parse_header_field(line, "vars");
    auto const width = table.objectives + table.vars;

    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            double v = 0.0;
            auto const [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc {} || ptr != cell.data() + cell.size()) {
                throw std::runtime_error("malformed value in front table: " + cell);
            }
            row.push_back(v);
        }
        if (row.size() != width) {
            throw std::runtime_error("front table row has the wrong number of columns");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace mofdo
