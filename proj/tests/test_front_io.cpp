#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mofdo/front_io.hpp"

TEST_CASE("format_real: 17 significant digits")
{
    CHECK(mofdo::format_real(0.5) == "0.5");
    CHECK(mofdo::format_real(1.0) == "1");
    CHECK(mofdo::format_real(0.1) == "0.10000000000000001");
    CHECK(mofdo::format_real(-2.5e-20) == "-2.4999999999999999e-20");
    CHECK(mofdo::format_real(1e300) == "1.0000000000000001e+300");
}

TEST_CASE("write_front: header and rows")
{
    std::vector<mofdo::ObjectiveVector> const pts { { 0.0, 1.0 }, { 0.25, 0.5 } };
    std::ostringstream os;
    mofdo::write_front(os, pts);
    CHECK(os.str() == "# objectives=2\n0,1\n0.25,0.5\n");
}

TEST_CASE("write_solutions: with and without variables")
{
    std::vector<mofdo::EvaluatedSolution> const s { { { 0.2, 3.0, 8.0, 0.2 }, { 1.5, 0.02 }, 0.0 } };
    std::ostringstream with;
    mofdo::write_solutions(with, s, true);
    CHECK(with.str() == "# objectives=2 vars=4\n1.5,0.02,0.20000000000000001,3,8,0.20000000000000001\n");
    std::ostringstream without;
    mofdo::write_solutions(without, s, false);
    CHECK(without.str() == "# objectives=2\n1.5,0.02\n");
}

TEST_CASE("round trip preserves every bit")
{
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mofdo::EvaluatedSolution> s(1 + trial % 7);
        for (auto& e : s) {
            e.objectives = { u(gen) * std::pow(10.0, expo(gen) / 10), u(gen) };
            e.position = { u(gen), std::numeric_limits<double>::denorm_min(), -0.0 };
        }
        std::stringstream ss;
        mofdo::write_solutions(ss, s, true);
        auto const t = mofdo::read_front(ss);
        CHECK(t.objectives == 2);
        CHECK(t.vars == 3);
        REQUIRE(t.rows.size() == s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(t.rows[i][0] == s[i].objectives[0]);
            CHECK(t.rows[i][1] == s[i].objectives[1]);
            CHECK(t.rows[i][2] == s[i].position[0]);
            CHECK(t.rows[i][3] == s[i].position[1]);
        }
    }
}

TEST_CASE("read_front: malformed input")
{
    std::istringstream no_header("0,1\n");
    CHECK_THROWS_AS((void)mofdo::read_front(no_header), std::runtime_error);
    std::istringstream bad_value("# objectives=2\n0,abc\n");
    CHECK_THROWS_AS((void)mofdo::read_front(bad_value), std::runtime_error);
    std::istringstream short_row("# objectives=2\n0\n");
    CHECK_THROWS_AS((void)mofdo::read_front(short_row), std::runtime_error);
    std::istringstream empty_body("# objectives=2\n");
    CHECK(mofdo::read_front(empty_body).rows.empty());
}
