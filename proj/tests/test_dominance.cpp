#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mofdo/dominance.hpp"
#include "oracles.hpp"

using mofdo::EvaluatedSolution;

namespace {

auto feasible(std::vector<double> f) -> EvaluatedSolution { return { { 0.0 }, std::move(f), 0.0 }; }

auto objectives(std::vector<EvaluatedSolution> const& set)
{
    std::vector<std::vector<double>> out;
    for (auto const& s : set) {
        out.push_back(s.objectives);
    }
    return out;
}

} // namespace

TEST_CASE("dominates: basic relations")
{
    CHECK(mofdo::dominates(std::vector { 1.0, 2.0 }, std::vector { 2.0, 3.0 }));
    CHECK_FALSE(mofdo::dominates(std::vector { 1.0, 2.0 }, std::vector { 1.0, 2.0 }));
    CHECK_FALSE(mofdo::dominates(std::vector { 1.0, 2.0 }, std::vector { 2.0, 1.0 }));
    CHECK_FALSE(mofdo::dominates(std::vector { 2.0, 1.0 }, std::vector { 1.0, 2.0 }));
    CHECK(mofdo::dominates(std::vector { 1.0, 2.0 }, std::vector { 1.0, 3.0 }));
}

TEST_CASE("dominates: usage errors")
{
    CHECK_THROWS_AS(mofdo::dominates(std::vector { 1.0 }, std::vector { 1.0, 2.0 }), std::invalid_argument);
    CHECK_THROWS_AS(mofdo::dominates(std::vector { std::nan(""), 1.0 }, std::vector { 1.0, 2.0 }), std::invalid_argument);
    CHECK_THROWS_AS(mofdo::dominates(std::vector { 1.0, 1.0 }, std::vector { 1.0, HUGE_VAL }), std::invalid_argument);
}

TEST_CASE("dominates: antisymmetric, irreflexive, transitive on random triples")
{
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> level(0, 4);
    for (int trial = 0; trial < 5000; ++trial) {
        std::vector<double> a(3);
        std::vector<double> b(3);
        std::vector<double> c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = level(gen);
            b[i] = level(gen);
            c[i] = level(gen);
        }
        CHECK_FALSE(mofdo::dominates(a, a));
        if (mofdo::dominates(a, b)) {
            CHECK_FALSE(mofdo::dominates(b, a));
        }
        if (mofdo::dominates(a, b) && mofdo::dominates(b, c)) {
            CHECK(mofdo::dominates(a, c));
        }
    }
}

TEST_CASE("constrained_dominates: feasibility first")
{
    EvaluatedSolution a { { 0.0 }, { 5.0, 5.0 }, 0.0 };
    EvaluatedSolution b { { 0.0 }, { 1.0, 1.0 }, 3.0 };
    CHECK(mofdo::constrained_dominates(a, b));
    CHECK_FALSE(mofdo::constrained_dominates(b, a));

    EvaluatedSolution c { { 0.0 }, { 9.0, 9.0 }, 2.0 };
    EvaluatedSolution d { { 0.0 }, { 0.0, 0.0 }, 5.0 };
    CHECK(mofdo::constrained_dominates(c, d));

    CHECK_FALSE(mofdo::constrained_dominates(feasible({ 1.0, 1.0 }), feasible({ 1.0, 1.0 })));
}

TEST_CASE("nondominated_filter: examples")
{
    std::vector set { feasible({ 1.0, 2.0 }), feasible({ 2.0, 1.0 }), feasible({ 3.0, 3.0 }) };
    auto const out = mofdo::nondominated_filter(set);
    REQUIRE(out.size() == 2);
    CHECK(out[0].objectives == std::vector { 1.0, 2.0 });
    CHECK(out[1].objectives == std::vector { 2.0, 1.0 });

    std::vector single { feasible({ 4.0, 4.0 }) };
    CHECK(mofdo::nondominated_filter(single) == single);

    CHECK(mofdo::nondominated_filter(std::vector<EvaluatedSolution> {}).empty());
}

TEST_CASE("nondominated_filter: duplicates survive and order is kept")
{
    std::vector set { feasible({ 2.0, 1.0 }), feasible({ 1.0, 2.0 }), feasible({ 2.0, 1.0 }), feasible({ 2.0, 2.0 }) };
    set[2].position = { 7.0 };
    auto const out = mofdo::nondominated_filter(set);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == set[0]);
    CHECK(out[1] == set[1]);
    CHECK(out[2] == set[2]);
}

TEST_CASE("nondominated_filter: infeasible-only sets keep the least violation")
{
    std::vector<EvaluatedSolution> set {
        { { 0.0 }, { 1.0, 1.0 }, 4.0 },
        { { 1.0 }, { 9.0, 9.0 }, 2.0 },
        { { 2.0 }, { 0.0, 0.0 }, 2.0 },
    };
    auto const out = mofdo::nondominated_filter(set);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == set[1]);
    CHECK(out[1] == set[2]);
}

TEST_CASE("nondominated_filter: matches the pairwise oracle on 50 random points")
{
    std::mt19937_64 gen(2024);
    auto const set = oracle::random_solutions(gen, 50, 2, 0.0);
    CHECK(mofdo::nondominated_filter(set) == oracle::nondominated(set));
}

TEST_CASE("nondominated_filter: properties over mixed random sets")
{
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto const m = static_cast<std::size_t>(2 + trial % 2);
        auto const set = oracle::random_solutions(gen, 30 + trial, m, trial % 3 == 0 ? 0.3 : 0.0, trial % 2 == 0);
        auto const out = mofdo::nondominated_filter(set);

        CHECK(out == oracle::nondominated(set));
        CHECK(oracle::mutually_nondominated(out));
        CHECK(mofdo::nondominated_filter(out) == out);

        // every excluded member is dominated by a survivor
        for (auto const& s : set) {
            if (std::find(out.begin(), out.end(), s) != out.end()) {
                continue;
            }
            bool covered = false;
            for (auto const& k : out) {
                covered = covered || oracle::constrained_dominates(k, s);
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("nondominated_indices: rejects inconsistent lengths")
{
    std::vector<mofdo::ObjectiveVector> pts { { 1.0, 2.0 }, { 1.0 } };
    CHECK_THROWS_AS(mofdo::nondominated_indices(pts), std::invalid_argument);
    CHECK(objectives({}).empty());
}
