#include <doctest.h>

#include <cmath>
#include <limits>

#include "mofdo/algorithm.hpp"
#include "mofdo/metrics.hpp"
#include "oracles.hpp"

using mofdo::EvaluatedSolution;

namespace {

auto small_config(std::size_t pop, std::size_t iterations, std::uint64_t seed)
{
    mofdo::MofdoConfig c;
    c.population_size = pop;
    c.iterations = iterations;
    c.archive_capacity = 50;
    c.seed = seed;
    return c;
}

auto bee_at(mofdo::Problem const& p, std::vector<double> x) -> mofdo::ScoutBee
{
    return { p.evaluate(x), std::nullopt };
}

} // namespace

TEST_CASE("fitness_weight: examples")
{
    EvaluatedSolution const current { { 0.0 }, { 0.4, 0.6 }, 0.0 };
    EvaluatedSolution const leader { { 0.0 }, { 0.2, 0.3 }, 0.0 };
    CHECK(mofdo::fitness_weight(current, leader, 0) == doctest::Approx(0.5));
    CHECK(mofdo::fitness_weight(current, current, 0) == 1.0);
    CHECK(mofdo::fitness_weight(current, leader, 1) == doctest::Approx(-0.5));

    EvaluatedSolution const zero { { 0.0 }, { 0.0, 0.0 }, 0.0 };
    CHECK(std::isinf(mofdo::fitness_weight(zero, leader, 0)));

    // scaling maps both objectives to [0, 1] before summing
    mofdo::ObjectiveScaling const s { { 0.0, 0.0 }, { 1.0, 10.0 } };
    CHECK(mofdo::fitness_weight(current, leader, 0, &s) == doctest::Approx((0.2 + 0.03) / (0.4 + 0.06)));
}

TEST_CASE("pace_from_draws: branches")
{
    std::vector const x { 2.0, 2.0 };
    std::vector const leader { 1.0, 1.0 };
    std::vector const zero_walk { 0.0, 0.0 };
    std::vector const walk { 0.5, -1.0 };

    CHECK(mofdo::pace_from_draws(x, leader, 1.0, zero_walk, 0.3) == std::vector { 0.0, 0.0 });
    CHECK(mofdo::pace_from_draws(x, leader, 1.0, walk, 0.3) == std::vector { 1.0, -2.0 });
    CHECK(mofdo::pace_from_draws(x, leader, 0.0, walk, 0.3) == std::vector { 1.0, -2.0 });
    CHECK(mofdo::pace_from_draws(x, leader, -0.5, walk, 0.3) == std::vector { 1.0, -2.0 });
    CHECK(mofdo::pace_from_draws(x, leader, std::numeric_limits<double>::infinity(), walk, 0.3)
        == std::vector { 1.0, -2.0 });

    CHECK(mofdo::pace_from_draws(x, leader, 0.5, {}, 0.2) == std::vector { 0.5, 0.5 });
    CHECK(mofdo::pace_from_draws(x, leader, 0.5, {}, 0.0) == std::vector { 0.5, 0.5 });
    CHECK(mofdo::pace_from_draws(x, leader, 0.5, {}, -0.2) == std::vector { -0.5, -0.5 });

    CHECK_THROWS_AS((void)mofdo::pace_from_draws(x, std::vector { 1.0 }, 0.5, {}, 0.1), std::invalid_argument);
}

TEST_CASE("compute_pace: random walk stays within |x| per coordinate")
{
    auto const p = mofdo::make_problem("zdt1", { { "dimension", 5 } });
    auto const bee = bee_at(*p, { 0.1, 0.2, 0.3, 0.4, 0.5 });
    mofdo::Rng rng(1);
    bool signs_vary = false;
    for (int i = 0; i < 1000; ++i) {
        auto const pace = mofdo::compute_pace(bee, bee.evaluation, 1.0, rng);
        for (std::size_t j = 0; j < 5; ++j) {
            REQUIRE(std::abs(pace[j]) <= bee.position()[j]);
        }
        signs_vary = signs_vary || (pace[0] > 0.0) != (pace[1] > 0.0);
    }
    CHECK(signs_vary);
}

TEST_CASE("config validation")
{
    mofdo::MofdoConfig c;
    CHECK_NOTHROW(c.validate());
    c.population_size = 1;
    CHECK_THROWS(c.validate());
    c = {};
    c.weight_factor = 2;
    CHECK_THROWS(c.validate());
    c = {};
    c.archive_capacity = 0;
    CHECK_THROWS(c.validate());
    c = {};
    c.leader_pressure = 0.0;
    CHECK_THROWS(c.validate());
}

TEST_CASE("step: a Pareto-optimal bee without saved pace stays put")
{
    auto const p = mofdo::make_problem("zdt1", { { "dimension", 2 } });
    auto const config = small_config(2, 1, 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        mofdo::Rng rng(seed);
        mofdo::SwarmState state { { bee_at(*p, { 0.5, 0.0 }) }, mofdo::Archive(config.archive_params()) };
        state.archive.insert(p->evaluate(std::vector { 0.2, 0.0 }), rng);
        auto const before = state.bees[0];
        mofdo::step(state, *p, config, rng);
        CHECK(state.bees[0].evaluation == before.evaluation);
        CHECK_FALSE(state.bees[0].saved_pace.has_value());
    }
}

TEST_CASE("step: an accepted fresh move stores that pace")
{
    auto const p = mofdo::make_problem("zdt1", { { "dimension", 2 } });
    auto const config = small_config(2, 1, 0);
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        mofdo::Rng rng(seed);
        mofdo::SwarmState state { { bee_at(*p, { 0.9, 0.9 }) }, mofdo::Archive(config.archive_params()) };
        state.archive.insert(p->evaluate(std::vector { 0.1, 0.0 }), rng);
        state.archive.insert(p->evaluate(std::vector { 0.6, 0.0 }), rng);

        // replay the first draws of the step on a copy of the generator
        auto replay = rng;
        auto const& leader = state.archive.select_leader(replay, config.leader_pressure);
        auto const fw = mofdo::fitness_weight(state.bees[0].evaluation, leader, config.weight_factor);
        auto const pace = mofdo::compute_pace(state.bees[0], leader, fw, replay);

        auto const before = state.bees[0].evaluation;
        mofdo::step(state, *p, config, rng);
        if (state.bees[0].evaluation != before) {
            ++accepted;
            REQUIRE(state.bees[0].saved_pace.has_value());
            CHECK(*state.bees[0].saved_pace == pace);
        }
    }
    CHECK(accepted > 0);
}

TEST_CASE("step: bees never worsen and the archive keeps its invariants")
{
    for (auto const* name : { "zdt1", "welded_beam", "mmf4" }) {
        CAPTURE(name);
        auto const p = mofdo::make_problem(name);
        auto const config = small_config(20, 1, 3);
        mofdo::Rng rng(3);
        auto state = mofdo::initialize(*p, config, rng);
        for (int t = 0; t < 30; ++t) {
            auto const before = state.bees;
            mofdo::step(state, *p, config, rng);
            for (std::size_t i = 0; i < before.size(); ++i) {
                CHECK_FALSE(oracle::constrained_dominates(before[i].evaluation, state.bees[i].evaluation));
                auto const& x = state.bees[i].position();
                for (std::size_t j = 0; j < x.size(); ++j) {
                    REQUIRE(x[j] >= p->spec().lower_bounds[j]);
                    REQUIRE(x[j] <= p->spec().upper_bounds[j]);
                }
                if (state.bees[i].saved_pace) {
                    CHECK(state.bees[i].saved_pace->size() == x.size());
                }
            }
            CHECK(state.archive.size() <= config.archive_capacity);
            CHECK(oracle::mutually_nondominated(state.archive.members()));
        }
    }
}

TEST_CASE("step: deterministic for a seed")
{
    auto const p = mofdo::make_problem("zdt3");
    auto const config = small_config(10, 1, 11);
    auto once = [&] {
        mofdo::Rng rng(11);
        auto state = mofdo::initialize(*p, config, rng);
        mofdo::step(state, *p, config, rng);
        return state;
    };
    auto const a = once();
    auto const b = once();
    REQUIRE(a.bees.size() == b.bees.size());
    for (std::size_t i = 0; i < a.bees.size(); ++i) {
        CHECK(a.bees[i].evaluation == b.bees[i].evaluation);
        CHECK(a.bees[i].saved_pace == b.bees[i].saved_pace);
    }
    CHECK(a.archive.members() == b.archive.members());
}

TEST_CASE("run: zero iterations returns the initial non-dominated set")
{
    auto const p = mofdo::make_problem("zdt2");
    auto config = small_config(40, 0, 9);
    config.archive_capacity = 100;
    auto const record = mofdo::run(*p, config);
    CHECK(record.discovery_trace.empty());
    CHECK(record.igd_trace.empty());

    mofdo::Rng rng(9);
    auto const state = mofdo::initialize(*p, config, rng);
    std::vector<EvaluatedSolution> initial;
    for (auto const& b : state.bees) {
        initial.push_back(b.evaluation);
    }
    CHECK(record.final_archive == oracle::nondominated(initial));
}

TEST_CASE("run: traces, bounds and determinism")
{
    auto const p = mofdo::make_problem("zdt1");
    auto const config = small_config(30, 40, 5);
    auto const ref = p->reference_front(200);
    auto const a = mofdo::run(*p, config, &ref);
    auto const b = mofdo::run(*p, config, &ref);

    CHECK(a.final_archive == b.final_archive);
    CHECK(a.igd_trace == b.igd_trace);
    CHECK(a.discovery_trace == b.discovery_trace);
    CHECK(a.seed == 5);

    REQUIRE(a.igd_trace.size() == 40);
    REQUIRE(a.discovery_trace.size() == 40);
    for (auto s : a.discovery_trace) {
        CHECK(s >= 1);
        CHECK(s <= 50);
    }
    CHECK(a.igd_trace.back() == doctest::Approx(mofdo::igd(mofdo::objectives_of(a.final_archive), ref)).epsilon(1e-15));
    CHECK(a.igd_trace.back() < a.igd_trace.front());
    CHECK(oracle::mutually_nondominated(a.final_archive));
    for (auto const& s : a.final_archive) {
        for (std::size_t j = 0; j < s.position.size(); ++j) {
            CHECK(s.position[j] >= 0.0);
            CHECK(s.position[j] <= 1.0);
        }
    }

    auto other = config;
    other.seed = 6;
    CHECK(mofdo::run(*p, other).final_archive != a.final_archive);
}

TEST_CASE("run: weight factor and normalization options")
{
    auto const p = mofdo::make_problem("welded_beam");
    auto config = small_config(20, 20, 2);
    config.weight_factor = 1;
    auto const a = mofdo::run(*p, config);
    CHECK_FALSE(a.final_archive.empty());
    config.weight_factor = 0;
    config.normalize_fitness = true;
    auto const b = mofdo::run(*p, config);
    CHECK_FALSE(b.final_archive.empty());
    CHECK(oracle::mutually_nondominated(b.final_archive));
}
