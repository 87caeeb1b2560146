#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "summon/feasibility.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>

using namespace summon;
using namespace summon::testing;

TEST_CASE("the shipped fixtures validate cleanly") {
    CHECK(validate_task(fig1_task()).empty());
    CHECK(validate_task(fig2_task()).empty());
    CHECK(validate_task(fig3_task()).empty());
    CHECK(validate_task(fig4_task()).empty());
    CHECK(validate_task(fig5a_task()).empty());
    CHECK(validate_task(triangle_task()).empty());
}

TEST_CASE("a reveal before its call is flagged") {
    auto task = fig2_task();
    task.pairs[0].reveal.t = task.pairs[0].call.t - 1;
    auto violations = validate_task(task);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == TaskViolation::Kind::RevealPrecedesCall);
    CHECK(violations[0].index == 0);
}

TEST_CASE("mixed dimensions are flagged") {
    auto task = fig2_task();
    task.pairs[1].call.x.push_back(Rational(0));
    auto violations = validate_task(task);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].kind == TaskViolation::Kind::DimensionMismatch);
}

TEST_CASE("causal graphs match the figures") {
    auto g2 = build_graph(fig2_task());
    CHECK(g2.edge(0, 1));
    CHECK_FALSE(g2.edge(1, 0));

    auto g4 = build_graph(fig4_task());
    CHECK(g4.edge(0, 1));
    CHECK(g4.edge(1, 0));

    auto g5 = build_graph(fig5a_task());
    CHECK(g5.undirected_complete());
    CHECK(g5.undirected_edges().size() == 6);
}

TEST_CASE("the triangle fixture is a directed 3-cycle") {
    auto g = build_graph(fig3_task());
    CHECK(g.undirected_complete());
    CHECK(g.edge(0, 2));
    CHECK(g.edge(2, 1));
    CHECK(g.edge(1, 0));
    CHECK_FALSE(g.edge(2, 0));
    CHECK_FALSE(g.edge(1, 2));
    CHECK_FALSE(g.edge(0, 1));
}

TEST_CASE("spacelike call pair is infeasible with the right witness") {
    auto verdict = decide(fig1_task());
    REQUIRE_FALSE(verdict.feasible);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->kind == Witness::Kind::Cond2);
    CHECK(verdict.violation->i == 0);
    CHECK(verdict.violation->j == 1);
}

TEST_CASE("single diamond ahead of the start is feasible") {
    auto s = P("0", {"0"});
    auto task = make_task(MetricConfig::plain(1), s, {{s, P("1", {"0"})}});
    auto verdict = decide(task);
    CHECK(verdict.feasible);
}

TEST_CASE("condition 1 uses reveal points only") {
    // Calls outside the start's light cone are fine (teleportation fixture).
    auto verdict = decide(fig4_task());
    CHECK(verdict.feasible);
}

TEST_CASE("the remaining fixtures are feasible") {
    for (const auto& task : feasible_fixtures()) {
        auto verdict = decide(task);
        CHECK(verdict.feasible);
    }
}

TEST_CASE("a reveal behind the start is a condition-1 witness") {
    auto task = fig2_task();
    task.start.t = R("100");
    // Reveals now precede the start in time.
    auto verdict = decide(task);
    REQUIRE_FALSE(verdict.feasible);
    CHECK(verdict.violation->kind == Witness::Kind::Cond1);
    CHECK(verdict.violation->j == 0);
}

TEST_CASE("feasibility is permutation-equivariant") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        auto task = random_task(rng);
        auto verdict = decide(task);
        auto shuffled = task;
        std::shuffle(shuffled.pairs.begin(), shuffled.pairs.end(), rng);
        CHECK(decide(shuffled).feasible == verdict.feasible);
    }
}

TEST_CASE("delaying a reveal never breaks feasibility") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> delay(1, 5);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        auto task = random_task(rng);
        if (!decide(task).feasible) continue;
        ++checked;
        auto later = task;
        std::uniform_int_distribution<std::size_t> pick(0, later.n() - 1);
        later.pairs[pick(rng)].reveal.t += delay(rng);
        CHECK(decide(later).feasible);
    }
    CHECK(checked > 0);
}

TEST_CASE("feasible tasks have complete undirected support") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto task = random_task(rng);
        if (decide(task).feasible) {
            CHECK(build_graph(task).undirected_complete());
        }
    }
}

TEST_CASE("decide agrees with the corner-enumeration oracle") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        auto task = random_task(rng);
        CHECK(decide(task).feasible == corner_oracle_feasible(task));
    }
}

TEST_CASE("duplicate call points are allowed and not merged") {
    auto y = P("0", {"0"});
    auto task = make_task(MetricConfig::plain(1), P("-1", {"0"}),
                          {{y, P("1", {"0"})}, {y, P("2", {"0"})}});
    CHECK(validate_task(task).empty());
    CHECK(task.n() == 2);
    CHECK(decide(task).feasible);
}
