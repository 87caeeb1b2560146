#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "summon/geometry.hpp"
#include "support.hpp"

#include <random>

using namespace summon;
using namespace summon::testing;

TEST_CASE("pure time translation is causal") {
    auto m = MetricConfig::plain(1);
    CHECK(causally_precedes(P("0", {"0"}), P("1", {"0"}), m));
    CHECK_FALSE(causally_precedes(P("1", {"0"}), P("0", {"0"}), m));
}

TEST_CASE("exactly lightlike pairs count as causal") {
    // y_0 to z_1 across the second figure: dt = 5 = |dx|.
    auto m = MetricConfig::plain(1);
    CHECK(causally_precedes(P("5/2", {"5/2"}), P("15/2", {"-5/2"}), m));
    auto cls = interval_class(P("5/2", {"5/2"}), P("15/2", {"-5/2"}), m);
    CHECK(cls.kind == IntervalKind::Lightlike);
    CHECK(cls.time_sign == 1);
}

TEST_CASE("equal-time separated points are spacelike") {
    // s cannot reach the call points of the teleportation example.
    auto m = MetricConfig::plain(2);
    CHECK_FALSE(causally_precedes(P("0", {"0", "0"}), P("0", {"3/2", "1/2"}), m));
    auto cls = interval_class(P("5/2", {"-5/2"}), P("5/2", {"5/2"}), m.dim == 1 ? m : MetricConfig::plain(1));
    CHECK(cls.kind == IntervalKind::Spacelike);
    CHECK(cls.time_sign == 0);
}

TEST_CASE("identical points are lightlike with zero time sign") {
    auto m = MetricConfig::plain(2);
    auto p = P("3", {"1", "2"});
    auto cls = interval_class(p, p, m);
    CHECK(cls.kind == IntervalKind::Lightlike);
    CHECK(cls.time_sign == 0);
    CHECK(causally_precedes(p, p, m));
}

TEST_CASE("surd axes stay exact: triangle fixture is lightlike on the nose") {
    MetricConfig m;
    m.dim = 2;
    m.axis_radicands = {1, 3};
    // y_2 = (1, sqrt(3)) at t=0 vs z_1 = (3/2, sqrt(3)/2) at t=1:
    // squared distance (1/2)^2 + 3*(1/2)^2 = 1 = (c dt)^2.
    auto cls = interval_class(P("0", {"1", "1"}), P("1", {"3/2", "1/2"}), m);
    CHECK(cls.kind == IntervalKind::Lightlike);
    CHECK(cls.time_sign == 1);
}

TEST_CASE("signal speed scales the light cone exactly") {
    auto fast = MetricConfig::plain(1, R("2"));
    CHECK(causally_precedes(P("0", {"0"}), P("1", {"2"}), fast));   // lightlike at c=2
    CHECK_FALSE(causally_precedes(P("0", {"0"}), P("1", {"2"}), MetricConfig::plain(1)));
    auto slow = MetricConfig::plain(1, R("1/2"));
    CHECK(interval_class(P("0", {"0"}), P("2", {"1"}), slow).kind ==
          IntervalKind::Lightlike);
    CHECK(interval_class(P("0", {"0"}), P("2", {"2"}), slow).kind ==
          IntervalKind::Spacelike);
}

TEST_CASE("radicand-zero axes contribute nothing") {
    MetricConfig m;
    m.dim = 2;
    m.axis_radicands = {1, 0};  // second axis is identically zero
    auto a = P("0", {"0", "7"});
    auto b = P("1", {"1", "-3"});
    CHECK(causally_precedes(a, b, m));  // lightlike on the live axis
    CHECK(same_event(P("2", {"1", "5"}), P("2", {"1", "9"}), m));
}

TEST_CASE("dimension mismatch is an error") {
    auto m = MetricConfig::plain(2);
    CHECK_THROWS_AS(causally_precedes(P("0", {"0"}), P("1", {"0", "0"}), m),
                    std::invalid_argument);
    MetricConfig bad;
    bad.dim = 2;
    bad.axis_radicands = {1};  // one radicand missing
    CHECK_THROWS_AS(causally_precedes(P("0", {"0", "0"}), P("1", {"0", "0"}), bad),
                    std::invalid_argument);
}

TEST_CASE("diamond precedence on the chain example") {
    auto task = fig2_task();
    auto m = task.metric;
    CHECK(diamond_precedes(task.diamond(0), task.diamond(1), m));
    CHECK_FALSE(diamond_precedes(task.diamond(1), task.diamond(0), m));  // dt = -1
    CHECK(diamond_precedes(task.diamond(0), task.diamond(0), m));        // reflexive
}

TEST_CASE("diamond precedence both ways on the teleportation example") {
    auto task = fig4_task();
    CHECK(diamond_precedes(task.diamond(0), task.diamond(1), task.metric));
    CHECK(diamond_precedes(task.diamond(1), task.diamond(0), task.metric));
}

namespace {

SpacetimePoint random_rational_point(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    SpacetimePoint p;
    p.t = Rational(num(rng), den(rng));
    for (std::size_t k = 0; k < dim; ++k) p.x.push_back(Rational(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST_CASE("precedence is a partial order on events") {
    std::mt19937_64 rng(7);
    auto m = MetricConfig::plain(2);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_rational_point(rng, 2);
        auto b = random_rational_point(rng, 2);
        auto c = random_rational_point(rng, 2);
        CHECK(causally_precedes(a, a, m));
        if (causally_precedes(a, b, m) && causally_precedes(b, c, m)) {
            CHECK(causally_precedes(a, c, m));
        }
        if (causally_precedes(a, b, m) && causally_precedes(b, a, m)) {
            CHECK(same_event(a, b, m));
        }
    }
}

TEST_CASE("precedence is invariant under exact symmetries") {
    std::mt19937_64 rng(11);
    auto m = MetricConfig::plain(2);
    std::uniform_int_distribution<int> shift(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_rational_point(rng, 2);
        auto b = random_rational_point(rng, 2);
        bool base = causally_precedes(a, b, m);

        auto swap_axes = [](SpacetimePoint p) {
            std::swap(p.x[0], p.x[1]);
            return p;
        };
        auto flip_sign = [](SpacetimePoint p) {
            p.x[0] = -p.x[0];
            return p;
        };
        Rational dt(shift(rng));
        auto translate = [&](SpacetimePoint p) {
            p.t += dt;
            return p;
        };
        CHECK(causally_precedes(swap_axes(a), swap_axes(b), m) == base);
        CHECK(causally_precedes(flip_sign(a), flip_sign(b), m) == base);
        CHECK(causally_precedes(translate(a), translate(b), m) == base);
    }
}

TEST_CASE("interval classification is symmetric under argument swap") {
    std::mt19937_64 rng(13);
    auto m = MetricConfig::plain(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_rational_point(rng, 1);
        auto b = random_rational_point(rng, 1);
        auto ab = interval_class(a, b, m);
        auto ba = interval_class(b, a, m);
        CHECK(ab.kind == ba.kind);
        CHECK(ab.time_sign == -ba.time_sign);
    }
}

TEST_CASE("diamond precedence matches a segment-sampling oracle") {
    std::mt19937_64 rng(17);
    auto m = MetricConfig::plain(1);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> lam_num(0, 4);
    auto random_diamond = [&]() {
        SpacetimePoint bottom, top;
        do {
            bottom = random_rational_point(rng, 1);
            top = random_rational_point(rng, 1);
        } while (!causally_precedes(bottom, top, m));
        return CausalDiamond{bottom, top};
    };
    auto lerp = [](const CausalDiamond& d, const Rational& lam) {
        SpacetimePoint p;
        p.t = d.bottom.t + lam * (d.top.t - d.bottom.t);
        p.x = {d.bottom.x[0] + lam * (d.top.x[0] - d.bottom.x[0])};
        return p;
    };
    for (int trial = 0; trial < 120; ++trial) {
        auto di = random_diamond();
        auto dj = random_diamond();
        bool direct = diamond_precedes(di, dj, m);
        bool sampled = false;
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                auto p = lerp(di, Rational(a, 4));
                auto q = lerp(dj, Rational(b, 4));
                if (causally_precedes(p, q, m)) sampled = true;
            }
        }
        // The sample set contains bottom_i and top_j, so the two agree
        // exactly; in particular a found sample always implies precedence.
        CHECK(direct == sampled);
    }
}
