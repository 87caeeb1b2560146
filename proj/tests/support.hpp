#pragma once

#include "summon/feasibility.hpp"
#include "summon/stabsim.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace summon::testing {

inline Rational R(const std::string& text) {
    auto value = parse_rational(text);
    if (!value) throw std::invalid_argument("bad rational literal: " + text);
    return *value;
}

inline SpacetimePoint P(const std::string& t, std::vector<std::string> coords) {
    SpacetimePoint p;
    p.t = R(t);
    for (const auto& c : coords) p.x.push_back(R(c));
    return p;
}

inline SummoningTask make_task(MetricConfig metric, SpacetimePoint start,
                               std::vector<CallRevealPair> pairs) {
    SummoningTask task;
    task.metric = std::move(metric);
    task.start = std::move(start);
    task.pairs = std::move(pairs);
    return task;
}

// --- the shipped paper-figure fixtures, built in code -----------------------

inline SummoningTask fig1_task() {
    return make_task(MetricConfig::plain(1), P("0", {"0"}),
                     {{P("5/2", {"-5/2"}), P("9/2", {"-5/2"})},
                      {P("5/2", {"5/2"}), P("9/2", {"5/2"})}});
}

inline SummoningTask fig2_task() {
    return make_task(MetricConfig::plain(1), P("0", {"0"}),
                     {{P("5/2", {"5/2"}), P("9/2", {"5/2"})},
                      {P("11/2", {"-5/2"}), P("15/2", {"-5/2"})}});
}

/// Equilateral triangle with side 2: calls on the vertices at t=0, reveals
/// on the edge midpoints at t=1, start at the centroid at t=-2. The second
/// axis carries radicand 3.
inline SummoningTask fig3_task() {
    MetricConfig m;
    m.c = 1;
    m.dim = 2;
    m.axis_radicands = {1, 3};
    return make_task(m, P("-2", {"1", "1/3"}),
                     {{P("0", {"0", "0"}), P("1", {"1", "0"})},
                      {P("0", {"2", "0"}), P("1", {"3/2", "1/2"})},
                      {P("0", {"1", "1"}), P("1", {"1/2", "1/2"})}});
}

inline SummoningTask fig4_task() {
    return make_task(MetricConfig::plain(2), P("0", {"0", "0"}),
                     {{P("0", {"3/2", "1/2"}), P("3", {"3/2", "2"})},
                      {P("0", {"3/2", "-1/2"}), P("3", {"3/2", "-2"})}});
}

/// Four call points on a 6x4 rectangle at t=0, reveals on edge midpoints
/// with times chosen so every diamond pair is causally related (several
/// relations exactly lightlike).
inline SummoningTask fig5a_task() {
    return make_task(MetricConfig::plain(2), P("-1", {"3", "2"}),
                     {{P("0", {"0", "0"}), P("5", {"3", "0"})},
                      {P("0", {"6", "0"}), P("2", {"6", "2"})},
                      {P("0", {"6", "4"}), P("5", {"3", "4"})},
                      {P("0", {"0", "4"}), P("7", {"0", "2"})}});
}

/// The triangle fixture scaled to side 4.
inline SummoningTask triangle_task() {
    MetricConfig m;
    m.c = 1;
    m.dim = 2;
    m.axis_radicands = {1, 3};
    return make_task(m, P("-4", {"2", "2/3"}),
                     {{P("0", {"0", "0"}), P("2", {"2", "0"})},
                      {P("0", {"4", "0"}), P("2", {"3", "1"})},
                      {P("0", {"2", "2"}), P("2", {"1", "1"})}});
}

inline std::vector<SummoningTask> feasible_fixtures() {
    return {fig2_task(), fig3_task(), fig4_task(), fig5a_task(), triangle_task()};
}

// --- randomized tasks and the corner-enumeration oracle ---------------------

/// Random task with small integer coordinates in 1 or 2 spatial dimensions.
/// Pairs are valid diamonds by construction; feasibility varies.
inline SummoningTask random_task(std::mt19937_64& rng, std::size_t max_pairs = 4) {
    std::uniform_int_distribution<int> dim_pick(1, 2);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> tshift(0, 5);
    std::size_t dim = static_cast<std::size_t>(dim_pick(rng));
    std::uniform_int_distribution<std::size_t> npick(1, max_pairs);
    std::size_t n = npick(rng);

    auto random_point = [&](int t_lo, int t_hi) {
        SpacetimePoint p;
        std::uniform_int_distribution<int> t_pick(t_lo, t_hi);
        p.t = t_pick(rng);
        for (std::size_t k = 0; k < dim; ++k) p.x.push_back(coord(rng));
        return p;
    };

    SummoningTask task;
    task.metric = MetricConfig::plain(dim);
    task.start = random_point(-6, -1);
    for (std::size_t j = 0; j < n; ++j) {
        CallRevealPair pair;
        pair.call = random_point(-2, 2);
        do {
            pair.reveal = pair.call;
            for (std::size_t k = 0; k < dim; ++k) pair.reveal.x[k] = coord(rng);
            pair.reveal.t = pair.call.t + tshift(rng);
        } while (!causally_precedes(pair.call, pair.reveal, task.metric));
        task.pairs.push_back(std::move(pair));
    }
    return task;
}

/// Random task that is feasible by construction: generous reveal times put
/// every diamond pair in causal contact and the start far in the past.
inline SummoningTask feasible_random_task(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> jitter(0, 3);
    SummoningTask task;
    task.metric = MetricConfig::plain(2);
    task.start.t = -20;
    task.start.x = {Rational(coord(rng)), Rational(coord(rng))};
    for (std::size_t j = 0; j < n; ++j) {
        CallRevealPair pair;
        pair.call.t = jitter(rng);
        pair.call.x = {Rational(coord(rng)), Rational(coord(rng))};
        pair.reveal.t = 20 + static_cast<int>(j) + jitter(rng);
        pair.reveal.x = {Rational(coord(rng)), Rational(coord(rng))};
        task.pairs.push_back(std::move(pair));
    }
    return task;
}

/// Diamond corner set: bottom and top always; in 1+1D also the two light
/// cone crossing corners (exact because the oracle tasks use radicand 1).
inline std::vector<SpacetimePoint> diamond_corners(const CausalDiamond& d,
                                                   const MetricConfig& m) {
    std::vector<SpacetimePoint> out{d.bottom, d.top};
    if (m.dim == 1 && m.axis_radicands[0] == 1) {
        Rational uy = m.c * d.bottom.t - d.bottom.x[0];
        Rational vy = m.c * d.bottom.t + d.bottom.x[0];
        Rational uz = m.c * d.top.t - d.top.x[0];
        Rational vz = m.c * d.top.t + d.top.x[0];
        auto from_uv = [&](const Rational& u, const Rational& v) {
            SpacetimePoint p;
            p.t = (u + v) / (2 * m.c);
            p.x = {(v - u) / 2};
            return p;
        };
        out.push_back(from_uv(uy, vz));
        out.push_back(from_uv(uz, vy));
    }
    return out;
}

/// Independent feasibility oracle: test the two conditions by direct
/// enumeration of point pairs on diamond corners.
inline bool corner_oracle_feasible(const SummoningTask& task) {
    for (const auto& pair : task.pairs) {
        if (!causally_precedes(task.start, pair.reveal, task.metric)) return false;
    }
    for (std::size_t i = 0; i < task.n(); ++i) {
        for (std::size_t j = i + 1; j < task.n(); ++j) {
            auto ci = diamond_corners(task.diamond(i), task.metric);
            auto cj = diamond_corners(task.diamond(j), task.metric);
            bool related = false;
            for (const auto& p : ci) {
                for (const auto& q : cj) {
                    if (causally_precedes(p, q, task.metric) ||
                        causally_precedes(q, p, task.metric)) {
                        related = true;
                    }
                }
            }
            if (!related) return false;
        }
    }
    return true;
}

}  // namespace summon::testing
