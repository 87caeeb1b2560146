#include "summon/protocol.hpp"

#include <algorithm>

namespace summon {

namespace {

// Light-cone coordinates u = c t - x, v = c t + x turn 1+1D causal order
// into the product order: p precedes q iff u and v both grow.
struct LightCone {
    Rational u;
    Rational v;
};

LightCone to_lightcone(const SpacetimePoint& p, const Rational& c) {
    return {c * p.t - p.x[0], c * p.t + p.x[0]};
}

SpacetimePoint from_lightcone(const LightCone& lc, const Rational& c) {
    SpacetimePoint p;
    p.t = (lc.u + lc.v) / (2 * c);
    p.x = {(lc.v - lc.u) / 2};
    return p;
}

bool lc_leq(const LightCone& a, const LightCone& b) {
    return a.u <= b.u && a.v <= b.v;
}

LightCone lc_max(const LightCone& a, const LightCone& b) {
    return {std::max(a.u, b.u), std::max(a.v, b.v)};
}

}  // namespace

ProtocolPlan plan_chain(const SummoningTask& task) {
    const auto& m = task.metric;
    if (m.dim != 1) throw StrategyInapplicable("the chain strategy is 1+1D only");
    if (m.axis_radicands.at(0) != 1) {
        throw StrategyInapplicable("the chain strategy needs a plain rational axis");
    }
    CausalGraph g = build_graph(task);  // validates the task
    const std::size_t n = task.n();

    // A chain ordering must make every pair a forward edge. Pairs with a
    // single direction force a precedence; pairs with none rule a chain out.
    std::vector<std::vector<std::size_t>> forced_after(n);
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ij = g.edge(i, j), ji = g.edge(j, i);
            if (!ij && !ji) throw NoChain("diamonds are not pairwise causally related");
            if (ij && !ji) {
                forced_after[i].push_back(j);
                ++indegree[j];
            } else if (ji && !ij) {
                forced_after[j].push_back(i);
                ++indegree[i];
            }
        }
    }
    std::vector<std::size_t> order;
    {
        std::vector<bool> done(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (!done[v] && indegree[v] == 0) {
                    pick = v;
                    break;
                }
            }
            if (pick == n) throw NoChain("forced precedences form a cycle");
            done[pick] = true;
            order.push_back(pick);
            for (std::size_t w : forced_after[pick]) --indegree[w];
        }
    }

    // Earliest-arrival sweep: clip the running position into each diamond.
    std::vector<SpacetimePoint> waypoints;
    LightCone position = to_lightcone(task.start, m.c);
    for (std::size_t v : order) {
        position = lc_max(position, to_lightcone(task.pairs[v].call, m.c));
        if (!lc_leq(position, to_lightcone(task.pairs[v].reveal, m.c))) {
            throw NoChain("no monotone causal curve passes through every diamond");
        }
        waypoints.push_back(from_lightcone(position, m.c));
    }

    ProtocolPlan plan;
    plan.strategy = "chain";
    plan.n = n;
    plan.tokens.push_back({0, "payload", task.start});
    plan.payload_token = 0;

    // A call at the k-th diamond is audible at its own waypoint and at every
    // later one (waypoints only ever move forward in the causal order), so
    // the carrier can branch on exact local knowledge.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = order[k];
        Directive d{task.pairs[v].call, Guard::call_here(static_cast<int>(v)), {}};
        for (std::size_t later = k; later < n; ++later) {
            d.actions.push_back(ActAnnounce{static_cast<int>(v), waypoints[later]});
        }
        d.actions.push_back(ActAnnounce{static_cast<int>(v), task.pairs[v].reveal});
        plan.directives.push_back(std::move(d));
    }
    plan.directives.push_back({task.start, Guard::always(), {ActSendQubit{0, waypoints[0]}}});
    std::vector<int> visited;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = order[k];
        plan.directives.push_back({waypoints[k], Guard::announce_received(static_cast<int>(v)),
                                   {ActSendQubit{0, task.pairs[v].reveal}}});
        visited.push_back(static_cast<int>(v));
        if (k + 1 < n) {
            plan.directives.push_back({waypoints[k], Guard::announce_none_of(visited),
                                       {ActSendQubit{0, waypoints[k + 1]}}});
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = order[k];
        plan.directives.push_back({task.pairs[v].reveal,
                                   Guard::announce_received(static_cast<int>(v)),
                                   {ActReveal{0}}});
    }
    auto problems = validate_plan(plan, task);
    if (!problems.empty()) {
        throw std::logic_error("compiled plan violates its invariants: " + problems.front());
    }
    return plan;
}

}  // namespace summon
