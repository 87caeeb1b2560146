#include "summon/feasibility.hpp"

#include <sstream>
#include <stdexcept>

namespace summon {

bool CausalGraph::undirected_complete() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!undirected_edge(i, j)) return false;
        }
    }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> CausalGraph::undirected_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (undirected_edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<TaskViolation> validate_task(const SummoningTask& task) {
    std::vector<TaskViolation> out;
    const auto& m = task.metric;
    if (m.c <= 0 || m.dim < 1 || m.axis_radicands.size() != m.dim) {
        out.push_back({TaskViolation::Kind::BadMetric, -1,
                       "metric requires c > 0, dim >= 1 and one radicand per axis"});
        return out;  // nothing else is checkable against a bad metric
    }
    if (task.pairs.empty()) {
        out.push_back({TaskViolation::Kind::EmptyTask, -1, "task needs at least one call/reveal pair"});
    }
    auto check_dim = [&](const SpacetimePoint& p, int index, const char* what) {
        if (p.dim() != m.dim) {
            std::ostringstream msg;
            msg << what << " has dimension " << p.dim() << ", metric has " << m.dim;
            out.push_back({TaskViolation::Kind::DimensionMismatch, index, msg.str()});
            return false;
        }
        return true;
    };
    check_dim(task.start, -1, "start point");
    for (std::size_t j = 0; j < task.pairs.size(); ++j) {
        bool ok = check_dim(task.pairs[j].call, static_cast<int>(j), "call point");
        ok = check_dim(task.pairs[j].reveal, static_cast<int>(j), "reveal point") && ok;
        if (!ok) continue;
        if (!causally_precedes(task.pairs[j].call, task.pairs[j].reveal, m)) {
            std::ostringstream msg;
            msg << "reveal point " << j << " is not in the future light cone of its call point";
            out.push_back({TaskViolation::Kind::RevealPrecedesCall, static_cast<int>(j), msg.str()});
        }
    }
    return out;
}

namespace {

void require_valid(const SummoningTask& task) {
    auto violations = validate_task(task);
    if (!violations.empty()) {
        throw std::invalid_argument("invalid summoning task: " + violations.front().message);
    }
}

}  // namespace

CausalGraph build_graph(const SummoningTask& task) {
    require_valid(task);
    const std::size_t n = task.n();
    CausalGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            g.set_edge(i, j, diamond_precedes(task.diamond(i), task.diamond(j), task.metric));
        }
    }
    return g;
}

Verdict decide(const SummoningTask& task) {
    require_valid(task);
    const std::size_t n = task.n();
    for (std::size_t j = 0; j < n; ++j) {
        if (!causally_precedes(task.start, task.pairs[j].reveal, task.metric)) {
            return Verdict{false, Witness{Witness::Kind::Cond1, -1, static_cast<int>(j)}};
        }
    }
    CausalGraph g = build_graph(task);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!g.undirected_edge(i, j)) {
                return Verdict{false,
                               Witness{Witness::Kind::Cond2, static_cast<int>(i), static_cast<int>(j)}};
            }
        }
    }
    return Verdict{true, std::nullopt};
}

std::string describe(const Witness& w) {
    std::ostringstream out;
    if (w.kind == Witness::Kind::Cond1) {
        out << "condition 1 violated: reveal point " << w.j
            << " is outside the future light cone of the start point";
    } else {
        out << "condition 2 violated: diamonds " << w.i << " and " << w.j
            << " are spacelike separated";
    }
    return out.str();
}

}  // namespace summon
