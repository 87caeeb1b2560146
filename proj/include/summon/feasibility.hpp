#pragma once

#include "summon/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace summon {

struct CallRevealPair {
    SpacetimePoint call;    // y_j
    SpacetimePoint reveal;  // z_j
};

/// A summoning problem instance: the state starts at `start`, may be
/// requested at exactly one call point, and must then be produced at the
/// paired reveal point.
struct SummoningTask {
    MetricConfig metric;
    SpacetimePoint start;
    std::vector<CallRevealPair> pairs;

    std::size_t n() const { return pairs.size(); }
    CausalDiamond diamond(std::size_t j) const {
        return CausalDiamond{pairs[j].call, pairs[j].reveal};
    }
};

struct TaskViolation {
    enum class Kind {
        EmptyTask,
        BadMetric,
        DimensionMismatch,
        RevealPrecedesCall,
    };
    Kind kind;
    int index = -1;  // pair index where applicable
    std::string message;
};

/// Directed graph on the causal diamonds: edge (i,j) iff there is a causal
/// curve from D_i to D_j. No self loops are stored.
class CausalGraph {
public:
    CausalGraph() = default;
    explicit CausalGraph(std::size_t n) : n_(n), adj_(n * n, false) {}

    std::size_t size() const { return n_; }
    bool edge(std::size_t i, std::size_t j) const { return i != j && adj_[i * n_ + j]; }
    void set_edge(std::size_t i, std::size_t j, bool value) { adj_[i * n_ + j] = value; }

    bool undirected_edge(std::size_t i, std::size_t j) const {
        return edge(i, j) || edge(j, i);
    }
    /// Every unordered pair of distinct vertices is related in some direction.
    bool undirected_complete() const;
    /// Unordered related pairs {i, j}, i < j, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> undirected_edges() const;

private:
    std::size_t n_ = 0;
    std::vector<bool> adj_;
};

struct Witness {
    enum class Kind { Cond1, Cond2 };
    Kind kind;
    int i = -1;  // diamond index (Cond2) or unused
    int j = -1;  // reveal index (Cond1) / second diamond (Cond2)

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool feasible = false;
    std::optional<Witness> violation;  // present iff infeasible
};

/// Standing-assumption checks for a task: nonempty, consistent dimensions,
/// c > 0, and every reveal in the future light cone of its call. Violations
/// are data, one entry per failed invariant.
std::vector<TaskViolation> validate_task(const SummoningTask& task);

/// Adjacency per diamond_precedes. Requires validate_task(task) empty;
/// throws std::invalid_argument otherwise.
CausalGraph build_graph(const SummoningTask& task);

/// The feasibility decision: feasible iff (1) start <= z_j for every j and
/// (2) every pair of diamonds is causally related. The witness names the
/// first failure in index order, condition 1 scanned before condition 2.
Verdict decide(const SummoningTask& task);

std::string describe(const Witness& w);

}  // namespace summon
