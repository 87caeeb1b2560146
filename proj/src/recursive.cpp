#include "summon/protocol.hpp"

#include <algorithm>

namespace summon {

namespace {

bool contains(const std::vector<std::size_t>& subset, std::size_t j) {
    return std::find(subset.begin(), subset.end(), j) != subset.end();
}

}  // namespace

RecursivePlan plan_recursive(const SummoningTask& task) {
    Verdict verdict = decide(task);
    if (!verdict.feasible) {
        throw InfeasibleTask("task is infeasible: " + describe(*verdict.violation));
    }
    const std::size_t n = task.n();
    if (n > 9) {
        throw StrategyInapplicable("recursive share tree limited to n <= 9 (n!/2 leaves)");
    }

    RecursivePlan plan;
    std::size_t next_leaf = 0;
    auto build = [&](auto&& self, std::vector<std::size_t> subset) -> ShareNode {
        ShareNode node;
        node.subset = std::move(subset);
        if (node.subset.size() <= 2) {
            node.share_id = next_leaf++;
            return node;
        }
        // One child per dropped element: the k subsets of size k-1.
        for (std::size_t drop = 0; drop < node.subset.size(); ++drop) {
            std::vector<std::size_t> child;
            for (std::size_t k = 0; k < node.subset.size(); ++k) {
                if (k != drop) child.push_back(node.subset[k]);
            }
            node.children.push_back(self(self, std::move(child)));
        }
        return node;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    plan.root = build(build, std::move(all));
    plan.leaf_count = next_leaf;

    // A leaf share reaches z_j iff every subset on its path contains j.
    // Walking down also verifies that exactly k-1 of the k child subsets
    // contain j at every level.
    plan.delivery.assign(n, {});
    for (std::size_t j = 0; j < n; ++j) {
        auto walk = [&](auto&& self, const ShareNode& node) -> void {
            if (!contains(node.subset, j)) return;
            if (node.is_leaf()) {
                plan.delivery[j].push_back(node.share_id);
                return;
            }
            std::size_t containing = 0;
            for (const auto& child : node.children) {
                if (contains(child.subset, j)) ++containing;
            }
            if (containing != node.subset.size() - 1) {
                throw std::logic_error("recursive construction: child subset count is off");
            }
            for (const auto& child : node.children) self(self, child);
        };
        walk(walk, plan.root);
    }
    return plan;
}

}  // namespace summon
