#include "summon/gf2.hpp"

namespace summon {

bool RowEchelon::insert(BitVec row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (row.get(pivots_[r])) row ^= rows_[r];
    }
    auto pivot = row.first_set();
    if (!pivot) return false;
    rows_.push_back(std::move(row));
    pivots_.push_back(*pivot);
    return true;
}

bool RowEchelon::in_span(BitVec row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (row.get(pivots_[r])) row ^= rows_[r];
    }
    return row.none();
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
    RowEchelon e;
    for (auto& r : rows) e.insert(std::move(r));
    return e.rank();
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows,
                                const std::vector<bool>& rhs, std::size_t n_cols) {
    std::vector<BitVec> kept;
    std::vector<bool> kept_rhs;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        BitVec eq = rows[r];
        bool b = rhs[r];
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (eq.get(pivots[k])) {
                eq ^= kept[k];
                b = b != kept_rhs[k];
            }
        }
        auto pivot = eq.first_set();
        if (!pivot) {
            if (b) return std::nullopt;  // 0 = 1: inconsistent
            continue;
        }
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (kept[k].get(*pivot)) {
                kept[k] ^= eq;
                kept_rhs[k] = kept_rhs[k] != b;
            }
        }
        kept.push_back(std::move(eq));
        kept_rhs.push_back(b);
        pivots.push_back(*pivot);
    }
    BitVec solution(n_cols);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        if (kept_rhs[k]) solution.set(pivots[k], true);
    }
    return solution;
}

}  // namespace summon
