#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace summon {

/// Packed GF(2) vector of fixed length.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    BitVec& operator&=(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    BitVec& operator|=(const BitVec& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }
    friend BitVec operator|(BitVec a, const BitVec& b) { a |= b; return a; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    /// parity of popcount(a & b); the workhorse of symplectic products.
    static bool and_parity(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
        return __builtin_parityll(acc);
    }

    std::optional<std::size_t> first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
        }
        return std::nullopt;
    }

    void for_each_set(const std::function<void(std::size_t)>& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn((w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> set_positions() const {
        std::vector<std::size_t> out;
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// New vector of positions.size() bits with result[k] = this[positions[k]].
    BitVec gather(const std::vector<std::size_t>& positions) const {
        BitVec out(positions.size());
        for (std::size_t k = 0; k < positions.size(); ++k) {
            if (get(positions[k])) out.set(k, true);
        }
        return out;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental row-echelon basis over GF(2). Rows are reduced against the
/// basis as they are inserted; pivot columns stay unique.
class RowEchelon {
public:
    /// Reduce and insert; returns true when the rank grew.
    bool insert(BitVec row);
    /// Would `row` reduce to zero against the current basis?
    bool in_span(BitVec row) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row echelon where each row drags a payload along: solving
/// sum y_i key_i = key yields the matching combination sum y_i payload_i.
template <typename Payload>
class AugmentedEchelon {
public:
    /// Combine is any associative xor-like fold applied to payloads.
    bool insert(BitVec key, Payload payload,
                const std::function<void(Payload&, const Payload&)>& combine) {
        reduce(key, payload, combine);
        auto pivot = key.first_set();
        if (!pivot) return false;
        rows_.push_back(std::move(key));
        payloads_.push_back(std::move(payload));
        pivots_.push_back(*pivot);
        return true;
    }

    /// Reduce `key` to zero if possible, folding matching payloads into
    /// `payload`. Returns false when key is outside the span.
    bool solve(BitVec key, Payload& payload,
               const std::function<void(Payload&, const Payload&)>& combine) const {
        reduce(key, payload, combine);
        return key.none();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(BitVec& key, Payload& payload,
                const std::function<void(Payload&, const Payload&)>& combine) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (key.get(pivots_[r])) {
                key ^= rows_[r];
                combine(payload, payloads_[r]);
            }
        }
    }

    std::vector<BitVec> rows_;
    std::vector<Payload> payloads_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a list of rows (consumed).
std::size_t gf2_rank(std::vector<BitVec> rows);

/// Solve the linear system  and_parity(rows[r], a) == rhs[r]  for a vector
/// `a` of n_cols bits (free variables zero). nullopt when inconsistent.
std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows,
                                const std::vector<bool>& rhs, std::size_t n_cols);

}  // namespace summon
