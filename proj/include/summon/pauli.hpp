#pragma once

#include "summon/gf2.hpp"

#include <optional>
#include <string>

namespace summon {

/// N-qubit Pauli operator  i^phase * prod_q X^x[q] Z^z[q],  phase mod 4.
/// Commutation is the symplectic form on (x|z); products track phases
/// exactly.
struct PauliOperator {
    BitVec x;
    BitVec z;
    unsigned phase = 0;  // exponent of i

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x(n), z(n) {}

    std::size_t n_qubits() const { return x.size(); }

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    /// Single-qubit factor from 'X', 'Y' or 'Z' (Y is stored as i*XZ so the
    /// operator is Hermitian with a + sign).
    static PauliOperator single(std::size_t n, std::size_t qubit, char kind);
    /// Parse "XZY..." or "+XZY...", "-IZX...", "+iXX..", "-iZZ..".
    static std::optional<PauliOperator> from_string(const std::string& text);

    PauliOperator& operator*=(const PauliOperator& other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) {
        a *= b;
        return a;
    }

    bool commutes_with(const PauliOperator& other) const {
        return !(BitVec::and_parity(x, other.z) ^ BitVec::and_parity(z, other.x));
    }

    /// Qubits acted on non-trivially.
    BitVec support() const { return x | z; }
    std::size_t weight() const { return support().popcount(); }

    bool is_identity_up_to_phase() const { return x.none() && z.none(); }

    /// Number of Y factors (x and z both set).
    std::size_t y_count() const { return (x & z).popcount(); }

    /// Hermitian iff phase == y_count() or y_count()+2 (mod 4).
    bool is_hermitian() const { return ((phase + 4 - y_count() % 4) & 1) == 0; }
    /// For a Hermitian operator: +1 or -1 overall sign.
    int hermitian_sign() const {
        return ((phase + 4 - y_count() % 4) & 3) == 0 ? +1 : -1;
    }
    /// Flip the overall sign.
    void negate() { phase = (phase + 2) & 3; }

    /// Concatenated (x|z) bits, the symplectic representation.
    BitVec xz_bits() const;
    /// Symplectic-swapped (z|x) bits; <P,Q> = and_parity(P.xz, Q.zx).
    BitVec zx_bits() const;

    /// "+XZI..", "-YY..", "+iXZ.." notation.
    std::string to_string() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

}  // namespace summon
