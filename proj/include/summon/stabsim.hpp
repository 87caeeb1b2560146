#pragma once

#include "summon/codes.hpp"
#include "summon/pauli.hpp"

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace summon {

using Rng = std::mt19937_64;

/// The six single-qubit Pauli eigenstates used as test payloads. Preserving
/// all six under Clifford dynamics certifies the identity channel, so these
/// are enough to verify every protocol exactly.
enum class InputState { XPlus, XMinus, YPlus, YMinus, ZPlus, ZMinus };

constexpr InputState kAllInputStates[] = {
    InputState::XPlus, InputState::XMinus, InputState::YPlus,
    InputState::YMinus, InputState::ZPlus, InputState::ZMinus,
};

const char* to_string(InputState s);
std::optional<InputState> input_state_from_string(const std::string& text);
/// The single-qubit stabilizer of the state: 'X'/'Y'/'Z' and the sign.
std::pair<char, int> stabilizer_of(InputState s);

struct MeasurementResult {
    int outcome = 0;          // +1 or -1
    bool deterministic = false;
};

struct TeleportBits {
    bool x_correction = false;  // from the ZZ outcome
    bool z_correction = false;  // from the XX outcome
};

enum class Gate { H, S, CNOT, CZ, X, Y, Z };

struct NotCorrectable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact stabilizer state of N qubits: stabilizer and destabilizer rows in
/// the symplectic representation with phases tracked mod 4. A Tableau is a
/// value; copy freely, hand between threads, one simulation owns one.
class Tableau {
public:
    explicit Tableau(std::size_t n_qubits);
    static Tableau product_state(const std::vector<InputState>& init);

    std::size_t n_qubits() const { return n_; }

    void apply(Gate gate, std::size_t q);
    void apply(Gate gate, std::size_t a, std::size_t b);  // CNOT/CZ
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);

    /// Conjugate the state by a Pauli (only signs move).
    void apply_pauli(const PauliOperator& p);
    /// Controlled Pauli string; the control must be off p's support.
    void apply_controlled_pauli(std::size_t control, const PauliOperator& p);

    /// Standard stabilizer measurement of a Hermitian Pauli. Deterministic
    /// iff +-p is in the stabilizer group; random outcomes come from rng.
    MeasurementResult measure(const PauliOperator& p, Rng& rng);

    /// Measure Z and flip to |0>.
    void reset(std::size_t q, Rng& rng);

    /// Symplectic-basis consistency check (tests run this after every
    /// mutation; it is not wired into release paths).
    bool is_valid() const;

    const PauliOperator& stabilizer_row(std::size_t i) const { return rows_[n_ + i]; }
    const PauliOperator& destabilizer_row(std::size_t i) const { return rows_[i]; }

private:
    std::size_t n_;
    std::vector<PauliOperator> rows_;  // [0,n): destabilizers, [n,2n): stabilizers
};

Tableau new_tableau(std::size_t n_qubits, const std::vector<InputState>& init);

/// Entangle q1,q2 (reset first) into the Bell pair stabilized by
/// {+X X, +Z Z}.
void bell_pair(Tableau& t, std::size_t q1, std::size_t q2, Rng& rng);

/// Bell measurement of (source, bell_half_a); the returned bits select the
/// X^a Z^b correction that completes the transfer onto the other half.
TeleportBits teleport(Tableau& t, std::size_t source, std::size_t bell_half_a, Rng& rng);

void apply_teleport_correction(Tableau& t, std::size_t q, TeleportBits bits);

/// Re-index a code-space operator onto tableau qubits.
PauliOperator embed_pauli(const PauliOperator& p, std::span<const std::size_t> qubit_map,
                          std::size_t width);

/// Teleport `payload_qubit` into the code block at the logical level: the
/// block and ancilla are prepared in a logical Bell state (stabilizers plus
/// X_anc X-bar and Z_anc Z-bar), then a Bell measurement on (payload,
/// ancilla) with the indicated logical correction. Afterwards the block's
/// logical expectations equal the payload's single-qubit expectations.
void encode_logical(Tableau& t, const StabilizerCode& code, std::size_t payload_qubit,
                    std::size_t ancilla_qubit, std::span<const std::size_t> block_qubits,
                    Rng& rng);

/// Recover the encoded qubit onto output_qubit using only kept block
/// positions: pick stabilizer-equivalent logical representatives supported
/// on the kept set (symplectic elimination), then run a logical one-bit
/// teleport built from controlled Paulis. Throws NotCorrectable when no
/// such representatives exist.
void decode_erasure(Tableau& t, const StabilizerCode& code,
                    std::span<const std::size_t> block_qubits,
                    const std::vector<std::size_t>& kept_code_positions,
                    std::size_t output_qubit, Rng& rng);

/// Deterministic verification that `qubit` holds exactly `expected`.
bool verify_state(const Tableau& t, std::size_t qubit, InputState expected);

}  // namespace summon
