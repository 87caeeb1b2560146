#include "summon/stabsim.hpp"

#include <algorithm>

namespace summon {

const char* to_string(InputState s) {
    switch (s) {
        case InputState::XPlus: return "X+";
        case InputState::XMinus: return "X-";
        case InputState::YPlus: return "Y+";
        case InputState::YMinus: return "Y-";
        case InputState::ZPlus: return "Z+";
        case InputState::ZMinus: return "Z-";
    }
    return "?";
}

std::optional<InputState> input_state_from_string(const std::string& text) {
    for (InputState s : kAllInputStates) {
        if (text == to_string(s)) return s;
    }
    return std::nullopt;
}

std::pair<char, int> stabilizer_of(InputState s) {
    switch (s) {
        case InputState::XPlus: return {'X', +1};
        case InputState::XMinus: return {'X', -1};
        case InputState::YPlus: return {'Y', +1};
        case InputState::YMinus: return {'Y', -1};
        case InputState::ZPlus: return {'Z', +1};
        case InputState::ZMinus: return {'Z', -1};
    }
    return {'I', 0};
}

Tableau::Tableau(std::size_t n) : n_(n) {
    rows_.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) {  // destabilizers X_q
        rows_.push_back(PauliOperator::single(n, q, 'X'));
    }
    for (std::size_t q = 0; q < n; ++q) {  // stabilizers +Z_q
        rows_.push_back(PauliOperator::single(n, q, 'Z'));
    }
}

Tableau Tableau::product_state(const std::vector<InputState>& init) {
    Tableau t(init.size());
    for (std::size_t q = 0; q < init.size(); ++q) {
        auto [kind, sign] = stabilizer_of(init[q]);
        PauliOperator stab = PauliOperator::single(init.size(), q, kind);
        if (sign < 0) stab.negate();
        char destab_kind = (kind == 'X' || kind == 'Y') ? 'Z' : 'X';
        t.rows_[q] = PauliOperator::single(init.size(), q, destab_kind);
        t.rows_[init.size() + q] = stab;
    }
    return t;
}

Tableau new_tableau(std::size_t n_qubits, const std::vector<InputState>& init) {
    if (init.size() != n_qubits) throw std::invalid_argument("init size mismatch");
    return Tableau::product_state(init);
}

void Tableau::apply_h(std::size_t q) {
    for (auto& row : rows_) {
        bool xb = row.x.get(q), zb = row.z.get(q);
        if (xb && zb) row.phase = (row.phase + 2) & 3;
        row.x.set(q, zb);
        row.z.set(q, xb);
    }
}

void Tableau::apply_s(std::size_t q) {
    for (auto& row : rows_) {
        if (row.x.get(q)) {
            row.phase = (row.phase + 1) & 3;
            row.z.flip(q);
        }
    }
}

void Tableau::apply_x(std::size_t q) {
    for (auto& row : rows_) {
        if (row.z.get(q)) row.phase = (row.phase + 2) & 3;
    }
}

void Tableau::apply_z(std::size_t q) {
    for (auto& row : rows_) {
        if (row.x.get(q)) row.phase = (row.phase + 2) & 3;
    }
}

void Tableau::apply_y(std::size_t q) {
    for (auto& row : rows_) {
        if (row.x.get(q) != row.z.get(q)) row.phase = (row.phase + 2) & 3;
    }
}

void Tableau::apply_cnot(std::size_t control, std::size_t target) {
    if (control == target) throw std::invalid_argument("CNOT needs distinct qubits");
    for (auto& row : rows_) {
        if (row.x.get(control)) row.x.flip(target);
        if (row.z.get(target)) row.z.flip(control);
    }
}

void Tableau::apply_cz(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("CZ needs distinct qubits");
    for (auto& row : rows_) {
        bool xa = row.x.get(a), xb = row.x.get(b);
        if (xa && xb) row.phase = (row.phase + 2) & 3;
        if (xa) row.z.flip(b);
        if (xb) row.z.flip(a);
    }
}

void Tableau::apply(Gate gate, std::size_t q) {
    switch (gate) {
        case Gate::H: apply_h(q); return;
        case Gate::S: apply_s(q); return;
        case Gate::X: apply_x(q); return;
        case Gate::Y: apply_y(q); return;
        case Gate::Z: apply_z(q); return;
        default: throw std::invalid_argument("gate needs two targets");
    }
}

void Tableau::apply(Gate gate, std::size_t a, std::size_t b) {
    switch (gate) {
        case Gate::CNOT: apply_cnot(a, b); return;
        case Gate::CZ: apply_cz(a, b); return;
        default: throw std::invalid_argument("gate takes one target");
    }
}

void Tableau::apply_pauli(const PauliOperator& p) {
    for (auto& row : rows_) {
        if (!row.commutes_with(p)) row.phase = (row.phase + 2) & 3;
    }
}

void Tableau::apply_controlled_pauli(std::size_t control, const PauliOperator& p) {
    if (p.n_qubits() != n_) throw std::invalid_argument("operator width mismatch");
    if (p.x.get(control) || p.z.get(control)) {
        throw std::invalid_argument("control overlaps the Pauli support");
    }
    for (std::size_t q = 0; q < n_; ++q) {
        if (p.z.get(q)) apply_cz(control, q);
        if (p.x.get(q)) apply_cnot(control, q);
    }
    for (unsigned k = 0; k < (p.phase & 3); ++k) apply_s(control);
}

MeasurementResult Tableau::measure(const PauliOperator& p, Rng& rng) {
    if (p.n_qubits() != n_) throw std::invalid_argument("operator width mismatch");
    if (!p.is_hermitian()) throw std::invalid_argument("measured operator must be Hermitian");
    if (p.is_identity_up_to_phase()) return {p.hermitian_sign(), true};

    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!rows_[n_ + i].commutes_with(p)) {
            pivot = i;
            break;
        }
    }
    if (pivot < n_) {
        const PauliOperator pivot_row = rows_[n_ + pivot];
        for (std::size_t r = 0; r < 2 * n_; ++r) {
            if (r == pivot || r == n_ + pivot) continue;
            if (!rows_[r].commutes_with(p)) rows_[r] *= pivot_row;
        }
        rows_[pivot] = pivot_row;  // becomes the destabilizer of p
        bool minus = rng() & 1;
        rows_[n_ + pivot] = p;
        if (minus) rows_[n_ + pivot].negate();
        return {minus ? -1 : +1, false};
    }

    PauliOperator scratch(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!rows_[i].commutes_with(p)) scratch *= rows_[n_ + i];
    }
    if (scratch.x != p.x || scratch.z != p.z) {
        throw std::logic_error("deterministic measurement: operator not in stabilizer group");
    }
    unsigned diff = (scratch.phase + 4 - p.phase) & 3;
    return {diff == 0 ? +1 : -1, true};
}

void Tableau::reset(std::size_t q, Rng& rng) {
    auto m = measure(PauliOperator::single(n_, q, 'Z'), rng);
    if (m.outcome < 0) apply_x(q);
}

bool Tableau::is_valid() const {
    for (const auto& row : rows_) {
        if (!row.is_hermitian()) return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!rows_[n_ + i].commutes_with(rows_[n_ + j]) && i != j) return false;
            if (i != j && !rows_[i].commutes_with(rows_[j])) return false;
            bool anti = !rows_[i].commutes_with(rows_[n_ + j]);
            if (anti != (i == j)) return false;
        }
    }
    return true;
}

void bell_pair(Tableau& t, std::size_t q1, std::size_t q2, Rng& rng) {
    t.reset(q1, rng);
    t.reset(q2, rng);
    t.apply_h(q1);
    t.apply_cnot(q1, q2);
}

TeleportBits teleport(Tableau& t, std::size_t source, std::size_t bell_half_a, Rng& rng) {
    const std::size_t n = t.n_qubits();
    PauliOperator xx = PauliOperator::single(n, source, 'X') *
                       PauliOperator::single(n, bell_half_a, 'X');
    PauliOperator zz = PauliOperator::single(n, source, 'Z') *
                       PauliOperator::single(n, bell_half_a, 'Z');
    auto mx = t.measure(xx, rng);
    auto mz = t.measure(zz, rng);
    return TeleportBits{mz.outcome < 0, mx.outcome < 0};
}

void apply_teleport_correction(Tableau& t, std::size_t q, TeleportBits bits) {
    if (bits.x_correction) t.apply_x(q);
    if (bits.z_correction) t.apply_z(q);
}

PauliOperator embed_pauli(const PauliOperator& p, std::span<const std::size_t> qubit_map,
                          std::size_t width) {
    if (p.n_qubits() != qubit_map.size()) throw std::invalid_argument("embed size mismatch");
    PauliOperator out(width);
    p.x.for_each_set([&](std::size_t i) { out.x.set(qubit_map[i], true); });
    p.z.for_each_set([&](std::size_t i) { out.z.set(qubit_map[i], true); });
    out.phase = p.phase;
    return out;
}

namespace {

/// Any Pauli that anticommutes with generator `target` while commuting with
/// the other generators and with logical Z: the dual row used to repair a
/// -1 outcome when projecting onto the code space.
PauliOperator dual_correction(const StabilizerCode& code, std::size_t target) {
    const std::size_t n = code.n_qubits;
    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    for (std::size_t j = 0; j < code.generators.size(); ++j) {
        rows.push_back(code.generators[j].zx_bits());
        rhs.push_back(j == target);
    }
    rows.push_back(code.logical_z.zx_bits());
    rhs.push_back(false);
    auto solution = gf2_solve(rows, rhs, 2 * n);
    if (!solution) throw std::logic_error("dual correction must exist for independent rows");
    PauliOperator out(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (solution->get(q)) out.x.set(q, true);
        if (solution->get(n + q)) out.z.set(q, true);
    }
    out.phase = static_cast<unsigned>(out.y_count() & 3);  // Hermitian, + sign
    return out;
}

}  // namespace

void encode_logical(Tableau& t, const StabilizerCode& code, std::size_t payload_qubit,
                    std::size_t ancilla_qubit, std::span<const std::size_t> block_qubits,
                    Rng& rng) {
    const std::size_t n = t.n_qubits();
    if (block_qubits.size() != code.n_qubits) {
        throw std::invalid_argument("block size does not match code");
    }
    t.reset(ancilla_qubit, rng);
    for (std::size_t q : block_qubits) t.reset(q, rng);

    // Project the block onto the simultaneous +1 eigenspace (logical |0>).
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        auto m = t.measure(embed_pauli(code.generators[i], block_qubits, n), rng);
        if (m.outcome < 0) {
            t.apply_pauli(embed_pauli(dual_correction(code, i), block_qubits, n));
        }
    }

    // Logical Bell pair between the ancilla and the block.
    t.apply_h(ancilla_qubit);
    t.apply_controlled_pauli(ancilla_qubit, embed_pauli(code.logical_x, block_qubits, n));

    // Bell measurement (payload, ancilla) plus the logical correction.
    PauliOperator xx = PauliOperator::single(n, payload_qubit, 'X') *
                       PauliOperator::single(n, ancilla_qubit, 'X');
    PauliOperator zz = PauliOperator::single(n, payload_qubit, 'Z') *
                       PauliOperator::single(n, ancilla_qubit, 'Z');
    auto mx = t.measure(xx, rng);
    auto mz = t.measure(zz, rng);
    if (mz.outcome < 0) t.apply_pauli(embed_pauli(code.logical_x, block_qubits, n));
    if (mx.outcome < 0) t.apply_pauli(embed_pauli(code.logical_z, block_qubits, n));
}

void decode_erasure(Tableau& t, const StabilizerCode& code,
                    std::span<const std::size_t> block_qubits,
                    const std::vector<std::size_t>& kept_code_positions,
                    std::size_t output_qubit, Rng& rng) {
    const std::size_t n_code = code.n_qubits;
    if (block_qubits.size() != n_code) throw std::invalid_argument("block size mismatch");

    std::vector<bool> kept_mask(n_code, false);
    for (std::size_t q : kept_code_positions) {
        if (q >= n_code) throw std::invalid_argument("kept position out of range");
        kept_mask[q] = true;
    }
    std::vector<std::size_t> erased_cols;
    for (std::size_t q = 0; q < n_code; ++q) {
        if (!kept_mask[q]) erased_cols.push_back(q);
    }
    std::vector<std::size_t> cols;
    for (std::size_t q : erased_cols) cols.push_back(q);
    for (std::size_t q : erased_cols) cols.push_back(n_code + q);

    // Stabilizer-equivalent logical representatives supported on the kept
    // set, phases tracked exactly so no sign leaks into the teleport.
    auto combine = std::function<void(PauliOperator&, const PauliOperator&)>(
        [](PauliOperator& a, const PauliOperator& b) { a *= b; });
    AugmentedEchelon<PauliOperator> solver;
    for (const auto& g : code.generators) {
        solver.insert(g.xz_bits().gather(cols), g, combine);
    }
    PauliOperator z_rep = code.logical_z;
    if (!solver.solve(code.logical_z.xz_bits().gather(cols), z_rep, combine)) {
        throw NotCorrectable("no logical Z representative on the kept qubits");
    }
    PauliOperator x_rep = code.logical_x;
    if (!solver.solve(code.logical_x.xz_bits().gather(cols), x_rep, combine)) {
        throw NotCorrectable("no logical X representative on the kept qubits");
    }

    // Logical one-bit teleport onto the output qubit:
    // CNOT(logical -> output) = H_out . C_out(Z-rep) . H_out, then measure
    // logical X and fix up with Z on the output.
    const std::size_t n = t.n_qubits();
    t.reset(output_qubit, rng);
    t.apply_h(output_qubit);
    t.apply_controlled_pauli(output_qubit, embed_pauli(z_rep, block_qubits, n));
    t.apply_h(output_qubit);
    auto m = t.measure(embed_pauli(x_rep, block_qubits, n), rng);
    if (m.outcome < 0) t.apply_z(output_qubit);
}

bool verify_state(const Tableau& t, std::size_t qubit, InputState expected) {
    auto [kind, sign] = stabilizer_of(expected);
    PauliOperator p = PauliOperator::single(t.n_qubits(), qubit, kind);
    if (sign < 0) p.negate();
    Tableau copy = t;
    Rng rng(0);  // a deterministic outcome never touches the generator
    auto m = copy.measure(p, rng);
    return m.deterministic && m.outcome == +1;
}

}  // namespace summon
