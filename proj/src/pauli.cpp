#include "summon/pauli.hpp"

#include <stdexcept>

namespace summon {

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char kind) {
    PauliOperator p(n);
    switch (kind) {
        case 'X': p.x.set(qubit, true); break;
        case 'Z': p.z.set(qubit, true); break;
        case 'Y':
            p.x.set(qubit, true);
            p.z.set(qubit, true);
            p.phase = 1;  // Y = i XZ
            break;
        case 'I': break;
        default: throw std::invalid_argument("unknown Pauli kind");
    }
    return p;
}

std::optional<PauliOperator> PauliOperator::from_string(const std::string& text) {
    std::size_t pos = 0;
    unsigned phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        ++pos;
    }
    std::size_t n = text.size() - pos;
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (text[pos + q]) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                phase = (phase + 1) & 3;
                break;
            default: return std::nullopt;
        }
    }
    p.phase = phase;
    return p;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
    // (X^a Z^b)(X^c Z^d) = (-1)^(b.c) X^(a+c) Z^(b+d)
    bool swap_sign = BitVec::and_parity(z, other.x);
    phase = (phase + other.phase + (swap_sign ? 2 : 0)) & 3;
    x ^= other.x;
    z ^= other.z;
    return *this;
}

BitVec PauliOperator::xz_bits() const {
    std::size_t n = n_qubits();
    BitVec v(2 * n);
    x.for_each_set([&](std::size_t i) { v.set(i, true); });
    z.for_each_set([&](std::size_t i) { v.set(n + i, true); });
    return v;
}

BitVec PauliOperator::zx_bits() const {
    std::size_t n = n_qubits();
    BitVec v(2 * n);
    z.for_each_set([&](std::size_t i) { v.set(i, true); });
    x.for_each_set([&](std::size_t i) { v.set(n + i, true); });
    return v;
}

std::string PauliOperator::to_string() const {
    unsigned residual = (phase + 4 - (y_count() & 3)) & 3;
    std::string out;
    switch (residual) {
        case 0: out = "+"; break;
        case 1: out = "+i"; break;
        case 2: out = "-"; break;
        case 3: out = "-i"; break;
    }
    for (std::size_t q = 0; q < n_qubits(); ++q) {
        bool xb = x.get(q), zb = z.get(q);
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

}  // namespace summon
