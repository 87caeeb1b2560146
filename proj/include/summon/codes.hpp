#pragma once

#include "summon/feasibility.hpp"
#include "summon/pauli.hpp"

#include <memory>
#include <string>
#include <vector>

namespace summon {

/// G' = the undirected support of G with a new vertex on each edge. Each
/// G'-edge (one half of an original edge) carries one physical qubit.
/// Qubit indexing is deterministic: original edges sorted as (min,max)
/// pairs, qubit 2e for the lower endpoint's half and 2e+1 for the upper's.
struct DoubledGraph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, first < second

    std::size_t n_qubits() const { return 2 * edges.size(); }

    std::size_t edge_of_qubit(std::size_t q) const { return q / 2; }
    /// The original vertex this half-edge touches.
    std::size_t endpoint_of_qubit(std::size_t q) const {
        const auto& e = edges[q / 2];
        return (q % 2 == 0) ? e.first : e.second;
    }
    /// The half-edge sharing qubit q's edge vertex.
    std::size_t partner_qubit(std::size_t q) const { return q ^ 1; }

    /// Does qubit q's original edge contain vertex u?
    bool edge_contains(std::size_t q, std::size_t u) const {
        const auto& e = edges[q / 2];
        return e.first == u || e.second == u;
    }

    /// G'-adjacency of half-edges: shared edge vertex or shared original
    /// vertex. N_e from the generator definition.
    std::vector<std::size_t> neighbors(std::size_t q) const;

    static DoubledGraph complete(std::size_t n);
};

/// Build G' from the undirected support of g. Requires a connected support;
/// throws std::invalid_argument on an empty or disconnected graph.
DoubledGraph double_graph(const CausalGraph& g);

/// The graph-state generators S_e = X_e * prod_{f in N_e} Z_f, one per
/// half-edge qubit, indexed like the qubits.
std::vector<PauliOperator> cws_generators(const DoubledGraph& gp);

/// Stabilizer code with one logical qubit. The code space is the span of
/// the simultaneous +1 and simultaneous -1 eigenstates of the S_e, so the
/// stabilizer group is the even products of the S_e, logical X is any
/// single S_e and logical Z is Z on every qubit.
struct StabilizerCode {
    std::size_t n_qubits = 0;
    std::vector<PauliOperator> generators;  // N-1 independent commuting rows
    PauliOperator logical_x;
    PauliOperator logical_z;

    /// The defining S_e rows (unit X part). Present when the code came from
    /// cws_generators; enables the structured fast path for erasure checks.
    struct GraphStructure {
        std::vector<BitVec> z_rows;  // z_rows[e] = indicator of N_e
    };
    std::shared_ptr<const GraphStructure> structure;
};

/// Assemble the code from the S_e list and verify dimension 2 by GF(2)
/// rank. Throws std::invalid_argument (dependent or malformed generators)
/// when the input is not a valid unit-X graph-state family.
StabilizerCode code_from_generators(const std::vector<PauliOperator>& s_rows);

/// Convenience: the full pipeline for a complete graph on n vertices.
StabilizerCode cws_code_for_complete_graph(std::size_t n);

/// Qubit indices of every half-edge whose original edge contains u,
/// sorted. Size 2(n-1) for a complete graph.
std::vector<std::size_t> kept_qubits(const DoubledGraph& gp, std::size_t u);

/// True iff no logical operator is supported entirely on `erased`: every
/// Pauli on the erased set commuting with the stabilizer lies in the
/// stabilizer group (phases ignored). Exact GF(2) linear algebra; the
/// graph-structured path solves only small systems so n=100 stays fast.
bool erasure_correctable(const StabilizerCode& code, const std::vector<std::size_t>& erased);

/// The combinatorial error-correction argument: for every half-edge
/// (v,(v,w)) with u not on (v,w), exactly one adjacent half-edge touches u.
/// True implies both CWS error-correction conditions for the erasure class
/// of vertex u.
bool check_cws_conditions(const DoubledGraph& gp, std::size_t u);

/// Map any Pauli error to its induced all-Z pattern: each X factor at e
/// becomes Z on N_e, Z factors stay, phases are dropped.
PauliOperator err_map(const DoubledGraph& gp, const PauliOperator& p);

struct VertexVerdict {
    std::size_t vertex = 0;
    std::vector<std::size_t> kept;
    bool erasure_ok = false;      // erasing everything not incident to vertex
    bool complement_ok = false;   // erasing the kept set instead
    bool cws_condition = false;
};

struct CodeReport {
    std::size_t n_vertices = 0;
    std::size_t n_qubits = 0;
    std::vector<VertexVerdict> vertices;
};

CodeReport build_code_report(const DoubledGraph& gp, const StabilizerCode& code);

/// One generator per line in "+XZZ.." notation, logicals last.
std::string format_code(const StabilizerCode& code);

}  // namespace summon
