#include "summon/codes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace summon {

namespace {

// Below this size code_from_generators re-verifies everything generically
// (pairwise commutation, GF(2) rank) on top of the structural certificate.
constexpr std::size_t kGenericCheckLimit = 512;

std::vector<std::vector<std::size_t>> qubits_by_vertex(const DoubledGraph& gp) {
    std::vector<std::vector<std::size_t>> at(gp.n_vertices);
    for (std::size_t q = 0; q < gp.n_qubits(); ++q) {
        at[gp.endpoint_of_qubit(q)].push_back(q);
    }
    return at;
}

}  // namespace

std::vector<std::size_t> DoubledGraph::neighbors(std::size_t q) const {
    std::vector<std::size_t> out;
    out.push_back(partner_qubit(q));
    std::size_t v = endpoint_of_qubit(q);
    for (std::size_t f = 0; f < n_qubits(); ++f) {
        if (f != q && endpoint_of_qubit(f) == v) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DoubledGraph DoubledGraph::complete(std::size_t n) {
    if (n < 2) throw std::invalid_argument("complete doubled graph needs n >= 2");
    DoubledGraph gp;
    gp.n_vertices = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) gp.edges.emplace_back(i, j);
    }
    return gp;
}

DoubledGraph double_graph(const CausalGraph& g) {
    DoubledGraph gp;
    gp.n_vertices = g.size();
    for (auto [i, j] : g.undirected_edges()) gp.edges.emplace_back(i, j);
    if (gp.edges.empty()) {
        throw std::invalid_argument("cannot double a graph with no edges");
    }
    return gp;
}

std::vector<PauliOperator> cws_generators(const DoubledGraph& gp) {
    const std::size_t n_qubits = gp.n_qubits();
    auto at_vertex = qubits_by_vertex(gp);
    std::vector<PauliOperator> rows;
    rows.reserve(n_qubits);
    for (std::size_t e = 0; e < n_qubits; ++e) {
        PauliOperator s(n_qubits);
        s.x.set(e, true);
        s.z.set(gp.partner_qubit(e), true);
        for (std::size_t f : at_vertex[gp.endpoint_of_qubit(e)]) {
            if (f != e) s.z.set(f, true);
        }
        rows.push_back(std::move(s));
    }
    return rows;
}

StabilizerCode code_from_generators(const std::vector<PauliOperator>& s_rows) {
    const std::size_t n = s_rows.size();
    if (n < 2) throw std::invalid_argument("need at least two generators");

    // The construction presents the code through unit-X rows: row e carries
    // X exactly on qubit e. Everything downstream leans on that shape.
    auto structure = std::make_shared<StabilizerCode::GraphStructure>();
    structure->z_rows.reserve(n);
    for (std::size_t e = 0; e < n; ++e) {
        const auto& row = s_rows[e];
        if (row.n_qubits() != n || row.phase != 0) {
            throw std::invalid_argument("malformed generator row");
        }
        if (row.x.popcount() != 1 || !row.x.get(e)) {
            throw std::invalid_argument("generator row must carry X exactly on its own qubit");
        }
        if (row.z.get(e)) {
            throw std::invalid_argument("generator row must not carry Z on its own qubit");
        }
        structure->z_rows.push_back(row.z);
    }
    // Symmetric adjacency <=> all S_e commute.
    for (std::size_t e = 0; e < n; ++e) {
        structure->z_rows[e].for_each_set([&](std::size_t f) {
            if (!structure->z_rows[f].get(e)) {
                throw std::invalid_argument("generator adjacency is not symmetric");
            }
        });
    }

    StabilizerCode code;
    code.n_qubits = n;
    code.generators.reserve(n - 1);
    for (std::size_t e = 1; e < n; ++e) {
        code.generators.push_back(s_rows[0] * s_rows[e]);
    }
    code.logical_x = s_rows[0];
    code.logical_z = PauliOperator(n);
    for (std::size_t q = 0; q < n; ++q) code.logical_z.z.set(q, true);
    code.structure = std::move(structure);

    if (code.logical_x.commutes_with(code.logical_z)) {
        throw std::invalid_argument("logical operators fail to anticommute");
    }
    for (const auto& g : code.generators) {
        if (!g.commutes_with(code.logical_x) || !g.commutes_with(code.logical_z)) {
            throw std::invalid_argument("generator does not commute with the logicals");
        }
    }

    if (n <= kGenericCheckLimit) {
        for (std::size_t a = 0; a < s_rows.size(); ++a) {
            for (std::size_t b = a + 1; b < s_rows.size(); ++b) {
                if (!s_rows[a].commutes_with(s_rows[b])) {
                    throw std::invalid_argument("generators do not commute");
                }
            }
        }
        std::vector<BitVec> rows;
        rows.reserve(code.generators.size());
        for (const auto& g : code.generators) rows.push_back(g.xz_bits());
        if (gf2_rank(std::move(rows)) != n - 1) {
            throw std::invalid_argument("dependent generators: code dimension is not 2");
        }
    }
    return code;
}

StabilizerCode cws_code_for_complete_graph(std::size_t n) {
    auto gp = DoubledGraph::complete(n);
    return code_from_generators(cws_generators(gp));
}

std::vector<std::size_t> kept_qubits(const DoubledGraph& gp, std::size_t u) {
    if (u >= gp.n_vertices) throw std::invalid_argument("unknown vertex");
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < gp.n_qubits(); ++q) {
        if (gp.edge_contains(q, u)) out.push_back(q);
    }
    return out;
}

namespace {

std::vector<std::size_t> complement_of(const std::vector<bool>& mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) out.push_back(i);
    }
    return out;
}

/// dim of the stabilizer elements supported on `region`, using the unit-X
/// structure: choose an even subset Y of region qubits whose summed Z rows
/// vanish outside the region.
std::size_t structured_region_dim(const StabilizerCode::GraphStructure& st,
                                  const std::vector<std::size_t>& region,
                                  const std::vector<bool>& in_region) {
    if (region.empty()) return 0;
    RowEchelon echelon;
    for (std::size_t f = 0; f < st.z_rows.size(); ++f) {
        if (in_region[f]) continue;
        echelon.insert(st.z_rows[f].gather(region));
    }
    BitVec parity(region.size());
    for (std::size_t k = 0; k < region.size(); ++k) parity.set(k, true);
    echelon.insert(std::move(parity));
    return region.size() - echelon.rank();
}

/// Rank of the generator rows projected onto the (x|z) columns of `region`.
std::size_t projected_rank(const std::vector<PauliOperator>& generators,
                           const std::vector<std::size_t>& region, std::size_t n) {
    std::vector<std::size_t> cols;
    cols.reserve(2 * region.size());
    for (std::size_t q : region) cols.push_back(q);
    for (std::size_t q : region) cols.push_back(n + q);
    RowEchelon echelon;
    for (const auto& g : generators) echelon.insert(g.xz_bits().gather(cols));
    return echelon.rank();
}

}  // namespace

bool erasure_correctable(const StabilizerCode& code, const std::vector<std::size_t>& erased) {
    const std::size_t n = code.n_qubits;
    std::vector<bool> in_erased(n, false);
    for (std::size_t q : erased) {
        if (q >= n) throw std::invalid_argument("erased qubit out of range");
        in_erased[q] = true;
    }
    std::vector<std::size_t> erased_sorted;
    for (std::size_t q = 0; q < n; ++q) {
        if (in_erased[q]) erased_sorted.push_back(q);
    }
    if (erased_sorted.empty()) return true;
    std::vector<std::size_t> kept = complement_of(in_erased);
    std::vector<bool> in_kept(n, false);
    for (std::size_t q : kept) in_kept[q] = true;

    const std::size_t rank = n - 1;
    std::size_t logical_dims;  // count of independent logical classes on erased
    if (code.structure) {
        std::size_t dim_kept = structured_region_dim(*code.structure, kept, in_kept);
        std::size_t dim_erased = structured_region_dim(*code.structure, erased_sorted, in_erased);
        logical_dims = 2 * erased_sorted.size() - rank + dim_kept - dim_erased;
    } else {
        std::size_t s_erased = projected_rank(code.generators, erased_sorted, n);
        std::size_t s_kept = projected_rank(code.generators, kept, n);
        logical_dims = 2 * erased_sorted.size() - s_erased - rank + s_kept;
    }
    return logical_dims == 0;
}

bool check_cws_conditions(const DoubledGraph& gp, std::size_t u) {
    if (u >= gp.n_vertices) throw std::invalid_argument("unknown vertex");
    auto at_vertex = qubits_by_vertex(gp);
    for (std::size_t q = 0; q < gp.n_qubits(); ++q) {
        if (gp.edge_contains(q, u)) continue;  // not in the error class of u
        std::size_t touching = gp.edge_contains(gp.partner_qubit(q), u) ? 1 : 0;
        for (std::size_t f : at_vertex[gp.endpoint_of_qubit(q)]) {
            if (f != q && gp.edge_contains(f, u)) ++touching;
        }
        if (touching != 1) return false;
    }
    return true;
}

PauliOperator err_map(const DoubledGraph& gp, const PauliOperator& p) {
    if (p.n_qubits() != gp.n_qubits()) {
        throw std::invalid_argument("operator size does not match graph");
    }
    auto at_vertex = qubits_by_vertex(gp);
    PauliOperator out(gp.n_qubits());
    out.z = p.z;
    p.x.for_each_set([&](std::size_t e) {
        out.z.flip(gp.partner_qubit(e));
        for (std::size_t f : at_vertex[gp.endpoint_of_qubit(e)]) {
            if (f != e) out.z.flip(f);
        }
    });
    return out;
}

CodeReport build_code_report(const DoubledGraph& gp, const StabilizerCode& code) {
    CodeReport report;
    report.n_vertices = gp.n_vertices;
    report.n_qubits = gp.n_qubits();
    for (std::size_t u = 0; u < gp.n_vertices; ++u) {
        VertexVerdict v;
        v.vertex = u;
        v.kept = kept_qubits(gp, u);
        std::vector<bool> keep_mask(gp.n_qubits(), false);
        for (std::size_t q : v.kept) keep_mask[q] = true;
        std::vector<std::size_t> erased;
        for (std::size_t q = 0; q < gp.n_qubits(); ++q) {
            if (!keep_mask[q]) erased.push_back(q);
        }
        v.erasure_ok = erasure_correctable(code, erased);
        v.complement_ok = erasure_correctable(code, v.kept);
        v.cws_condition = check_cws_conditions(gp, u);
        report.vertices.push_back(std::move(v));
    }
    return report;
}

std::string format_code(const StabilizerCode& code) {
    std::ostringstream out;
    for (const auto& g : code.generators) out << g.to_string() << "\n";
    out << "logical X: " << code.logical_x.to_string() << "\n";
    out << "logical Z: " << code.logical_z.to_string() << "\n";
    return out.str();
}

}  // namespace summon
