#pragma once

#include "summon/codes.hpp"
#include "summon/feasibility.hpp"
#include "summon/stabsim.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace summon {

struct InfeasibleTask : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoChain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StrategyInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Plan-execution faults; these indicate plan bugs, never task infeasibility.
struct PlanExecutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TokenNotPresent : PlanExecutionError {
    using PlanExecutionError::PlanExecutionError;
};
struct UnsatisfiedGuard : PlanExecutionError {
    using PlanExecutionError::PlanExecutionError;
};

/// Directive guards over locally knowable classical data: the call arriving
/// (or not) at this very point, or broadcast call announcements that are
/// (or are not) receivable here. Negative guards are sound because every
/// announcement source causally precedes the guarded point.
struct Guard {
    enum class Kind { Always, CallHere, NoCallHere, AnnounceReceived, AnnounceNoneOf };
    Kind kind = Kind::Always;
    int vertex = -1;
    std::vector<int> vertices;  // AnnounceNoneOf only

    static Guard always() { return {Kind::Always, -1, {}}; }
    static Guard call_here(int v) { return {Kind::CallHere, v, {}}; }
    static Guard no_call_here(int v) { return {Kind::NoCallHere, v, {}}; }
    static Guard announce_received(int v) { return {Kind::AnnounceReceived, v, {}}; }
    static Guard announce_none_of(std::vector<int> vs) {
        return {Kind::AnnounceNoneOf, -1, std::move(vs)};
    }
};

struct ActTeleportMeasure {  // Bell measurement of (source, bell half)
    int source_token;
    int bell_a_token;
    std::string record;
};
struct ActSendClassical {
    std::string record;
    SpacetimePoint to;
};
struct ActAnnounce {
    int call_index;
    SpacetimePoint to;
};
struct ActSendQubit {
    int token;
    SpacetimePoint to;
};
struct ActPauliCorrect {  // X^a Z^b from a received teleport record
    int token;
    std::string record;
};
struct ActEncode {
    int payload_token;
    int ancilla_token;
    std::vector<int> block_tokens;  // one per code qubit, in code order
};
struct ActDecode {
    std::vector<int> block_tokens;          // current carrier of each code qubit
    std::vector<std::size_t> kept_positions;  // code positions present here
    int output_token;
};
struct ActReveal {
    int token;
};

using Action = std::variant<ActTeleportMeasure, ActSendClassical, ActAnnounce, ActSendQubit,
                            ActPauliCorrect, ActEncode, ActDecode, ActReveal>;

struct Directive {
    SpacetimePoint at;
    Guard guard;
    std::vector<Action> actions;
};

struct TokenDecl {
    int id;
    std::string role;  // payload | ancilla | block | bell_s | bell_y | output
    SpacetimePoint at;
};

/// Pre-shared entanglement, distributed before the protocol starts and
/// therefore exempt from the causality audit.
struct BellPairDecl {
    int token_a;
    int token_b;
    SpacetimePoint at_a;
    SpacetimePoint at_b;
};

/// Compiled conditional directives in spacetime, plus the declared initial
/// resources. Every kind of send is audited against the light cone at
/// simulation time.
struct ProtocolPlan {
    std::string strategy;  // n2 | cws | chain
    std::size_t n = 0;
    int payload_token = -1;
    std::vector<TokenDecl> tokens;  // token id == tableau qubit index
    std::vector<BellPairDecl> bell_pairs;
    // CWS plans rebuild their code from these (sorted) edges.
    std::vector<std::pair<std::size_t, std::size_t>> code_edges;
    std::vector<Directive> directives;

    std::size_t code_qubits() const { return 2 * code_edges.size(); }
};

struct MessageEvent {
    enum class Kind { Classical, Qubit, Reveal };
    Kind kind;
    SpacetimePoint from;
    SpacetimePoint to;
    std::string label;
};

struct AuditViolation {
    std::size_t event_index;  // into SimReport::log (or npos for pair checks)
    std::string reason;
};

struct SimReport {
    std::optional<int> call_choice;
    InputState payload = InputState::ZPlus;
    bool success = false;
    std::optional<SpacetimePoint> revealed_at;
    bool payload_verified = false;
    std::vector<MessageEvent> log;
    std::vector<AuditViolation> audit_violations;
};

/// Teleportation routing for n=2: a pre-shared Bell pair to the first call
/// point, classical teleport data broadcast to both reveal points, the
/// loose Bell half forwarded on the call branch.
ProtocolPlan plan_n2(const SummoningTask& task);

/// The general construction: encode into the doubled-graph code at the
/// start, route each half-edge share with the n=2 teleportation primitive
/// along an oriented graph edge, decode from the incident shares at the
/// called reveal point.
ProtocolPlan plan_cws(const SummoningTask& task, const CausalGraph& graph,
                      const StabilizerCode& code);
ProtocolPlan plan_cws(const SummoningTask& task);

/// 1+1D strategy: carry the token through the diamonds along a monotone
/// causal chain, branching where each call's broadcast becomes audible.
ProtocolPlan plan_chain(const SummoningTask& task);

/// Recursive threshold-scheme construction, tracked at the access-structure
/// level (no qudit simulation).
struct ShareNode {
    std::vector<std::size_t> subset;
    std::size_t share_id = 0;  // leaves only
    std::vector<ShareNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct RecursivePlan {
    ShareNode root;
    std::size_t leaf_count = 0;
    /// delivery[j] = leaf share ids that reach reveal point j on call j.
    std::vector<std::vector<std::size_t>> delivery;
};

RecursivePlan plan_recursive(const SummoningTask& task);

/// Static plan invariants: every declared send must stay inside the light
/// cone of its directive's point, call guards must sit on their own call
/// point, and announcement guards must be receivable where they are used.
/// Planners run this before returning; it is public for plans loaded from
/// files.
std::vector<std::string> validate_plan(const ProtocolPlan& plan, const SummoningTask& task);

/// Execute a plan: directives run in global time order, tokens and
/// classical records move only along declared sends, the call token is
/// injected at the chosen call point, and the revealed qubit is verified
/// against the payload by deterministic measurement. Runs are pure
/// functions of (plan, task, call_choice, payload, seed).
SimReport simulate(const ProtocolPlan& plan, const SummoningTask& task,
                   std::optional<int> call_choice, InputState payload, std::uint64_t seed);

/// Causality audit of a run: every logged transmission must stay inside
/// the light cone, and no two reveals may be spacelike separated.
std::vector<AuditViolation> audit(const SimReport& report, const SummoningTask& task);

}  // namespace summon
