#include "summon/protocol.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace summon {

namespace {

void require_feasible(const SummoningTask& task) {
    Verdict v = decide(task);
    if (!v.feasible) {
        throw InfeasibleTask("task is infeasible: " + describe(*v.violation));
    }
}

std::string tp_record(std::size_t code_qubit) {
    return "tp" + std::to_string(code_qubit);
}

ProtocolPlan checked(ProtocolPlan plan, const SummoningTask& task) {
    auto problems = validate_plan(plan, task);
    if (!problems.empty()) {
        throw std::logic_error("compiled plan violates its invariants: " + problems.front());
    }
    return plan;
}

}  // namespace

std::vector<std::string> validate_plan(const ProtocolPlan& plan, const SummoningTask& task) {
    std::vector<std::string> out;
    const auto& m = task.metric;
    auto check_send = [&](const Directive& d, const SpacetimePoint& to, const char* what) {
        if (!causally_precedes(d.at, to, m)) {
            out.push_back(std::string(what) + " from " + format_point(d.at) + " to " +
                          format_point(to) + " leaves the light cone");
        }
    };
    auto check_announce_source = [&](const Directive& d, int v) {
        if (v < 0 || static_cast<std::size_t>(v) >= task.n()) {
            out.push_back("guard references unknown call index " + std::to_string(v));
            return;
        }
        if (!causally_precedes(task.pairs[v].call, d.at, m)) {
            out.push_back("announcement of call " + std::to_string(v) +
                          " is not receivable at " + format_point(d.at));
        }
    };
    for (const auto& d : plan.directives) {
        switch (d.guard.kind) {
            case Guard::Kind::CallHere:
            case Guard::Kind::NoCallHere:
                if (d.guard.vertex < 0 ||
                    static_cast<std::size_t>(d.guard.vertex) >= task.n() ||
                    !same_event(d.at, task.pairs[d.guard.vertex].call, m)) {
                    out.push_back("call guard is not located at its own call point");
                }
                break;
            case Guard::Kind::AnnounceReceived:
                check_announce_source(d, d.guard.vertex);
                break;
            case Guard::Kind::AnnounceNoneOf:
                for (int v : d.guard.vertices) check_announce_source(d, v);
                break;
            case Guard::Kind::Always:
                break;
        }
        for (const auto& action : d.actions) {
            if (const auto* send = std::get_if<ActSendClassical>(&action)) {
                check_send(d, send->to, "classical send");
            } else if (const auto* announce = std::get_if<ActAnnounce>(&action)) {
                check_send(d, announce->to, "announcement");
            } else if (const auto* qubit = std::get_if<ActSendQubit>(&action)) {
                check_send(d, qubit->to, "qubit send");
            }
        }
    }
    return out;
}

ProtocolPlan plan_n2(const SummoningTask& task) {
    if (task.n() != 2) throw StrategyInapplicable("the n=2 strategy needs exactly two pairs");
    require_feasible(task);
    CausalGraph g = build_graph(task);

    // Orient so that an edge i -> j exists; prefer 0 -> 1.
    std::size_t i = g.edge(0, 1) ? 0 : 1;
    std::size_t j = 1 - i;

    ProtocolPlan plan;
    plan.strategy = "n2";
    plan.n = 2;
    const auto& s = task.start;
    const auto& yi = task.pairs[i].call;
    const auto& zi = task.pairs[i].reveal;
    const auto& zj = task.pairs[j].reveal;

    plan.tokens.push_back({0, "payload", s});
    plan.tokens.push_back({1, "bell_s", s});
    plan.tokens.push_back({2, "bell_y", yi});
    plan.payload_token = 0;
    plan.bell_pairs.push_back({1, 2, s, yi});

    plan.directives.push_back(
        {yi, Guard::call_here(static_cast<int>(i)),
         {ActAnnounce{static_cast<int>(i), zi}, ActSendQubit{2, zi}}});
    plan.directives.push_back({yi, Guard::no_call_here(static_cast<int>(i)),
                               {ActSendQubit{2, zj}}});
    plan.directives.push_back({task.pairs[j].call, Guard::call_here(static_cast<int>(j)),
                               {ActAnnounce{static_cast<int>(j), zj}}});
    plan.directives.push_back({s, Guard::always(),
                               {ActTeleportMeasure{0, 1, tp_record(0)},
                                ActSendClassical{tp_record(0), zi},
                                ActSendClassical{tp_record(0), zj}}});
    plan.directives.push_back({zi, Guard::announce_received(static_cast<int>(i)),
                               {ActPauliCorrect{2, tp_record(0)}, ActReveal{2}}});
    plan.directives.push_back({zj, Guard::announce_received(static_cast<int>(j)),
                               {ActPauliCorrect{2, tp_record(0)}, ActReveal{2}}});
    return checked(std::move(plan), task);
}

ProtocolPlan plan_cws(const SummoningTask& task) {
    require_feasible(task);
    if (task.n() < 2) throw StrategyInapplicable("the code construction needs n >= 2");
    CausalGraph g = build_graph(task);
    StabilizerCode code = code_from_generators(cws_generators(double_graph(g)));
    return plan_cws(task, g, code);
}

ProtocolPlan plan_cws(const SummoningTask& task, const CausalGraph& graph,
                      const StabilizerCode& code) {
    require_feasible(task);
    if (task.n() < 2) throw StrategyInapplicable("the code construction needs n >= 2");
    DoubledGraph gp = double_graph(graph);
    if (gp.n_qubits() != code.n_qubits) {
        throw std::invalid_argument("code does not match the task's causal graph");
    }
    const std::size_t n = task.n();
    const std::size_t n_code = gp.n_qubits();

    // Orientation of each undirected edge: keep the existing direction,
    // lower index first when both exist.
    std::vector<std::size_t> route_src(n_code), route_dst(n_code);
    for (std::size_t q = 0; q < n_code; ++q) {
        auto [a, b] = gp.edges[gp.edge_of_qubit(q)];
        bool forward = graph.edge(a, b);  // a < b, so ties pick a -> b
        route_src[q] = forward ? a : b;
        route_dst[q] = forward ? b : a;
    }

    ProtocolPlan plan;
    plan.strategy = "cws";
    plan.n = n;
    plan.code_edges = gp.edges;

    auto add_token = [&](const std::string& role, const SpacetimePoint& at) {
        int id = static_cast<int>(plan.tokens.size());
        plan.tokens.push_back({id, role, at});
        return id;
    };

    const auto& s = task.start;
    int payload = add_token("payload", s);
    plan.payload_token = payload;
    int ancilla = add_token("ancilla", s);
    std::vector<int> block(n_code), bell_s(n_code), bell_y(n_code);
    for (std::size_t q = 0; q < n_code; ++q) block[q] = add_token("block", s);
    for (std::size_t q = 0; q < n_code; ++q) {
        bell_s[q] = add_token("bell_s", s);
        bell_y[q] = add_token("bell_y", task.pairs[route_src[q]].call);
        plan.bell_pairs.push_back({bell_s[q], bell_y[q], s, task.pairs[route_src[q]].call});
    }
    std::vector<int> outputs(n);
    for (std::size_t k = 0; k < n; ++k) {
        outputs[k] = add_token("output", task.pairs[k].reveal);
    }

    // Call announcements (reveal points decode only on their own call).
    for (std::size_t k = 0; k < n; ++k) {
        plan.directives.push_back({task.pairs[k].call, Guard::call_here(static_cast<int>(k)),
                                   {ActAnnounce{static_cast<int>(k), task.pairs[k].reveal}}});
    }

    // At the start point: encode, teleport every share qubit, broadcast the
    // teleport records to all reveal points.
    Directive at_start{s, Guard::always(), {}};
    at_start.actions.push_back(ActEncode{payload, ancilla, block});
    for (std::size_t q = 0; q < n_code; ++q) {
        at_start.actions.push_back(ActTeleportMeasure{block[q], bell_s[q], tp_record(q)});
    }
    for (std::size_t q = 0; q < n_code; ++q) {
        for (std::size_t k = 0; k < n; ++k) {
            at_start.actions.push_back(ActSendClassical{tp_record(q), task.pairs[k].reveal});
        }
    }
    plan.directives.push_back(std::move(at_start));

    // Share routing at each call point.
    for (std::size_t v = 0; v < n; ++v) {
        Directive on_call{task.pairs[v].call, Guard::call_here(static_cast<int>(v)), {}};
        Directive on_silence{task.pairs[v].call, Guard::no_call_here(static_cast<int>(v)), {}};
        for (std::size_t q = 0; q < n_code; ++q) {
            if (route_src[q] != v) continue;
            on_call.actions.push_back(ActSendQubit{bell_y[q], task.pairs[v].reveal});
            on_silence.actions.push_back(ActSendQubit{bell_y[q], task.pairs[route_dst[q]].reveal});
        }
        if (!on_call.actions.empty()) plan.directives.push_back(std::move(on_call));
        if (!on_silence.actions.empty()) plan.directives.push_back(std::move(on_silence));
    }

    // Decode at the called reveal point from the incident shares.
    for (std::size_t k = 0; k < n; ++k) {
        Directive at_reveal{task.pairs[k].reveal, Guard::announce_received(static_cast<int>(k)), {}};
        auto kept = kept_qubits(gp, k);
        for (std::size_t q : kept) {
            at_reveal.actions.push_back(ActPauliCorrect{bell_y[q], tp_record(q)});
        }
        ActDecode decode;
        decode.block_tokens.assign(bell_y.begin(), bell_y.end());
        decode.kept_positions = kept;
        decode.output_token = outputs[k];
        at_reveal.actions.push_back(std::move(decode));
        at_reveal.actions.push_back(ActReveal{outputs[k]});
        plan.directives.push_back(std::move(at_reveal));
    }
    return checked(std::move(plan), task);
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

struct SimState {
    const ProtocolPlan& plan;
    const SummoningTask& task;
    std::optional<int> call_choice;
    InputState payload;
    Tableau tableau;
    Rng rng;
    std::vector<SpacetimePoint> token_at;
    std::map<std::string, TeleportBits> records;
    std::map<std::string, std::vector<SpacetimePoint>> record_deliveries;
    std::vector<std::pair<int, SpacetimePoint>> announce_deliveries;
    std::optional<StabilizerCode> code;
    SimReport report;

    SimState(const ProtocolPlan& p, const SummoningTask& t, std::optional<int> call,
             InputState state, std::uint64_t seed)
        : plan(p), task(t), call_choice(call), payload(state),
          tableau(Tableau(p.tokens.size())), rng(seed) {}
};

bool point_eq(const SimState& st, const SpacetimePoint& a, const SpacetimePoint& b) {
    return same_event(a, b, st.task.metric);
}

void require_token_here(const SimState& st, int token, const SpacetimePoint& at,
                        const char* what) {
    if (!point_eq(st, st.token_at[token], at)) {
        std::ostringstream msg;
        msg << what << ": token " << token << " (" << st.plan.tokens[token].role
            << ") is at " << format_point(st.token_at[token]) << ", not at "
            << format_point(at);
        throw TokenNotPresent(msg.str());
    }
}

TeleportBits require_record(const SimState& st, const std::string& record,
                            const SpacetimePoint& at) {
    auto it = st.record_deliveries.find(record);
    bool delivered = false;
    if (it != st.record_deliveries.end()) {
        for (const auto& p : it->second) {
            if (point_eq(st, p, at)) delivered = true;
        }
    }
    if (!delivered) {
        throw UnsatisfiedGuard("record " + record + " was never delivered to " +
                               format_point(at));
    }
    return st.records.at(record);
}

bool guard_holds(const SimState& st, const Directive& d) {
    switch (d.guard.kind) {
        case Guard::Kind::Always:
            return true;
        case Guard::Kind::CallHere:
            return st.call_choice && *st.call_choice == d.guard.vertex;
        case Guard::Kind::NoCallHere:
            return !(st.call_choice && *st.call_choice == d.guard.vertex);
        case Guard::Kind::AnnounceReceived: {
            for (const auto& [idx, at] : st.announce_deliveries) {
                if (idx == d.guard.vertex && point_eq(st, at, d.at)) return true;
            }
            return false;
        }
        case Guard::Kind::AnnounceNoneOf: {
            for (const auto& [idx, at] : st.announce_deliveries) {
                for (int v : d.guard.vertices) {
                    if (idx == v && point_eq(st, at, d.at)) return false;
                }
            }
            return true;
        }
    }
    return false;
}

const StabilizerCode& plan_code(SimState& st) {
    if (!st.code) {
        DoubledGraph gp;
        gp.n_vertices = st.plan.n;
        gp.edges = st.plan.code_edges;
        st.code = code_from_generators(cws_generators(gp));
    }
    return *st.code;
}

struct ActionRunner {
    SimState& st;
    const Directive& d;

    void operator()(const ActTeleportMeasure& a) {
        require_token_here(st, a.source_token, d.at, "teleport source");
        require_token_here(st, a.bell_a_token, d.at, "teleport bell half");
        st.records[a.record] =
            teleport(st.tableau, static_cast<std::size_t>(a.source_token),
                     static_cast<std::size_t>(a.bell_a_token), st.rng);
    }

    void operator()(const ActSendClassical& a) {
        if (!st.records.count(a.record)) {
            throw UnsatisfiedGuard("record " + a.record + " does not exist yet");
        }
        st.record_deliveries[a.record].push_back(a.to);
        st.report.log.push_back({MessageEvent::Kind::Classical, d.at, a.to, a.record});
    }

    void operator()(const ActAnnounce& a) {
        st.announce_deliveries.emplace_back(a.call_index, a.to);
        st.report.log.push_back({MessageEvent::Kind::Classical, d.at, a.to,
                                 "call=" + std::to_string(a.call_index)});
    }

    void operator()(const ActSendQubit& a) {
        require_token_here(st, a.token, d.at, "qubit send");
        st.token_at[a.token] = a.to;
        st.report.log.push_back({MessageEvent::Kind::Qubit, d.at, a.to,
                                 st.plan.tokens[a.token].role + "#" + std::to_string(a.token)});
    }

    void operator()(const ActPauliCorrect& a) {
        require_token_here(st, a.token, d.at, "pauli correction");
        TeleportBits bits = require_record(st, a.record, d.at);
        apply_teleport_correction(st.tableau, static_cast<std::size_t>(a.token), bits);
    }

    void operator()(const ActEncode& a) {
        require_token_here(st, a.payload_token, d.at, "encode payload");
        require_token_here(st, a.ancilla_token, d.at, "encode ancilla");
        std::vector<std::size_t> block;
        for (int tok : a.block_tokens) {
            require_token_here(st, tok, d.at, "encode block");
            block.push_back(static_cast<std::size_t>(tok));
        }
        encode_logical(st.tableau, plan_code(st), static_cast<std::size_t>(a.payload_token),
                       static_cast<std::size_t>(a.ancilla_token), block, st.rng);
    }

    void operator()(const ActDecode& a) {
        require_token_here(st, a.output_token, d.at, "decode output");
        std::vector<std::size_t> block;
        for (int tok : a.block_tokens) block.push_back(static_cast<std::size_t>(tok));
        for (std::size_t pos : a.kept_positions) {
            require_token_here(st, a.block_tokens[pos], d.at, "decode share");
        }
        decode_erasure(st.tableau, plan_code(st), block, a.kept_positions,
                       static_cast<std::size_t>(a.output_token), st.rng);
    }

    void operator()(const ActReveal& a) {
        require_token_here(st, a.token, d.at, "reveal");
        bool verified = verify_state(st.tableau, static_cast<std::size_t>(a.token), st.payload);
        if (st.report.revealed_at) {
            // A second reveal is recorded for the audit's no-cloning check.
            st.report.payload_verified = st.report.payload_verified && verified;
        } else {
            st.report.revealed_at = d.at;
            st.report.payload_verified = verified;
        }
        st.report.log.push_back({MessageEvent::Kind::Reveal, d.at, d.at,
                                 "reveal#" + std::to_string(a.token)});
    }
};

}  // namespace

namespace {

void require_tokens_consistent(const ProtocolPlan& plan) {
    const int count = static_cast<int>(plan.tokens.size());
    auto in_range = [&](int tok) { return tok >= 0 && tok < count; };
    for (int i = 0; i < count; ++i) {
        if (plan.tokens[i].id != i) {
            throw std::invalid_argument("plan token ids must match their positions");
        }
    }
    if (!in_range(plan.payload_token)) {
        throw std::invalid_argument("plan payload token out of range");
    }
    for (const auto& bp : plan.bell_pairs) {
        if (!in_range(bp.token_a) || !in_range(bp.token_b) || bp.token_a == bp.token_b) {
            throw std::invalid_argument("plan Bell pair tokens out of range");
        }
    }
    for (const auto& d : plan.directives) {
        for (const auto& action : d.actions) {
            std::visit(
                [&](const auto& a) {
                    using T = std::decay_t<decltype(a)>;
                    bool ok = true;
                    if constexpr (std::is_same_v<T, ActTeleportMeasure>) {
                        ok = in_range(a.source_token) && in_range(a.bell_a_token);
                    } else if constexpr (std::is_same_v<T, ActSendQubit>) {
                        ok = in_range(a.token);
                    } else if constexpr (std::is_same_v<T, ActPauliCorrect>) {
                        ok = in_range(a.token);
                    } else if constexpr (std::is_same_v<T, ActEncode>) {
                        ok = in_range(a.payload_token) && in_range(a.ancilla_token);
                        for (int tok : a.block_tokens) ok = ok && in_range(tok);
                    } else if constexpr (std::is_same_v<T, ActDecode>) {
                        ok = in_range(a.output_token);
                        for (int tok : a.block_tokens) ok = ok && in_range(tok);
                        for (std::size_t pos : a.kept_positions) {
                            ok = ok && pos < a.block_tokens.size();
                        }
                    } else if constexpr (std::is_same_v<T, ActReveal>) {
                        ok = in_range(a.token);
                    }
                    if (!ok) throw std::invalid_argument("plan action references a bad token");
                },
                action);
        }
    }
}

}  // namespace

SimReport simulate(const ProtocolPlan& plan, const SummoningTask& task,
                   std::optional<int> call_choice, InputState payload, std::uint64_t seed) {
    if (plan.n != task.n()) {
        throw std::invalid_argument("plan was compiled for a different task size");
    }
    if (call_choice && (*call_choice < 0 || static_cast<std::size_t>(*call_choice) >= task.n())) {
        throw std::invalid_argument("call choice out of range");
    }
    require_tokens_consistent(plan);

    SimState st(plan, task, call_choice, payload, seed);
    st.report.call_choice = call_choice;
    st.report.payload = payload;

    std::vector<InputState> init(plan.tokens.size(), InputState::ZPlus);
    init[plan.payload_token] = payload;
    st.tableau = Tableau::product_state(init);
    for (const auto& tok : plan.tokens) st.token_at.push_back(tok.at);
    for (const auto& bp : plan.bell_pairs) {
        bell_pair(st.tableau, static_cast<std::size_t>(bp.token_a),
                  static_cast<std::size_t>(bp.token_b), st.rng);
    }

    // Global time order; ties resolved by plan order, which emits causally
    // earlier work first for co-located directives.
    std::vector<std::size_t> order(plan.directives.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return plan.directives[a].at.t < plan.directives[b].at.t;
    });

    for (std::size_t idx : order) {
        const Directive& d = plan.directives[idx];
        if (!guard_holds(st, d)) continue;
        ActionRunner runner{st, d};
        for (const auto& action : d.actions) std::visit(runner, action);
    }

    if (call_choice) {
        const auto& expected = task.pairs[*call_choice].reveal;
        st.report.success = st.report.revealed_at &&
                            point_eq(st, *st.report.revealed_at, expected) &&
                            st.report.payload_verified;
    } else {
        st.report.success = !st.report.revealed_at.has_value();
    }
    st.report.audit_violations = audit(st.report, task);
    return st.report;
}

std::vector<AuditViolation> audit(const SimReport& report, const SummoningTask& task) {
    std::vector<AuditViolation> out;
    for (std::size_t i = 0; i < report.log.size(); ++i) {
        const auto& ev = report.log[i];
        if (!causally_precedes(ev.from, ev.to, task.metric)) {
            std::ostringstream msg;
            msg << "superluminal transmission '" << ev.label << "' from "
                << format_point(ev.from) << " to " << format_point(ev.to);
            out.push_back({i, msg.str()});
        }
    }
    // No-cloning: reveals of the same payload must never sit at spacelike
    // separated points.
    std::vector<std::size_t> reveals;
    for (std::size_t i = 0; i < report.log.size(); ++i) {
        if (report.log[i].kind == MessageEvent::Kind::Reveal) reveals.push_back(i);
    }
    for (std::size_t a = 0; a < reveals.size(); ++a) {
        for (std::size_t b = a + 1; b < reveals.size(); ++b) {
            const auto& pa = report.log[reveals[a]].to;
            const auto& pb = report.log[reveals[b]].to;
            if (!causally_precedes(pa, pb, task.metric) &&
                !causally_precedes(pb, pa, task.metric)) {
                out.push_back({reveals[b], "payload revealed at two spacelike points"});
            }
        }
    }
    return out;
}

}  // namespace summon
