#include "summon/taskio.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace summon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) known = true;
        }
        if (!known) fail(where, "unknown field '" + it.key() + "'");
    }
}

Rational parse_coordinate(const json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return Rational(BigInt(value.get<long long>()));
    }
    if (value.is_string()) {
        auto parsed = parse_rational(value.get<std::string>());
        if (!parsed) fail(where, "cannot parse '" + value.get<std::string>() + "' as a rational");
        return *parsed;
    }
    fail(where, "coordinates must be rational strings or integers");
}

SpacetimePoint parse_point(const json& value, const std::string& where) {
    if (!value.is_object()) fail(where, "expected an object with 't' and 'x'");
    reject_unknown(value, where, {"t", "x"});
    if (!value.contains("t") || !value.contains("x")) fail(where, "needs both 't' and 'x'");
    SpacetimePoint p;
    p.t = parse_coordinate(value["t"], where + ".t");
    if (!value["x"].is_array()) fail(where + ".x", "expected an array");
    for (std::size_t k = 0; k < value["x"].size(); ++k) {
        p.x.push_back(parse_coordinate(value["x"][k], where + ".x[" + std::to_string(k) + "]"));
    }
    return p;
}

json point_to_json(const SpacetimePoint& p) {
    json out;
    out["t"] = format_rational(p.t);
    out["x"] = json::array();
    for (const auto& coord : p.x) out["x"].push_back(format_rational(coord));
    return out;
}

SpacetimePoint point_from_json(const json& value) { return parse_point(value, "point"); }

}  // namespace

SummoningTask parse_task(const json& doc) {
    if (!doc.is_object()) fail("task", "top level must be an object");
    reject_unknown(doc, "task", {"version", "dim", "c", "axis_radicands", "start", "pairs"});
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != kTaskSchemaVersion) {
        fail("task.version", "expected version " + std::to_string(kTaskSchemaVersion));
    }
    SummoningTask task;
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1) {
        fail("task.dim", "expected an integer >= 1");
    }
    task.metric.dim = doc["dim"].get<std::size_t>();
    task.metric.c = doc.contains("c") ? parse_coordinate(doc["c"], "task.c") : Rational(1);
    if (task.metric.c <= 0) fail("task.c", "signal speed must be positive");
    if (doc.contains("axis_radicands")) {
        if (!doc["axis_radicands"].is_array()) fail("task.axis_radicands", "expected an array");
        for (const auto& r : doc["axis_radicands"]) {
            if (!r.is_number_integer() || r.get<long long>() < 0) {
                fail("task.axis_radicands", "radicands are nonnegative integers");
            }
            task.metric.axis_radicands.push_back(r.get<std::uint64_t>());
        }
    } else {
        task.metric.axis_radicands.assign(task.metric.dim, 1);
    }
    if (task.metric.axis_radicands.size() != task.metric.dim) {
        fail("task.axis_radicands", "need exactly one radicand per axis");
    }
    if (!doc.contains("start")) fail("task.start", "missing");
    task.start = parse_point(doc["start"], "task.start");
    if (!doc.contains("pairs") || !doc["pairs"].is_array() || doc["pairs"].empty()) {
        fail("task.pairs", "expected a nonempty array");
    }
    for (std::size_t j = 0; j < doc["pairs"].size(); ++j) {
        const auto& entry = doc["pairs"][j];
        std::string where = "task.pairs[" + std::to_string(j) + "]";
        if (!entry.is_object()) fail(where, "expected an object");
        reject_unknown(entry, where, {"call", "reveal"});
        if (!entry.contains("call") || !entry.contains("reveal")) {
            fail(where, "needs both 'call' and 'reveal'");
        }
        CallRevealPair pair;
        pair.call = parse_point(entry["call"], where + ".call");
        pair.reveal = parse_point(entry["reveal"], where + ".reveal");
        task.pairs.push_back(std::move(pair));
    }
    return task;
}

SummoningTask parse_task_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("task: not valid JSON");
    return parse_task(doc);
}

SummoningTask load_task_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open task file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_task_text(buffer.str());
}

json task_to_json(const SummoningTask& task) {
    json out;
    out["version"] = kTaskSchemaVersion;
    out["dim"] = task.metric.dim;
    out["c"] = format_rational(task.metric.c);
    out["axis_radicands"] = task.metric.axis_radicands;
    out["start"] = point_to_json(task.start);
    out["pairs"] = json::array();
    for (const auto& pair : task.pairs) {
        out["pairs"].push_back({{"call", point_to_json(pair.call)},
                                {"reveal", point_to_json(pair.reveal)}});
    }
    return out;
}

json verdict_to_json(const Verdict& verdict) {
    json out;
    out["version"] = kReportSchemaVersion;
    out["feasible"] = verdict.feasible;
    if (verdict.violation) {
        json w;
        w["condition"] = verdict.violation->kind == Witness::Kind::Cond1 ? 1 : 2;
        if (verdict.violation->kind == Witness::Kind::Cond1) {
            w["reveal"] = verdict.violation->j;
        } else {
            w["i"] = verdict.violation->i;
            w["j"] = verdict.violation->j;
        }
        w["description"] = describe(*verdict.violation);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json violations_to_json(const std::vector<TaskViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        json entry;
        switch (v.kind) {
            case TaskViolation::Kind::EmptyTask: entry["kind"] = "empty_task"; break;
            case TaskViolation::Kind::BadMetric: entry["kind"] = "bad_metric"; break;
            case TaskViolation::Kind::DimensionMismatch: entry["kind"] = "dimension_mismatch"; break;
            case TaskViolation::Kind::RevealPrecedesCall: entry["kind"] = "reveal_precedes_call"; break;
        }
        entry["index"] = v.index;
        entry["message"] = v.message;
        out.push_back(entry);
    }
    return out;
}

namespace {

json guard_to_json(const Guard& g) {
    json out;
    switch (g.kind) {
        case Guard::Kind::Always: out["kind"] = "always"; break;
        case Guard::Kind::CallHere: out["kind"] = "call_here"; break;
        case Guard::Kind::NoCallHere: out["kind"] = "no_call_here"; break;
        case Guard::Kind::AnnounceReceived: out["kind"] = "announce_received"; break;
        case Guard::Kind::AnnounceNoneOf: out["kind"] = "announce_none_of"; break;
    }
    if (g.vertex >= 0) out["vertex"] = g.vertex;
    if (!g.vertices.empty()) out["vertices"] = g.vertices;
    return out;
}

Guard guard_from_json(const json& doc) {
    Guard g;
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "always") g.kind = Guard::Kind::Always;
    else if (kind == "call_here") g.kind = Guard::Kind::CallHere;
    else if (kind == "no_call_here") g.kind = Guard::Kind::NoCallHere;
    else if (kind == "announce_received") g.kind = Guard::Kind::AnnounceReceived;
    else if (kind == "announce_none_of") g.kind = Guard::Kind::AnnounceNoneOf;
    else throw ParseError("plan guard: unknown kind '" + kind + "'");
    g.vertex = doc.value("vertex", -1);
    g.vertices = doc.value("vertices", std::vector<int>{});
    return g;
}

json action_to_json(const Action& action) {
    json out;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ActTeleportMeasure>) {
                out["op"] = "teleport_measure";
                out["source"] = a.source_token;
                out["bell_half"] = a.bell_a_token;
                out["record"] = a.record;
            } else if constexpr (std::is_same_v<T, ActSendClassical>) {
                out["op"] = "send_classical";
                out["record"] = a.record;
                out["to"] = point_to_json(a.to);
            } else if constexpr (std::is_same_v<T, ActAnnounce>) {
                out["op"] = "announce";
                out["call"] = a.call_index;
                out["to"] = point_to_json(a.to);
            } else if constexpr (std::is_same_v<T, ActSendQubit>) {
                out["op"] = "send_qubit";
                out["token"] = a.token;
                out["to"] = point_to_json(a.to);
            } else if constexpr (std::is_same_v<T, ActPauliCorrect>) {
                out["op"] = "pauli_correct";
                out["token"] = a.token;
                out["record"] = a.record;
            } else if constexpr (std::is_same_v<T, ActEncode>) {
                out["op"] = "encode";
                out["payload"] = a.payload_token;
                out["ancilla"] = a.ancilla_token;
                out["block"] = a.block_tokens;
            } else if constexpr (std::is_same_v<T, ActDecode>) {
                out["op"] = "decode";
                out["block"] = a.block_tokens;
                out["kept"] = a.kept_positions;
                out["output"] = a.output_token;
            } else if constexpr (std::is_same_v<T, ActReveal>) {
                out["op"] = "reveal";
                out["token"] = a.token;
            }
        },
        action);
    return out;
}

Action action_from_json(const json& doc) {
    std::string op = doc.at("op").get<std::string>();
    if (op == "teleport_measure") {
        return ActTeleportMeasure{doc.at("source").get<int>(), doc.at("bell_half").get<int>(),
                                  doc.at("record").get<std::string>()};
    }
    if (op == "send_classical") {
        return ActSendClassical{doc.at("record").get<std::string>(),
                                point_from_json(doc.at("to"))};
    }
    if (op == "announce") {
        return ActAnnounce{doc.at("call").get<int>(), point_from_json(doc.at("to"))};
    }
    if (op == "send_qubit") {
        return ActSendQubit{doc.at("token").get<int>(), point_from_json(doc.at("to"))};
    }
    if (op == "pauli_correct") {
        return ActPauliCorrect{doc.at("token").get<int>(), doc.at("record").get<std::string>()};
    }
    if (op == "encode") {
        return ActEncode{doc.at("payload").get<int>(), doc.at("ancilla").get<int>(),
                         doc.at("block").get<std::vector<int>>()};
    }
    if (op == "decode") {
        return ActDecode{doc.at("block").get<std::vector<int>>(),
                         doc.at("kept").get<std::vector<std::size_t>>(),
                         doc.at("output").get<int>()};
    }
    if (op == "reveal") {
        return ActReveal{doc.at("token").get<int>()};
    }
    throw ParseError("plan action: unknown op '" + op + "'");
}

}  // namespace

json plan_to_json(const ProtocolPlan& plan) {
    json out;
    out["version"] = kPlanSchemaVersion;
    out["strategy"] = plan.strategy;
    out["n"] = plan.n;
    out["payload_token"] = plan.payload_token;
    out["tokens"] = json::array();
    for (const auto& tok : plan.tokens) {
        out["tokens"].push_back(
            {{"id", tok.id}, {"role", tok.role}, {"at", point_to_json(tok.at)}});
    }
    out["bell_pairs"] = json::array();
    for (const auto& bp : plan.bell_pairs) {
        out["bell_pairs"].push_back({{"a", bp.token_a},
                                     {"b", bp.token_b},
                                     {"a_at", point_to_json(bp.at_a)},
                                     {"b_at", point_to_json(bp.at_b)}});
    }
    out["code_edges"] = json::array();
    for (auto [a, b] : plan.code_edges) out["code_edges"].push_back({a, b});
    out["directives"] = json::array();
    for (const auto& d : plan.directives) {
        json entry;
        entry["at"] = point_to_json(d.at);
        entry["guard"] = guard_to_json(d.guard);
        entry["actions"] = json::array();
        for (const auto& a : d.actions) entry["actions"].push_back(action_to_json(a));
        out["directives"].push_back(entry);
    }
    return out;
}

ProtocolPlan plan_from_json(const json& doc) {
    if (doc.value("version", -1) != kPlanSchemaVersion) {
        throw ParseError("plan: unsupported schema version");
    }
    ProtocolPlan plan;
    plan.strategy = doc.at("strategy").get<std::string>();
    plan.n = doc.at("n").get<std::size_t>();
    plan.payload_token = doc.at("payload_token").get<int>();
    for (const auto& tok : doc.at("tokens")) {
        plan.tokens.push_back({tok.at("id").get<int>(), tok.at("role").get<std::string>(),
                               point_from_json(tok.at("at"))});
    }
    for (const auto& bp : doc.at("bell_pairs")) {
        plan.bell_pairs.push_back({bp.at("a").get<int>(), bp.at("b").get<int>(),
                                   point_from_json(bp.at("a_at")),
                                   point_from_json(bp.at("b_at"))});
    }
    for (const auto& e : doc.at("code_edges")) {
        plan.code_edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    for (const auto& d : doc.at("directives")) {
        Directive directive;
        directive.at = point_from_json(d.at("at"));
        directive.guard = guard_from_json(d.at("guard"));
        for (const auto& a : d.at("actions")) directive.actions.push_back(action_from_json(a));
        plan.directives.push_back(std::move(directive));
    }
    return plan;
}

json recursive_plan_to_json(const RecursivePlan& plan) {
    json out;
    out["version"] = kPlanSchemaVersion;
    out["strategy"] = "recursive";
    out["leaf_count"] = plan.leaf_count;
    std::function<json(const ShareNode&)> node_to_json = [&](const ShareNode& node) {
        json entry;
        entry["subset"] = node.subset;
        if (node.is_leaf()) {
            entry["share"] = node.share_id;
        } else {
            entry["children"] = json::array();
            for (const auto& child : node.children) entry["children"].push_back(node_to_json(child));
        }
        return entry;
    };
    out["tree"] = node_to_json(plan.root);
    out["delivery"] = plan.delivery;
    return out;
}

json report_to_json(const SimReport& report) {
    json out;
    out["version"] = kReportSchemaVersion;
    if (report.call_choice) {
        out["call"] = *report.call_choice;
    } else {
        out["call"] = nullptr;
    }
    out["payload"] = to_string(report.payload);
    out["success"] = report.success;
    out["payload_verified"] = report.payload_verified;
    if (report.revealed_at) {
        out["revealed_at"] = point_to_json(*report.revealed_at);
    } else {
        out["revealed_at"] = nullptr;
    }
    out["log"] = json::array();
    for (const auto& ev : report.log) {
        json entry;
        switch (ev.kind) {
            case MessageEvent::Kind::Classical: entry["kind"] = "classical"; break;
            case MessageEvent::Kind::Qubit: entry["kind"] = "qubit"; break;
            case MessageEvent::Kind::Reveal: entry["kind"] = "reveal"; break;
        }
        entry["from"] = point_to_json(ev.from);
        entry["to"] = point_to_json(ev.to);
        entry["label"] = ev.label;
        out["log"].push_back(entry);
    }
    out["audit_violations"] = json::array();
    for (const auto& v : report.audit_violations) {
        out["audit_violations"].push_back({{"event", v.event_index}, {"reason", v.reason}});
    }
    return out;
}

json code_report_to_json(const CodeReport& report) {
    json out;
    out["version"] = kReportSchemaVersion;
    out["vertices"] = report.n_vertices;
    out["qubits"] = report.n_qubits;
    out["per_vertex"] = json::array();
    for (const auto& v : report.vertices) {
        out["per_vertex"].push_back({{"vertex", v.vertex},
                                     {"kept", v.kept},
                                     {"erasure_correctable", v.erasure_ok},
                                     {"complement_correctable", v.complement_ok},
                                     {"cws_condition", v.cws_condition}});
    }
    return out;
}

}  // namespace summon
