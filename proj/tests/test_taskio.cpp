#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "summon/taskio.hpp"
#include "support.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace summon;
using namespace summon::testing;
using nlohmann::json;

namespace {

bool same_task(const SummoningTask& a, const SummoningTask& b) {
    if (a.metric.c != b.metric.c || a.metric.dim != b.metric.dim ||
        a.metric.axis_radicands != b.metric.axis_radicands) {
        return false;
    }
    if (!(a.start == b.start) || a.n() != b.n()) return false;
    for (std::size_t j = 0; j < a.n(); ++j) {
        if (!(a.pairs[j].call == b.pairs[j].call)) return false;
        if (!(a.pairs[j].reveal == b.pairs[j].reveal)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("the shipped fixture files parse to the reference tasks") {
    auto check_file = [](const char* name, const SummoningTask& expected) {
        auto task = load_task_file(std::string(FIXTURES_DIR) + "/" + name);
        CHECK(same_task(task, expected));
    };
    check_file("fig1.json", fig1_task());
    check_file("fig2.json", fig2_task());
    check_file("fig3.json", fig3_task());
    check_file("fig4.json", fig4_task());
    check_file("fig5a.json", fig5a_task());
    check_file("triangle.json", triangle_task());
}

TEST_CASE("parse-serialize-parse is the identity on content") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        auto task = random_task(rng);
        auto round = parse_task(task_to_json(task));
        CHECK(same_task(task, round));
    }
}

TEST_CASE("decimal strings convert exactly") {
    auto task = parse_task_text(R"({
        "version": 1, "dim": 1, "c": "0.5", "axis_radicands": [1],
        "start": {"t": "-0.25", "x": ["2.5"]},
        "pairs": [{"call": {"t": "0", "x": ["0"]}, "reveal": {"t": "4", "x": ["0"]}}]
    })");
    CHECK(task.metric.c == Rational(1, 2));
    CHECK(task.start.t == Rational(-1, 4));
    CHECK(task.start.x[0] == Rational(5, 2));
}

TEST_CASE("binary float coordinates are never trusted") {
    CHECK_THROWS_AS(parse_task_text(R"({
        "version": 1, "dim": 1, "start": {"t": 0.5, "x": ["0"]},
        "pairs": [{"call": {"t": "0", "x": ["0"]}, "reveal": {"t": "1", "x": ["0"]}}]
    })"),
                    ParseError);
}

TEST_CASE("unknown fields are rejected") {
    CHECK_THROWS_AS(parse_task_text(R"({
        "version": 1, "dim": 1, "start": {"t": "0", "x": ["0"]},
        "pairs": [{"call": {"t": "0", "x": ["0"]}, "reveal": {"t": "1", "x": ["0"]}}],
        "extra": true
    })"),
                    ParseError);
}

TEST_CASE("wrong schema versions are rejected") {
    CHECK_THROWS_AS(parse_task_text(R"({
        "version": 2, "dim": 1, "start": {"t": "0", "x": ["0"]},
        "pairs": [{"call": {"t": "0", "x": ["0"]}, "reveal": {"t": "1", "x": ["0"]}}]
    })"),
                    ParseError);
}

TEST_CASE("parse errors carry field context") {
    try {
        parse_task_text(R"({
            "version": 1, "dim": 1, "start": {"t": "zero", "x": ["0"]},
            "pairs": [{"call": {"t": "0", "x": ["0"]}, "reveal": {"t": "1", "x": ["0"]}}]
        })");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("task.start.t") != std::string::npos);
    }
}

TEST_CASE("malformed JSON is a parse error, not a crash") {
    CHECK_THROWS_AS(parse_task_text("{ not json"), ParseError);
    CHECK_THROWS_AS(load_task_file("/nonexistent/task.json"), ParseError);
}

TEST_CASE("mutated task text either parses or throws ParseError") {
    std::string base = task_to_json(fig5a_task()).dump();
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> printable(32, 126);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text = base;
        switch (rng() % 3) {
            case 0: text[pos(rng)] = static_cast<char>(printable(rng)); break;
            case 1: text = text.substr(0, pos(rng)); break;
            case 2: text.insert(pos(rng), 1, static_cast<char>(printable(rng))); break;
        }
        try {
            (void)parse_task_text(text);
        } catch (const ParseError&) {
            // the only acceptable failure mode
        }
    }
}

TEST_CASE("plans survive a serialization round trip") {
    auto task = fig3_task();
    auto plan = plan_cws(task);
    auto round = plan_from_json(plan_to_json(plan));
    CHECK(round.strategy == plan.strategy);
    CHECK(round.n == plan.n);
    CHECK(round.code_edges == plan.code_edges);
    CHECK(round.tokens.size() == plan.tokens.size());
    CHECK(round.directives.size() == plan.directives.size());
    for (std::size_t call = 0; call < task.n(); ++call) {
        auto a = simulate(plan, task, static_cast<int>(call), InputState::YMinus, 5);
        auto b = simulate(round, task, static_cast<int>(call), InputState::YMinus, 5);
        CHECK(a.success == b.success);
        CHECK(a.log.size() == b.log.size());
    }
}

TEST_CASE("plans with corrupt token references are rejected, not crashed") {
    auto task = fig4_task();
    auto doc = plan_to_json(plan_n2(task));
    doc["directives"][0]["actions"][1]["token"] = 999;
    auto corrupt = plan_from_json(doc);
    CHECK_THROWS_AS(simulate(corrupt, task, 0, InputState::ZPlus, 1),
                    std::invalid_argument);
}

TEST_CASE("chain plans also round trip") {
    auto task = fig2_task();
    auto plan = plan_chain(task);
    auto round = plan_from_json(plan_to_json(plan));
    auto report = simulate(round, task, 1, InputState::XPlus, 3);
    CHECK(report.success);
}

TEST_CASE("verdict and report JSON carry the schema version") {
    auto verdict = decide(fig1_task());
    auto doc = verdict_to_json(verdict);
    CHECK(doc["version"] == kReportSchemaVersion);
    CHECK(doc["feasible"] == false);
    CHECK(doc["witness"]["condition"] == 2);
    CHECK(doc["witness"]["i"] == 0);
    CHECK(doc["witness"]["j"] == 1);

    auto task = fig4_task();
    auto report = simulate(plan_n2(task), task, 0, InputState::ZPlus, 1);
    auto rj = report_to_json(report);
    CHECK(rj["version"] == kReportSchemaVersion);
    CHECK(rj["success"] == true);
    CHECK(rj["call"] == 0);
    CHECK(rj["audit_violations"].empty());
}

TEST_CASE("code reports serialize the per-vertex verdicts") {
    auto gp = DoubledGraph::complete(3);
    auto code = code_from_generators(cws_generators(gp));
    auto doc = code_report_to_json(build_code_report(gp, code));
    CHECK(doc["qubits"] == 6);
    REQUIRE(doc["per_vertex"].size() == 3);
    for (const auto& v : doc["per_vertex"]) {
        CHECK(v["erasure_correctable"] == true);
        CHECK(v["complement_correctable"] == false);
        CHECK(v["cws_condition"] == true);
    }
}
