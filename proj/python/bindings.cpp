#include "summon/diagram.hpp"
#include "summon/protocol.hpp"
#include "summon/taskio.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_python(const json& value) {
    switch (value.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(value.get<bool>());
        case json::value_t::number_integer: return py::int_(value.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(value.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(value.get<double>());
        case json::value_t::string: return py::str(value.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(to_python(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = value.begin(); it != value.end(); ++it) {
                out[py::str(it.key())] = to_python(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

summon::InputState state_from(const std::string& label) {
    auto state = summon::input_state_from_string(label);
    if (!state) throw py::value_error("unknown state '" + label + "' (use X+ X- Y+ Y- Z+ Z-)");
    return *state;
}

summon::ProtocolPlan compile_plan(const summon::SummoningTask& task,
                                  const std::string& strategy) {
    if (strategy == "cws") return summon::plan_cws(task);
    if (strategy == "n2") return summon::plan_n2(task);
    if (strategy == "chain") return summon::plan_chain(task);
    throw py::value_error("unknown strategy '" + strategy + "'");
}

}  // namespace

PYBIND11_MODULE(_summon, m) {
    m.doc() = "spacetime summoning toolkit: feasibility, codes, protocols";

    py::class_<summon::SummoningTask>(m, "SummoningTask")
        .def_property_readonly("n", &summon::SummoningTask::n)
        .def_property_readonly(
            "dim", [](const summon::SummoningTask& t) { return t.metric.dim; })
        .def("__repr__", [](const summon::SummoningTask& t) {
            return "<SummoningTask n=" + std::to_string(t.n()) + " dim=" +
                   std::to_string(t.metric.dim) + ">";
        });

    py::register_exception<summon::InfeasibleTask>(m, "InfeasibleTask");
    py::register_exception<summon::NoChain>(m, "NoChainError");
    py::register_exception<summon::StrategyInapplicable>(m, "StrategyInapplicable");
    py::register_exception<summon::ParseError>(m, "TaskParseError");

    m.def("load_task", &summon::load_task_file, py::arg("path"),
          "Load and parse a task JSON file.");
    m.def("parse_task", &summon::parse_task_text, py::arg("text"),
          "Parse a task from JSON text.");
    m.def("task_json", [](const summon::SummoningTask& task) {
        return to_python(summon::task_to_json(task));
    });

    m.def(
        "validate",
        [](const summon::SummoningTask& task) {
            py::list out;
            for (const auto& v : summon::validate_task(task)) out.append(v.message);
            return out;
        },
        py::arg("task"), "Invariant violations as messages; empty means valid.");

    m.def(
        "check",
        [](const summon::SummoningTask& task) {
            return to_python(summon::verdict_to_json(summon::decide(task)));
        },
        py::arg("task"), "Feasibility verdict with a witness on failure.");

    m.def(
        "causal_matrix",
        [](const summon::SummoningTask& task) {
            auto g = summon::build_graph(task);
            py::list rows;
            for (std::size_t i = 0; i < g.size(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < g.size(); ++j) row.append(g.edge(i, j));
                rows.append(row);
            }
            return rows;
        },
        py::arg("task"), "Directed diamond-precedence adjacency matrix.");

    m.def(
        "code_report",
        [](std::size_t n) {
            auto gp = summon::DoubledGraph::complete(n);
            auto code = summon::code_from_generators(summon::cws_generators(gp));
            auto doc = summon::code_report_to_json(summon::build_code_report(gp, code));
            return to_python(doc);
        },
        py::arg("n"), "Build the complete-graph code and verify every vertex erasure.");

    m.def(
        "generators",
        [](std::size_t n) {
            auto code = summon::cws_code_for_complete_graph(n);
            py::list out;
            for (const auto& g : code.generators) out.append(g.to_string());
            return out;
        },
        py::arg("n"), "Stabilizer generators in Pauli-string notation.");

    m.def(
        "logicals",
        [](std::size_t n) {
            auto code = summon::cws_code_for_complete_graph(n);
            return py::make_tuple(code.logical_x.to_string(), code.logical_z.to_string());
        },
        py::arg("n"));

    m.def(
        "plan_summary",
        [](const summon::SummoningTask& task, const std::string& strategy) {
            if (strategy == "recursive") {
                return to_python(summon::recursive_plan_to_json(summon::plan_recursive(task)));
            }
            return to_python(summon::plan_to_json(compile_plan(task, strategy)));
        },
        py::arg("task"), py::arg("strategy") = "cws");

    m.def(
        "simulate",
        [](const summon::SummoningTask& task, std::optional<int> call,
           const std::string& state, std::uint64_t seed, const std::string& strategy) {
            auto plan = compile_plan(task, strategy);
            auto report = summon::simulate(plan, task, call, state_from(state), seed);
            return to_python(summon::report_to_json(report));
        },
        py::arg("task"), py::arg("call") = std::nullopt, py::arg("state") = "Z+",
        py::arg("seed") = 0, py::arg("strategy") = "cws",
        "Compile, execute and audit one run; returns the report.");

    m.def(
        "render_svg",
        [](const summon::SummoningTask& task) { return summon::render_svg(task); },
        py::arg("task"));

    m.def(
        "graph_dot",
        [](const summon::SummoningTask& task) {
            return summon::graph_to_dot(summon::build_graph(task));
        },
        py::arg("task"));
}
