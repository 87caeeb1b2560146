// summon: decide, plan, simulate, and visualize spacetime summoning tasks.

#include "summon/diagram.hpp"
#include "summon/protocol.hpp"
#include "summon/taskio.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;        // parse/validation errors
constexpr int kExitInfeasible = 2;   // the task fails the feasibility conditions
constexpr int kExitInapplicable = 3; // strategy or feature does not apply
constexpr int kExitRunFailed = 4;    // a simulation did not succeed

struct CommonOpts {
    std::string task_path;
    bool json_output = false;
};

summon::SummoningTask load_or_exit(const std::string& path) {
    try {
        return summon::load_task_file(path);
    } catch (const summon::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        std::exit(kExitError);
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExitError);
    }
    out << content;
}

int require_valid(const summon::SummoningTask& task, bool json_mode) {
    auto violations = summon::validate_task(task);
    if (violations.empty()) return kExitOk;
    if (json_mode) {
        json out;
        out["version"] = summon::kReportSchemaVersion;
        out["valid"] = false;
        out["violations"] = summon::violations_to_json(violations);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& v : violations) std::cerr << "invalid task: " << v.message << "\n";
    }
    return kExitError;
}

int cmd_check(const CommonOpts& opts) {
    auto task = load_or_exit(opts.task_path);
    if (int rc = require_valid(task, opts.json_output); rc != kExitOk) return rc;
    auto verdict = summon::decide(task);
    if (opts.json_output) {
        std::cout << summon::verdict_to_json(verdict).dump(2) << "\n";
    } else if (verdict.feasible) {
        std::cout << "Feasible: all " << task.n()
                  << " causal diamonds can hold the state\n";
    } else {
        std::cout << "Infeasible: " << summon::describe(*verdict.violation) << "\n";
    }
    return verdict.feasible ? kExitOk : kExitInfeasible;
}

std::string chain_order_string(const summon::ProtocolPlan& plan) {
    // The chain plan visits waypoints guarded by announce_received in order.
    std::string order = "[";
    bool first = true;
    for (const auto& d : plan.directives) {
        if (d.guard.kind != summon::Guard::Kind::AnnounceReceived) continue;
        bool sends_on = false;
        for (const auto& a : d.actions) {
            if (std::holds_alternative<summon::ActSendQubit>(a)) sends_on = true;
        }
        if (!sends_on) continue;
        if (!first) order += ", ";
        order += "D" + std::to_string(d.guard.vertex);
        first = false;
    }
    return order + "]";
}

int cmd_plan(const CommonOpts& opts, const std::string& strategy, const std::string& out_path) {
    auto task = load_or_exit(opts.task_path);
    if (int rc = require_valid(task, opts.json_output); rc != kExitOk) return rc;
    try {
        json doc;
        std::string summary;
        if (strategy == "recursive") {
            auto plan = summon::plan_recursive(task);
            doc = summon::recursive_plan_to_json(plan);
            summary = "recursive plan: leaf count " + std::to_string(plan.leaf_count);
        } else {
            summon::ProtocolPlan plan;
            if (strategy == "cws") {
                plan = summon::plan_cws(task);
                summary = "cws plan: " + std::to_string(plan.code_qubits()) +
                          " code qubits, " + std::to_string(plan.bell_pairs.size()) +
                          " Bell pairs, " + std::to_string(plan.directives.size()) +
                          " directives";
            } else if (strategy == "n2") {
                plan = summon::plan_n2(task);
                summary = "n2 teleportation plan: 1 Bell pair, " +
                          std::to_string(plan.directives.size()) + " directives";
            } else if (strategy == "chain") {
                plan = summon::plan_chain(task);
                summary = "chain plan: chain order " + chain_order_string(plan);
            } else {
                std::cerr << "error: unknown strategy '" << strategy << "'\n";
                return kExitError;
            }
            doc = summon::plan_to_json(plan);
        }
        if (!out_path.empty()) write_output(out_path, doc.dump(2) + "\n");
        if (opts.json_output && out_path.empty()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << summary << "\n";
        }
        return kExitOk;
    } catch (const summon::InfeasibleTask& err) {
        std::cerr << "infeasible: " << err.what() << "\n";
        return kExitInfeasible;
    } catch (const summon::NoChain& err) {
        std::cerr << "no chain: " << err.what() << "\n";
        return kExitInapplicable;
    } catch (const summon::StrategyInapplicable& err) {
        std::cerr << "inapplicable: " << err.what() << "\n";
        return kExitInapplicable;
    }
}

summon::ProtocolPlan compile_for(const summon::SummoningTask& task, const std::string& strategy) {
    if (strategy == "cws") return summon::plan_cws(task);
    if (strategy == "n2") return summon::plan_n2(task);
    if (strategy == "chain") return summon::plan_chain(task);
    throw summon::StrategyInapplicable("unknown strategy '" + strategy + "'");
}

int cmd_simulate(const CommonOpts& opts, const std::string& strategy, const std::string& call_arg,
                 const std::string& state_arg, std::uint64_t seed, std::uint64_t seeds,
                 bool sweep_all, const std::string& out_path, const std::string& log_path) {
    auto task = load_or_exit(opts.task_path);
    if (int rc = require_valid(task, opts.json_output); rc != kExitOk) return rc;
    try {
        auto plan = compile_for(task, strategy);
        std::vector<std::optional<int>> calls;
        std::vector<summon::InputState> states;
        std::vector<std::uint64_t> run_seeds;
        if (sweep_all) {
            calls.push_back(std::nullopt);
            for (std::size_t j = 0; j < task.n(); ++j) calls.push_back(static_cast<int>(j));
            states.assign(std::begin(summon::kAllInputStates), std::end(summon::kAllInputStates));
            for (std::uint64_t k = 0; k < std::max<std::uint64_t>(seeds, 1); ++k) {
                run_seeds.push_back(seed + k);
            }
        } else {
            if (call_arg == "none") {
                calls.push_back(std::nullopt);
            } else {
                calls.push_back(std::stoi(call_arg));
            }
            auto state = summon::input_state_from_string(state_arg);
            if (!state) {
                std::cerr << "error: unknown state '" << state_arg
                          << "' (use X+ X- Y+ Y- Z+ Z-)\n";
                return kExitError;
            }
            states.push_back(*state);
            run_seeds.push_back(seed);
        }

        json all_reports = json::array();
        std::ostringstream log_lines;  // message logs as JSON lines
        bool all_ok = true;
        for (auto call : calls) {
            for (auto state : states) {
                for (auto run_seed : run_seeds) {
                    auto report = summon::simulate(plan, task, call, state, run_seed);
                    bool ok = report.success && report.audit_violations.empty();
                    all_ok = all_ok && ok;
                    if (!log_path.empty()) {
                        auto doc = summon::report_to_json(report);
                        for (auto& event : doc["log"]) {
                            event["call"] = doc["call"];
                            event["payload"] = doc["payload"];
                            event["seed"] = run_seed;
                            log_lines << event.dump() << "\n";
                        }
                    }
                    if (opts.json_output || !out_path.empty()) {
                        auto doc = summon::report_to_json(report);
                        doc["seed"] = run_seed;
                        all_reports.push_back(std::move(doc));
                    }
                    if (!opts.json_output) {
                        std::cout << "call=" << (call ? std::to_string(*call) : "none")
                                  << " state=" << summon::to_string(state)
                                  << " seed=" << run_seed << " -> "
                                  << (ok ? "success" : "FAILURE");
                        if (report.revealed_at) {
                            std::cout << " revealed at "
                                      << summon::format_point(*report.revealed_at);
                        }
                        if (!report.audit_violations.empty()) {
                            std::cout << " audit violations: "
                                      << report.audit_violations.size();
                        }
                        std::cout << "\n";
                    }
                }
            }
        }
        json doc = all_reports.size() == 1 ? all_reports[0] : all_reports;
        if (!out_path.empty()) write_output(out_path, doc.dump(2) + "\n");
        if (!log_path.empty()) write_output(log_path, log_lines.str());
        if (opts.json_output) std::cout << doc.dump(2) << "\n";
        return all_ok ? kExitOk : kExitRunFailed;
    } catch (const summon::InfeasibleTask& err) {
        std::cerr << "infeasible: " << err.what() << "\n";
        return kExitInfeasible;
    } catch (const summon::NoChain& err) {
        std::cerr << "no chain: " << err.what() << "\n";
        return kExitInapplicable;
    } catch (const summon::StrategyInapplicable& err) {
        std::cerr << "inapplicable: " << err.what() << "\n";
        return kExitInapplicable;
    }
}

int cmd_code(const std::string& task_path, int n_direct, bool json_mode, bool dump_generators,
             const std::string& out_path) {
    summon::DoubledGraph gp;
    try {
        if (n_direct > 0) {
            gp = summon::DoubledGraph::complete(static_cast<std::size_t>(n_direct));
        } else {
            auto task = load_or_exit(task_path);
            if (int rc = require_valid(task, json_mode); rc != kExitOk) return rc;
            gp = summon::double_graph(summon::build_graph(task));
        }
        auto started = std::chrono::steady_clock::now();
        auto rows = summon::cws_generators(gp);
        auto code = summon::code_from_generators(rows);
        auto report = summon::build_code_report(gp, code);
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);

        json doc = summon::code_report_to_json(report);
        bool include_generators = dump_generators || code.n_qubits <= 64;
        if (include_generators) {
            doc["generators"] = json::array();
            for (const auto& s : rows) doc["generators"].push_back(s.to_string());
            doc["stabilizer"] = json::array();
            for (const auto& g : code.generators) doc["stabilizer"].push_back(g.to_string());
            doc["logical_x"] = code.logical_x.to_string();
            doc["logical_z"] = code.logical_z.to_string();
        }
        if (!out_path.empty()) write_output(out_path, doc.dump(2) + "\n");
        if (json_mode) {
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        std::cout << report.n_qubits << " code qubits on " << report.n_vertices
                  << " diamonds (" << report.n_vertices << "(" << report.n_vertices
                  << "-1) = " << report.n_qubits << ")\n";
        if (include_generators) {
            for (std::size_t e = 0; e < rows.size(); ++e) {
                std::cout << "S[" << e << "] " << rows[e].to_string() << "\n";
            }
            std::cout << "stabilizer (even products):\n" << summon::format_code(code);
        } else {
            std::cout << "(generators elided at this size; pass --generators or -o)\n";
        }
        std::size_t correctable = 0;
        for (const auto& v : report.vertices) {
            std::cout << "vertex " << v.vertex << ": kept " << v.kept.size()
                      << " qubits, erasure " << (v.erasure_ok ? "correctable" : "NOT correctable")
                      << ", complement " << (v.complement_ok ? "correctable" : "not correctable")
                      << ", adjacency condition " << (v.cws_condition ? "holds" : "FAILS") << "\n";
            if (v.erasure_ok) ++correctable;
        }
        std::cout << correctable << "/" << report.n_vertices
                  << " kept-sets correctable; built and checked in " << elapsed.count()
                  << " s\n";
        return kExitOk;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
}

int cmd_diagram(const CommonOpts& opts, const std::string& out_path, bool graph_mode,
                bool doubled_mode) {
    auto task = load_or_exit(opts.task_path);
    if (int rc = require_valid(task, false); rc != kExitOk) return rc;
    try {
        std::string content;
        if (graph_mode) {
            content = summon::graph_to_dot(summon::build_graph(task));
        } else if (doubled_mode) {
            content = summon::doubled_graph_to_dot(
                summon::double_graph(summon::build_graph(task)));
        } else {
            content = summon::render_svg(task);
        }
        write_output(out_path, content);
        return kExitOk;
    } catch (const summon::UnsupportedDimension& err) {
        std::cerr << "unsupported dimension: " << err.what() << "\n";
        return kExitInapplicable;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"summoning tasks in Minkowski space: feasibility, protocols, simulation"};
    app.require_subcommand(1);

    CommonOpts check_opts;
    auto* check = app.add_subcommand("check", "decide feasibility of a task file");
    check->add_option("task", check_opts.task_path, "task JSON file")->required();
    check->add_flag("--json", check_opts.json_output, "machine-readable output");

    CommonOpts plan_opts;
    std::string plan_strategy = "cws";
    std::string plan_out;
    auto* plan = app.add_subcommand("plan", "compile a protocol plan");
    plan->add_option("task", plan_opts.task_path, "task JSON file")->required();
    plan->add_option("--strategy", plan_strategy, "cws | n2 | chain | recursive")
        ->check(CLI::IsMember({"cws", "n2", "chain", "recursive"}));
    plan->add_option("-o,--output", plan_out, "write the plan JSON here");
    plan->add_flag("--json", plan_opts.json_output, "print the plan JSON to stdout");

    CommonOpts sim_opts;
    std::string sim_strategy = "cws";
    std::string sim_call = "none";
    std::string sim_state = "Z+";
    std::uint64_t sim_seed = 0;
    std::uint64_t sim_seeds = 1;
    bool sim_all = false;
    std::string sim_out;
    std::string sim_log;
    auto* sim = app.add_subcommand("simulate", "execute and audit a protocol");
    sim->add_option("task", sim_opts.task_path, "task JSON file")->required();
    sim->add_option("--strategy", sim_strategy, "cws | n2 | chain")
        ->check(CLI::IsMember({"cws", "n2", "chain"}));
    sim->add_option("--call", sim_call, "call index or 'none'");
    sim->add_option("--state", sim_state, "payload: X+ X- Y+ Y- Z+ Z-");
    sim->add_option("--seed", sim_seed, "measurement RNG seed");
    sim->add_option("--seeds", sim_seeds, "seed count for --all sweeps");
    sim->add_flag("--all", sim_all, "sweep every call choice and payload");
    sim->add_option("-o,--output", sim_out, "write run reports here");
    sim->add_option("--log", sim_log, "write message logs as JSON lines");
    sim->add_flag("--json", sim_opts.json_output, "machine-readable output");

    std::string code_task;
    int code_n = 0;
    bool code_json = false;
    bool code_generators = false;
    std::string code_out;
    auto* code = app.add_subcommand("code", "build the doubled-graph code and verify erasures");
    code->add_option("task", code_task, "task JSON file");
    code->add_option("-n", code_n, "build for the complete graph on n diamonds");
    code->add_flag("--json", code_json, "machine-readable output");
    code->add_flag("--generators", code_generators, "dump generators even when large");
    code->add_option("-o,--output", code_out, "write the JSON report here");

    CommonOpts diagram_opts;
    std::string diagram_out;
    bool diagram_graph = false;
    bool diagram_doubled = false;
    auto* diagram = app.add_subcommand("diagram", "render SVG diagrams or DOT graphs");
    diagram->add_option("task", diagram_opts.task_path, "task JSON file")->required();
    diagram->add_option("-o,--output", diagram_out, "output file ('-' for stdout)");
    diagram->add_flag("--graph", diagram_graph, "emit the causal graph G as DOT");
    diagram->add_flag("--doubled-graph", diagram_doubled, "emit G' as DOT");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(check_opts);
        if (plan->parsed()) return cmd_plan(plan_opts, plan_strategy, plan_out);
        if (sim->parsed()) {
            return cmd_simulate(sim_opts, sim_strategy, sim_call, sim_state, sim_seed,
                                sim_seeds, sim_all, sim_out, sim_log);
        }
        if (code->parsed()) {
            if (code_task.empty() && code_n <= 0) {
                std::cerr << "error: code needs a task file or -n\n";
                return kExitError;
            }
            return cmd_code(code_task, code_n, code_json, code_generators, code_out);
        }
        if (diagram->parsed()) {
            return cmd_diagram(diagram_opts, diagram_out, diagram_graph, diagram_doubled);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
