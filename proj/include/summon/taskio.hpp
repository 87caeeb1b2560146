#pragma once

#include "summon/codes.hpp"
#include "summon/feasibility.hpp"
#include "summon/protocol.hpp"

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

namespace summon {

/// Task file problems carry the offending field path.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kTaskSchemaVersion = 1;
inline constexpr int kPlanSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

/// Parse a version-1 task file. Coordinates are decimal or rational
/// strings (or plain JSON integers) converted exactly; unknown fields are
/// rejected. Throws ParseError with field context.
SummoningTask parse_task(const nlohmann::json& doc);
SummoningTask parse_task_text(const std::string& text);
SummoningTask load_task_file(const std::string& path);

nlohmann::json task_to_json(const SummoningTask& task);

nlohmann::json verdict_to_json(const Verdict& verdict);
nlohmann::json violations_to_json(const std::vector<TaskViolation>& violations);

nlohmann::json plan_to_json(const ProtocolPlan& plan);
ProtocolPlan plan_from_json(const nlohmann::json& doc);

nlohmann::json recursive_plan_to_json(const RecursivePlan& plan);

nlohmann::json report_to_json(const SimReport& report);

nlohmann::json code_report_to_json(const CodeReport& report);

}  // namespace summon
