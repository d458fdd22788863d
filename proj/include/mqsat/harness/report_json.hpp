#pragma once

#include <nlohmann/json.hpp>

#include "mqsat/harness/confluence.hpp"
#include "mqsat/harness/phase_check.hpp"
#include "mqsat/harness/sweep.hpp"
#include "mqsat/harness/verify.hpp"

namespace mqsat::harness {

nlohmann::json to_json(const psys::SchedulerPolicy& policy);
nlohmann::json to_json(const psys::Verdict& verdict);
nlohmann::json to_json(const PhaseReport& report);
/// Omits the trace; traces are exported as JSON lines.
nlohmann::json to_json(const RunReport& report);
/// Summary only unless `with_runs`.
nlohmann::json to_json(const SweepReport& report, bool with_runs = false);
nlohmann::json to_json(const ConfluenceReport& report);

}  // namespace mqsat::harness
