#include "mqsat/harness/report_json.hpp"

#include <sstream>

namespace mqsat::harness {

using nlohmann::json;

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << v;
  return s.str();
}

}  // namespace

json to_json(const psys::SchedulerPolicy& policy) {
  json j{{"mode", std::string(psys::to_string(policy.mode))}};
  if (policy.mode == psys::SchedulingMode::SeededRandom) j["seed"] = policy.seed;
  return j;
}

json to_json(const psys::Verdict& v) {
  return {{"outcome", std::string(psys::to_string(v.outcome))},
          {"steps", v.steps},
          {"emission_step", v.emission_step ? json(*v.emission_step) : json(nullptr)}};
}

json to_json(const PhaseReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"step", v.step}, {"kind", v.kind}, {"detail", v.detail}});
  }
  return {{"generation_complete",
           r.generation_complete ? json(*r.generation_complete) : json(nullptr)},
          {"elementary_membranes", r.elementary_membranes},
          {"depth", r.depth},
          {"violations", std::move(violations)}};
}

json to_json(const RunReport& r) {
  json j{{"digest", hex(r.digest)},
         {"n", r.n},
         {"padded_n", r.padded_n},
         {"m", r.m},
         {"verdict", to_json(r.verdict)},
         {"oracle", r.oracle},
         {"agrees", r.agrees},
         {"max_membranes", r.max_membranes},
         {"depth", r.depth},
         {"psi", r.psi},
         {"rules", r.rules},
         {"policy", to_json(r.policy)}};
  if (r.phases) j["phases"] = to_json(*r.phases);
  return j;
}

json to_json(const SweepReport& r, bool with_runs) {
  json j{{"n", r.n},
         {"count", r.count},
         {"agreements", r.agreements},
         {"agreement_rate", r.agreement_rate},
         {"timeouts", r.timeouts},
         {"malformed", r.malformed},
         {"steps", {{"min", r.steps_min}, {"median", r.steps_median}, {"max", r.steps_max}}},
         {"max_membranes", r.max_membranes},
         {"elapsed_ms", r.elapsed_ms},
         {"policy", to_json(r.policy)}};
  if (with_runs) {
    json runs = json::array();
    for (const auto& run : r.runs) runs.push_back(to_json(run));
    j["runs"] = std::move(runs);
  }
  return j;
}

json to_json(const ConfluenceReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    json e{{"policy", to_json(run.policy)},
           {"verdict", to_json(run.verdict)},
           {"agrees", run.agrees},
           {"phase_violations", run.phase_violations}};
    if (run.archived) e["archived"] = *run.archived;
    runs.push_back(std::move(e));
  }
  return {{"digest", hex(r.digest)},
          {"oracle", r.oracle},
          {"verdicts_equal", r.verdicts_equal},
          {"agreements", r.agreements},
          {"runs", std::move(runs)}};
}

}  // namespace mqsat::harness
