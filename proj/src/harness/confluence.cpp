#include "mqsat/harness/confluence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mqsat/harness/report_json.hpp"
#include "mqsat/psys/trace_io.hpp"

namespace mqsat::harness {

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

std::string archive(const std::filesystem::path& dir, const qbf::QbfInstance& instance,
                    const RunReport& run, const psys::SymbolTable& symbols) {
  std::filesystem::create_directories(dir);
  const auto path = dir / ("counterexample-" + hex(run.digest) + "-seed" +
                           std::to_string(run.policy.seed) + ".json");
  nlohmann::json bundle = to_json(run);
  bundle["instance"] = qbf::to_qdimacs(instance);
  bundle["bits"] = qbf::encode(instance);
  bundle["seed"] = run.policy.seed;
  bundle["trace"] = run.trace ? psys::to_jsonl(*run.trace, symbols) : std::string();
  std::ofstream out(path);
  out << bundle.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return path.string();
}

}  // namespace

ConfluenceReport confluence_probe(const qbf::QbfInstance& instance,
                                  std::span<const std::uint64_t> seeds, const ProbeOptions& options,
                                  BlueprintCache* cache) {
  if (seeds.size() < 2) throw std::invalid_argument("a confluence probe needs at least two seeds");
  BlueprintCache local;
  BlueprintCache& bc = cache ? *cache : local;
  VerifyOptions vo;
  vo.max_steps = options.max_steps;
  vo.check_phases = true;
  vo.record_trace = options.archive_dir.has_value();

  ConfluenceReport rep;
  rep.digest = instance_digest(instance);
  std::vector<psys::SchedulerPolicy> policies{psys::SchedulerPolicy::canonical()};
  for (auto s : seeds) policies.push_back(psys::SchedulerPolicy::random(s));
  for (const auto& policy : policies) {
    const RunReport r = verify_instance(instance, policy, vo, &bc);
    rep.oracle = r.oracle;
    ProbeRun pr;
    pr.policy = policy;
    pr.verdict = r.verdict;
    pr.agrees = r.agrees;
    pr.phase_violations = r.phases ? r.phases->violations.size() : 0;
    const bool suspicious = !r.agrees || (r.phases && !r.phases->ok());
    if (suspicious && policy.mode == psys::SchedulingMode::SeededRandom && options.archive_dir) {
      const auto bp = bc.get(r.padded_n, vo.delay);
      pr.archived = archive(*options.archive_dir, instance, r, bp->rules.symbols);
    }
    if (pr.agrees) ++rep.agreements;
    rep.runs.push_back(std::move(pr));
  }
  rep.verdicts_equal = true;
  for (const auto& r : rep.runs) {
    if (r.verdict.outcome != rep.runs.front().verdict.outcome) rep.verdicts_equal = false;
  }
  return rep;
}

}  // namespace mqsat::harness
