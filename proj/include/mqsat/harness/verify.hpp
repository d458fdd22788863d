#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mqsat/construct/blueprint.hpp"
#include "mqsat/harness/phase_check.hpp"
#include "mqsat/psys/engine.hpp"
#include "mqsat/qbf/qbf.hpp"

namespace mqsat::harness {

/// Random prefix and 1..3n distinct clauses (capped by the clause space),
/// drawn from mt19937_64 seeded with `seed`.
qbf::QbfInstance random_instance(int n, std::uint64_t seed);

/// Seed of instance `index` in a corpus rooted at `base_seed`.
std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index);

/// Every prefix over 4 variables combined with every subset of at most
/// three clauses from a fixed six-clause pool: 16 * 42 = 672 instances.
std::vector<qbf::QbfInstance> exhaustive_small_corpus();

/// Thread-safe memo of built systems keyed by (padded n, delay).
class BlueprintCache {
 public:
  std::shared_ptr<const construct::Blueprint> get(int n, int delay = -1);

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const construct::Blueprint>> cache_;
};

struct VerifyOptions {
  std::uint64_t max_steps = 1'000'000;
  bool record_trace = false;
  bool check_phases = false;
  /// Descent delay; negative selects k.
  int delay = -1;
};

struct RunReport {
  std::uint64_t digest = 0;
  int n = 0;
  int padded_n = 0;
  std::size_t m = 0;
  psys::Verdict verdict;
  bool oracle = false;
  bool agrees = false;
  std::size_t max_membranes = 0;
  std::size_t depth = 0;
  std::size_t psi = 0;
  std::size_t rules = 0;
  psys::SchedulerPolicy policy;
  std::optional<psys::Trace> trace;
  std::optional<PhaseReport> phases;
};

/// FNV-1a digest of the instance's bitstring encoding.
std::uint64_t instance_digest(const qbf::QbfInstance& instance);

/// Pads, compiles, runs and compares with oracle_eval. Timeout and
/// malformed runs are reported with agrees = false.
RunReport verify_instance(const qbf::QbfInstance& instance, const psys::SchedulerPolicy& policy,
                          const VerifyOptions& options = {}, BlueprintCache* cache = nullptr);

/// The compiled initial configuration and its system.
struct Compiled {
  std::shared_ptr<const construct::Blueprint> blueprint;
  qbf::QbfInstance padded;
  psys::Configuration initial;
};
Compiled compile(const qbf::QbfInstance& instance, int delay = -1, BlueprintCache* cache = nullptr);

}  // namespace mqsat::harness
