#pragma once

#include <cstdint>
#include <vector>

#include "mqsat/harness/verify.hpp"

namespace mqsat::harness {

struct SweepReport {
  int n = 0;
  std::size_t count = 0;
  std::size_t agreements = 0;
  double agreement_rate = 0.0;
  std::size_t timeouts = 0;
  std::size_t malformed = 0;
  std::uint64_t steps_min = 0;
  std::uint64_t steps_median = 0;
  std::uint64_t steps_max = 0;
  std::size_t max_membranes = 0;
  double elapsed_ms = 0.0;
  psys::SchedulerPolicy policy;
  /// Per-instance reports, ordered by instance index.
  std::vector<RunReport> runs;
};

struct SweepOptions {
  std::uint64_t base_seed = 0;
  psys::SchedulerPolicy policy;
  VerifyOptions verify;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
};

/// Verifies `count` random instances over n variables. Instance i uses
/// instance_seed(base_seed, i). Throws std::invalid_argument if count == 0.
SweepReport sweep(int n, std::size_t count, const SweepOptions& options = {});

/// Verifies a fixed list of instances in parallel, results in input order.
std::vector<RunReport> verify_all(const std::vector<qbf::QbfInstance>& instances,
                                  const psys::SchedulerPolicy& policy, const VerifyOptions& verify,
                                  unsigned jobs, BlueprintCache& cache);

SweepReport summarize(int n, std::vector<RunReport> runs, const psys::SchedulerPolicy& policy,
                      double elapsed_ms);

}  // namespace mqsat::harness
