#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mqsat/harness/verify.hpp"

namespace mqsat::harness {

struct ProbeRun {
  psys::SchedulerPolicy policy;
  psys::Verdict verdict;
  bool agrees = false;
  std::size_t phase_violations = 0;
  /// Path of the archived bundle, if this run was a counterexample.
  std::optional<std::string> archived;
};

struct ConfluenceReport {
  std::uint64_t digest = 0;
  bool oracle = false;
  /// Canonical run first, then one per seed in the given order.
  std::vector<ProbeRun> runs;
  /// Every run produced the same verdict.
  bool verdicts_equal = false;
  std::size_t agreements = 0;
};

struct ProbeOptions {
  std::uint64_t max_steps = 1'000'000;
  /// Where counterexample bundles go; nothing is written when empty.
  std::optional<std::filesystem::path> archive_dir;
};

/// Runs the instance under the canonical policy and under the seeded
/// random policy for each seed. A random run whose verdict disagrees with
/// the oracle, or whose generation phase breaks an invariant, is archived
/// as a bundle of instance text, seed and trace. Throws
/// std::invalid_argument for fewer than two seeds.
ConfluenceReport confluence_probe(const qbf::QbfInstance& instance,
                                  std::span<const std::uint64_t> seeds,
                                  const ProbeOptions& options = {},
                                  BlueprintCache* cache = nullptr);

}  // namespace mqsat::harness
