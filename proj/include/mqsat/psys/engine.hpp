#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mqsat/psys/configuration.hpp"
#include "mqsat/psys/rule.hpp"

namespace mqsat::psys {

/// One applicable (rule, membrane) pair. `region` is where the subject is
/// consumed from: the parent for send-in, the membrane itself otherwise.
/// `capacity` is how many times it could fire in isolation.
struct Instance {
  RuleId rule = 0;
  MembraneId membrane = 0;
  MembraneId region = 0;
  SymbolId subject = 0;
  Count capacity = 0;

  auto operator<=>(const Instance&) const = default;
};

struct Application {
  RuleId rule = 0;
  MembraneId membrane = 0;
  Count multiplicity = 0;

  bool operator==(const Application&) const = default;
};

/// The rule instances chosen for one step, ordered by (membrane, rule).
struct RuleAssignment {
  std::vector<Application> applications;
  bool operator==(const RuleAssignment&) const = default;
};

enum class SchedulingMode : std::uint8_t { Canonical, SeededRandom };

struct SchedulerPolicy {
  SchedulingMode mode = SchedulingMode::Canonical;
  std::uint64_t seed = 0;

  static SchedulerPolicy canonical() { return {}; }
  static SchedulerPolicy random(std::uint64_t seed) { return {SchedulingMode::SeededRandom, seed}; }
  bool operator==(const SchedulerPolicy&) const = default;
};

std::string_view to_string(SchedulingMode mode);

struct StepEvent {
  std::uint64_t step = 0;
  MembraneId membrane = 0;
  RuleId rule = 0;
  Count multiplicity = 0;
  /// Id of the second membrane produced, for division events.
  std::optional<MembraneId> copy;

  bool operator==(const StepEvent&) const = default;
};

/// An object sent out of the skin into the environment.
struct Emission {
  std::uint64_t step = 0;
  SymbolId symbol = 0;
  Count count = 0;
  bool operator==(const Emission&) const = default;
};

struct StepOutcome {
  std::vector<StepEvent> events;
  std::vector<Emission> emissions;
  /// Membranes whose region, charge or child list changed, including new ones.
  std::vector<MembraneId> touched;
};

struct Trace {
  std::vector<StepEvent> events;
  std::vector<Emission> emissions;
  bool operator==(const Trace&) const = default;
};

enum class Outcome : std::uint8_t { Yes, No, Timeout, MalformedRun };

std::string_view to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::MalformedRun;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> emission_step;
  bool operator==(const Verdict&) const = default;
};

/// All applicable instances, sorted by (rule, membrane). Throws
/// AlphabetError if a membrane carries a charge outside Ψ.
std::vector<Instance> applicable_instances(const Configuration& config, const RuleSet& rules);

/// Resolves a candidate list into a maximal assignment. Canonical mode
/// takes candidates in (rule, membrane) order; seeded-random mode fires one
/// copy at a time from a uniformly drawn viable candidate. The random
/// stream is derived from (seed, config.step()), so the result is a pure
/// function of its arguments.
RuleAssignment select_from(std::span<const Instance> candidates, const Configuration& config,
                           const RuleSet& rules, const SchedulerPolicy& policy);

RuleAssignment select_assignment(const Configuration& config, const RuleSet& rules,
                                 const SchedulerPolicy& policy);

/// Applies an assignment atomically: subjects are consumed from the
/// pre-step contents, then evolution products land, then communication,
/// then divisions bottom-up so copies replicate already-updated contents.
/// Throws std::logic_error for assignments violating the blocking or
/// object constraints.
StepOutcome apply_assignment(Configuration& config, const RuleSet& rules,
                             const RuleAssignment& assignment);

/// Selects and applies one step. Precondition: some instance is applicable.
StepOutcome step(Configuration& config, const RuleSet& rules, const SchedulerPolicy& policy);

struct RunOptions {
  std::uint64_t max_steps = 1'000'000;
  bool record_trace = true;
  /// Called after every step with the post-step configuration.
  std::function<void(const Configuration&, const StepOutcome&)> observer;
};

struct RunResult {
  Verdict verdict;
  Trace trace;
  Configuration final;
  bool halted = false;
};

/// Steps until halting or `max_steps`, then classifies the run: Yes/No iff
/// exactly one yes/no object left the skin and it did so in the final step.
RunResult run(Configuration config, const RuleSet& rules, const SchedulerPolicy& policy,
              const RunOptions& options = {});

/// Groups trace events back into per-step assignments (index i = step i+1).
std::vector<RuleAssignment> assignments_from_trace(const Trace& trace, std::uint64_t steps);

}  // namespace mqsat::psys
