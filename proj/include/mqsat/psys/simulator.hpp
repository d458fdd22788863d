#pragma once

#include <set>
#include <vector>

#include "mqsat/psys/engine.hpp"

namespace mqsat::psys {

/// Incremental stepper. Applicable instances are cached per membrane and
/// recomputed only for membranes touched by the previous step (and their
/// children, whose send-in candidates read the parent region), so a step
/// costs time proportional to activity rather than to tree size.
class Simulator {
 public:
  Simulator(Configuration config, const RuleSet& rules, SchedulerPolicy policy);

  /// Instances applicable now, sorted by (rule, membrane). Always equal to
  /// applicable_instances(configuration(), rules).
  const std::vector<Instance>& candidates();
  bool halted() { return candidates().empty(); }

  StepOutcome step();

  const Configuration& configuration() const { return config_; }
  Configuration release() && { return std::move(config_); }

 private:
  void mark_dirty(MembraneId id);
  void refresh();

  Configuration config_;
  const RuleSet* rules_;
  SchedulerPolicy policy_;
  std::vector<std::vector<Instance>> cache_;
  std::vector<MembraneId> dirty_;
  std::vector<char> dirty_flag_;
  std::set<MembraneId> active_;
  std::vector<Instance> candidates_;
  bool fresh_ = false;
};

}  // namespace mqsat::psys
