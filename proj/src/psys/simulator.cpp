#include "mqsat/psys/simulator.hpp"

#include <algorithm>

namespace mqsat::psys {

namespace detail {
void collect_instances(const Configuration& config, const RuleSet& rules, MembraneId id,
                       std::vector<Instance>& out);
}

Simulator::Simulator(Configuration config, const RuleSet& rules, SchedulerPolicy policy)
    : config_(std::move(config)), rules_(&rules), policy_(policy) {
  for (const auto& m : config_.membranes()) mark_dirty(m.id);
}

void Simulator::mark_dirty(MembraneId id) {
  if (id >= dirty_flag_.size()) {
    dirty_flag_.resize(id + 1, 0);
    cache_.resize(id + 1);
  }
  if (!dirty_flag_[id]) {
    dirty_flag_[id] = 1;
    dirty_.push_back(id);
  }
  fresh_ = false;
}

void Simulator::refresh() {
  if (fresh_) return;
  for (MembraneId id : dirty_) {
    auto& slot = cache_[id];
    slot.clear();
    detail::collect_instances(config_, *rules_, id, slot);
    if (slot.empty()) {
      active_.erase(id);
    } else {
      active_.insert(id);
    }
    dirty_flag_[id] = 0;
  }
  dirty_.clear();
  candidates_.clear();
  for (MembraneId id : active_) {
    candidates_.insert(candidates_.end(), cache_[id].begin(), cache_[id].end());
  }
  std::sort(candidates_.begin(), candidates_.end());
  fresh_ = true;
}

const std::vector<Instance>& Simulator::candidates() {
  refresh();
  return candidates_;
}

StepOutcome Simulator::step() {
  refresh();
  const RuleAssignment chosen = select_from(candidates_, config_, *rules_, policy_);
  StepOutcome out = apply_assignment(config_, *rules_, chosen);
  for (MembraneId id : out.touched) {
    mark_dirty(id);
    for (MembraneId child : config_.at(id).children) mark_dirty(child);
  }
  fresh_ = false;
  return out;
}

}  // namespace mqsat::psys
