#include "mqsat/psys/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqsat::psys {

Configuration::Configuration(Label skin_label, ChargeId skin_charge) {
  Membrane skin;
  skin.id = 0;
  skin.label = skin_label;
  skin.charge = skin_charge;
  membranes_.push_back(std::move(skin));
}

MembraneId Configuration::add_membrane(MembraneId parent, Label label, ChargeId charge) {
  if (parent >= membranes_.size()) throw std::out_of_range("unknown parent membrane");
  Membrane m;
  m.id = static_cast<MembraneId>(membranes_.size());
  m.label = label;
  m.charge = charge;
  m.parent = parent;
  membranes_.push_back(std::move(m));
  membranes_[parent].children.push_back(membranes_.back().id);
  return membranes_.back().id;
}

std::size_t Configuration::level(MembraneId id) const {
  std::size_t lvl = 1;
  for (auto p = at(id).parent; p; p = at(*p).parent) ++lvl;
  return lvl;
}

MembraneId Configuration::clone_into(MembraneId source, std::optional<MembraneId> parent) {
  const auto id = static_cast<MembraneId>(membranes_.size());
  {
    Membrane copy = membranes_[source];
    copy.id = id;
    copy.parent = parent;
    copy.children.clear();
    membranes_.push_back(std::move(copy));
  }
  // membranes_ may reallocate inside the loop; index, never hold references.
  const std::vector<MembraneId> kids = membranes_[source].children;
  for (MembraneId child : kids) {
    const MembraneId c = clone_into(child, id);
    membranes_[id].children.push_back(c);
  }
  return id;
}

MembraneId Configuration::clone_subtree(MembraneId id) {
  const auto parent = at(id).parent;
  if (!parent) throw std::logic_error("the skin membrane cannot be replicated");
  const MembraneId copy = clone_into(id, parent);
  auto& siblings = membranes_[*parent].children;
  auto pos = std::find(siblings.begin(), siblings.end(), id);
  siblings.insert(pos + 1, copy);
  return copy;
}

std::size_t depth(const Configuration& config) {
  std::size_t best = 0;
  std::vector<std::pair<MembraneId, std::size_t>> stack{{Configuration::skin_id(), 1}};
  while (!stack.empty()) {
    auto [id, lvl] = stack.back();
    stack.pop_back();
    best = std::max(best, lvl);
    for (MembraneId c : config.at(id).children) stack.emplace_back(c, lvl + 1);
  }
  return best;
}

std::size_t count_membranes(const Configuration& config, Label label) {
  return static_cast<std::size_t>(
      std::count_if(config.membranes().begin(), config.membranes().end(),
                    [label](const Membrane& m) { return m.label == label; }));
}

std::size_t membrane_total(const Configuration& config) { return config.size(); }

}  // namespace mqsat::psys
