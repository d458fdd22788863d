#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mqsat/psys/charge.hpp"
#include "mqsat/psys/multiset.hpp"
#include "mqsat/psys/rule.hpp"

namespace mqsat::psys {

using MembraneId = std::uint32_t;

struct Membrane {
  MembraneId id = 0;
  Label label = 0;
  ChargeId charge = 0;
  std::optional<MembraneId> parent;
  std::vector<MembraneId> children;
  Multiset contents;

  bool elementary() const { return children.empty(); }
  bool operator==(const Membrane&) const = default;
};

/// Membrane tree stored flat by id, plus the environment and the step
/// counter. The skin is always id 0. Ids are never reused; division allocates fresh ones.
class Configuration {
 public:
  Configuration() = default;
  Configuration(Label skin_label, ChargeId skin_charge);

  MembraneId add_membrane(MembraneId parent, Label label, ChargeId charge);

  static constexpr MembraneId skin_id() { return 0; }
  const Membrane& skin() const { return membranes_.front(); }

  Membrane& at(MembraneId id) { return membranes_.at(id); }
  const Membrane& at(MembraneId id) const { return membranes_.at(id); }
  const std::vector<Membrane>& membranes() const { return membranes_; }
  std::size_t size() const { return membranes_.size(); }

  Multiset& environment() { return environment_; }
  const Multiset& environment() const { return environment_; }

  std::uint64_t step() const { return step_; }
  void set_step(std::uint64_t step) { step_ = step; }

  /// Nesting level of a membrane; the skin is level 1.
  std::size_t level(MembraneId id) const;

  /// Deep-copies the subtree rooted at `id` as a new sibling placed right
  /// after it. Returns the id of the copy; fresh ids follow preorder.
  MembraneId clone_subtree(MembraneId id);

  bool operator==(const Configuration&) const = default;

 private:
  MembraneId clone_into(MembraneId source, std::optional<MembraneId> parent);

  std::vector<Membrane> membranes_;
  Multiset environment_;
  std::uint64_t step_ = 0;
};

/// Number of membrane levels (skin = 1).
std::size_t depth(const Configuration& config);
std::size_t count_membranes(const Configuration& config, Label label);
std::size_t membrane_total(const Configuration& config);

}  // namespace mqsat::psys
