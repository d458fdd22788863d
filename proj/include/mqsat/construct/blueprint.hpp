#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mqsat/construct/generators.hpp"
#include "mqsat/construct/vocabulary.hpp"
#include "mqsat/psys/configuration.hpp"
#include "mqsat/psys/rule.hpp"
#include "mqsat/qbf/qbf.hpp"

namespace mqsat::construct {

struct SkeletonMembrane {
  psys::Label label = 0;
  /// Index into Blueprint::membranes; empty for the skin.
  std::optional<std::size_t> parent;
  psys::Multiset contents;
  bool operator==(const SkeletonMembrane&) const = default;
};

/// The family member Π_n: membrane skeleton with its initial objects, the
/// charge alphabet and every ground rule. Depends on n and the delay only.
struct Blueprint {
  Layout layout;
  psys::RuleSet rules;
  std::vector<SkeletonMembrane> membranes;
  psys::Label input_label = 1;

  bool operator==(const Blueprint& other) const {
    return layout.n == other.layout.n && layout.delay == other.layout.delay &&
           rules == other.rules && membranes == other.membranes &&
           input_label == other.input_label;
  }
};

/// Builds Π_n for a block-divisible n >= 4. Rule ids follow family order.
Blueprint build_skeleton(int n, int delay = -1);

/// The input multiset w_x for a padded instance: one block object per
/// level, one clause object per clause (named by its global clause index),
/// and the sentinel whose countdown lets every clause pass each level
/// before the level switches to division. Throws std::invalid_argument on
/// an n mismatch.
psys::Multiset build_input(const qbf::QbfInstance& instance, const Blueprint& blueprint);

/// Skeleton plus input in the input membrane, all charges neutral.
psys::Configuration assemble(const Blueprint& blueprint, const psys::Multiset& input);

/// Rule count per family; index f holds family f (index 0 unused).
std::array<std::size_t, kFamilyCount + 1> family_sizes(const psys::RuleSet& rules);

}  // namespace mqsat::construct
