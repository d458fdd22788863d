#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mqsat/construct/blueprint.hpp"

namespace mqsat::construct {

nlohmann::json charge_to_json(const psys::ChargeValue& charge);
psys::ChargeValue charge_from_json(const nlohmann::json& j);

/// {"n","k","l","delay","psi","symbols","membranes","rules"}. The symbol
/// list fixes interning order so loading reproduces an equal Blueprint.
nlohmann::json blueprint_to_json(const Blueprint& blueprint);
/// Throws std::invalid_argument on structural errors.
Blueprint blueprint_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const psys::Multiset& contents, const psys::SymbolTable& symbols);

/// FNV-1a over a canonical rendering of the tree (labels, charges,
/// contents, nesting) and the environment.
std::uint64_t configuration_digest(const psys::Configuration& config, const psys::RuleSet& rules);

}  // namespace mqsat::construct
