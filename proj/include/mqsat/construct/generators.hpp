#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mqsat/construct/vocabulary.hpp"
#include "mqsat/psys/rule.hpp"

namespace mqsat::construct {

inline constexpr int kFamilyCount = 27;

/// Appends ground rules to a RuleSet by symbol name and charge value,
/// interning both on first use and tagging each rule with the current family.
class RuleEmitter {
 public:
  explicit RuleEmitter(psys::RuleSet& rules) : rules_(rules) {}

  void set_family(int family) { family_ = family; }

  psys::SymbolId symbol(const std::string& name) { return rules_.symbols.intern(name); }
  psys::ChargeId charge(const psys::ChargeValue& value) { return rules_.charges.intern(value); }

  void evolve(psys::Label h, const psys::ChargeValue& pre, const std::string& a,
              const std::vector<std::pair<std::string, psys::Count>>& w);
  void send_in(psys::Label h, const psys::ChargeValue& pre, const std::string& a,
               const std::string& b, const psys::ChargeValue& post);
  void send_out(psys::Label h, const psys::ChargeValue& pre, const std::string& a,
                const std::string& b, const psys::ChargeValue& post);
  void divide(psys::RuleKind kind, psys::Label h, const psys::ChargeValue& pre,
              const std::string& a, const std::string& b, const psys::ChargeValue& beta,
              const std::string& c, const psys::ChargeValue& gamma);

 private:
  psys::RuleSet& rules_;
  int family_ = 0;
};

// Each generator emits the families named in its comment, in order.

/// Families 1-3: block objects reach their membranes and set its charge.
void gen_quantifier_placement(const Layout& lay, RuleEmitter& out);
/// Families 4-7: clauses travel to the elementary membrane, followed by the
/// sentinel that switches each level into division mode.
void gen_clause_distribution(const Layout& lay, RuleEmitter& out);
/// Families 8-9: weak and elementary division on the block variables.
void gen_division(const Layout& lay, RuleEmitter& out);
/// Families 10-13: delayed duplication and descent of assignment objects.
void gen_descent(const Layout& lay, RuleEmitter& out);
/// Families 14-21: reading the assignment and testing every clause.
void gen_assignment_eval(const Layout& lay, RuleEmitter& out);
/// Families 22-27: sequential quantifier evaluation inside each membrane.
void gen_quantifier_eval(const Layout& lay, RuleEmitter& out);

}  // namespace mqsat::construct
