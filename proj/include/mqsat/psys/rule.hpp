#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mqsat/psys/charge.hpp"
#include "mqsat/psys/multiset.hpp"
#include "mqsat/psys/symbol.hpp"

namespace mqsat::psys {

using Label = std::uint32_t;
using RuleId = std::uint32_t;

enum class RuleKind : std::uint8_t {
  Evolve,            // [a -> w]_h^α
  SendIn,            // a [ ]_h^α -> [b]_h^β
  SendOut,           // [a]_h^α -> [ ]_h^β b
  DivideElementary,  // [a]_h^α -> [b]_h^β [c]_h^γ, childless membranes only
  DivideWeak,        // same shape, replicates inner substructures
};

std::string_view to_string(RuleKind kind);
std::optional<RuleKind> rule_kind_from_string(std::string_view text);

/// Every kind except Evolve occupies its membrane for the whole step.
constexpr bool is_blocking(RuleKind kind) { return kind != RuleKind::Evolve; }
constexpr bool is_division(RuleKind kind) {
  return kind == RuleKind::DivideElementary || kind == RuleKind::DivideWeak;
}

struct Product {
  SymbolId object = 0;
  ChargeId charge = 0;
  bool operator==(const Product&) const = default;
};

struct Rule {
  RuleId id = 0;
  RuleKind kind = RuleKind::Evolve;
  Label label = 0;
  ChargeId pre = 0;
  SymbolId subject = 0;
  /// Evolve only.
  Multiset products;
  /// (b, β) for communication and divisions.
  Product first;
  /// (c, γ) for divisions.
  Product second;
  /// Provenance tag carried through serialization; ignored by the engine.
  int family = 0;

  bool operator==(const Rule&) const = default;
};

/// Symbols, declared charges and ground rules of one P system, with a
/// lookup index keyed by (label, charge, subject). Rule ids are
/// declaration order, which the canonical scheduler uses as priority.
class RuleSet {
 public:
  SymbolTable symbols;
  ChargeAlphabet charges;

  RuleId add(Rule rule);

  RuleId add_evolve(Label h, ChargeId alpha, SymbolId a, Multiset w, int family = 0);
  RuleId add_send_in(Label h, ChargeId alpha, SymbolId a, SymbolId b, ChargeId beta,
                     int family = 0);
  RuleId add_send_out(Label h, ChargeId alpha, SymbolId a, SymbolId b, ChargeId beta,
                      int family = 0);
  RuleId add_divide(RuleKind kind, Label h, ChargeId alpha, SymbolId a, Product first,
                    Product second, int family = 0);

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(RuleId id) const { return rules_.at(id); }
  std::size_t size() const { return rules_.size(); }

  /// Rules whose subject lives in the membrane's own region (everything but
  /// send-in), ascending by id.
  const std::vector<RuleId>& local_rules(Label h, ChargeId alpha, SymbolId a) const;
  /// Send-in rules targeting a membrane with this label and charge whose
  /// subject sits in the parent region, ascending by id.
  const std::vector<RuleId>& inbound_rules(Label h, ChargeId alpha, SymbolId a) const;

  bool operator==(const RuleSet& other) const {
    return symbols == other.symbols && charges == other.charges && rules_ == other.rules_;
  }

 private:
  static std::uint64_t key(Label h, ChargeId alpha, SymbolId a);

  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, std::vector<RuleId>> local_;
  std::unordered_map<std::uint64_t, std::vector<RuleId>> inbound_;
};

}  // namespace mqsat::psys
