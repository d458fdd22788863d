#include "mqsat/psys/rule.hpp"

#include <array>
#include <stdexcept>

namespace mqsat::psys {

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {
    "evolve", "send-in", "send-out", "divide-elementary", "divide-weak"};

const std::vector<RuleId> kNoRules;

}  // namespace

std::string_view to_string(RuleKind kind) { return kKindNames.at(static_cast<std::size_t>(kind)); }

std::optional<RuleKind> rule_kind_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<RuleKind>(i);
  }
  return std::nullopt;
}

std::uint64_t RuleSet::key(Label h, ChargeId alpha, SymbolId a) {
  if (h >= (1u << 16) || alpha >= (1u << 24) || a >= (1u << 24)) {
    throw std::length_error("rule index key out of range");
  }
  return (std::uint64_t{h} << 48) | (std::uint64_t{alpha} << 24) | std::uint64_t{a};
}

RuleId RuleSet::add(Rule rule) {
  if (!charges.contains(rule.pre) || !charges.contains(rule.first.charge) ||
      (is_division(rule.kind) && !charges.contains(rule.second.charge))) {
    throw AlphabetError("rule mentions a charge outside the declared alphabet");
  }
  if (rule.subject >= symbols.size()) throw std::out_of_range("rule subject is not interned");
  rule.id = static_cast<RuleId>(rules_.size());
  const auto k = key(rule.label, rule.pre, rule.subject);
  (rule.kind == RuleKind::SendIn ? inbound_ : local_)[k].push_back(rule.id);
  rules_.push_back(std::move(rule));
  return rules_.back().id;
}

RuleId RuleSet::add_evolve(Label h, ChargeId alpha, SymbolId a, Multiset w, int family) {
  Rule r;
  r.kind = RuleKind::Evolve;
  r.label = h;
  r.pre = alpha;
  r.subject = a;
  r.products = std::move(w);
  r.first.charge = alpha;
  r.family = family;
  return add(std::move(r));
}

RuleId RuleSet::add_send_in(Label h, ChargeId alpha, SymbolId a, SymbolId b, ChargeId beta,
                            int family) {
  Rule r;
  r.kind = RuleKind::SendIn;
  r.label = h;
  r.pre = alpha;
  r.subject = a;
  r.first = {b, beta};
  r.family = family;
  return add(std::move(r));
}

RuleId RuleSet::add_send_out(Label h, ChargeId alpha, SymbolId a, SymbolId b, ChargeId beta,
                             int family) {
  Rule r;
  r.kind = RuleKind::SendOut;
  r.label = h;
  r.pre = alpha;
  r.subject = a;
  r.first = {b, beta};
  r.family = family;
  return add(std::move(r));
}

RuleId RuleSet::add_divide(RuleKind kind, Label h, ChargeId alpha, SymbolId a, Product first,
                           Product second, int family) {
  if (!is_division(kind)) throw std::invalid_argument("add_divide needs a division kind");
  Rule r;
  r.kind = kind;
  r.label = h;
  r.pre = alpha;
  r.subject = a;
  r.first = first;
  r.second = second;
  r.family = family;
  return add(std::move(r));
}

const std::vector<RuleId>& RuleSet::local_rules(Label h, ChargeId alpha, SymbolId a) const {
  auto it = local_.find(key(h, alpha, a));
  return it == local_.end() ? kNoRules : it->second;
}

const std::vector<RuleId>& RuleSet::inbound_rules(Label h, ChargeId alpha, SymbolId a) const {
  auto it = inbound_.find(key(h, alpha, a));
  return it == inbound_.end() ? kNoRules : it->second;
}

}  // namespace mqsat::psys
