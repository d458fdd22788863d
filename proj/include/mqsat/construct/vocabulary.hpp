#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqsat/psys/charge.hpp"
#include "mqsat/psys/rule.hpp"

namespace mqsat::construct {

/// Size parameters of the family member for a padded n.
struct Layout {
  int n = 0;
  int k = 0;
  int l = 0;
  /// 2^k: children per non-elementary membrane, values of a block.
  int branching = 0;
  /// 8*C(n,3): every clause the input could mention.
  std::uint64_t clause_space = 0;
  /// Countdown length of descending assignment objects.
  int delay = 0;

  /// Largest sentinel countdown, reached when every possible clause is present.
  std::int64_t sentinel_max() const {
    return static_cast<std::int64_t>(clause_space) + l - 2;
  }
  psys::Label elementary_label() const { return static_cast<psys::Label>(l + 1); }
  /// Membrane label holding the variable (labels 2..l+1).
  psys::Label label_of(int i) const { return static_cast<psys::Label>((i - 1) / k + 2); }
  std::vector<std::string> block_values() const;
};

/// Throws std::invalid_argument unless n >= 4 and n is block-divisible.
/// A negative delay selects the default, k.
Layout make_layout(int n, int delay = -1);

namespace sym {
std::string x(int i);
std::string Q(int j, const std::string& block);
std::string C(std::uint64_t clause);
std::string T(std::int64_t t);
inline const std::string junk = "#";
/// t(i,t) / f(i,t): assignment object still counting down.
std::string delayed(bool value, int i, int t);
/// t(i) / f(i).
std::string value(bool value, int i);
inline const std::string end = "end";
inline const std::string sat_pending = "sat'";
inline const std::string sat = "sat";
/// yes(r,c) / no(r,c).
std::string result(bool yes, int r, std::int64_t c);
inline const std::string spade = "spade";
inline const std::string yes = "yes";
inline const std::string no = "no";
}  // namespace sym

namespace chg {
inline psys::ChargeValue neutral() { return psys::ChargeValue::neutral(); }
inline psys::ChargeValue junk() { return psys::ChargeValue{std::string("#")}; }
inline psys::ChargeValue placed(const std::string& block) {
  return {block, std::int64_t{0}};
}
inline psys::ChargeValue eval(const std::string& block, int r, std::int64_t c, std::int64_t p) {
  return {block, std::int64_t{r}, c, p};
}
inline psys::ChargeValue eval_holding(const std::string& block, int r, std::int64_t c,
                                      std::int64_t p, bool yes) {
  return {block, std::int64_t{r}, c, p, std::string(yes ? "yes" : "no")};
}
inline psys::ChargeValue countdown(std::int64_t c, std::int64_t p) { return {c, p}; }
/// ("t3",p) after t(3) left the elementary membrane.
psys::ChargeValue reading(bool value, int i, std::int64_t p);
inline psys::ChargeValue ended(std::int64_t p) { return {std::string("end"), p}; }

/// The sibling identifier p carried by a charge, if it has one.
std::optional<std::int64_t> identifier(const psys::ChargeValue& charge);
/// (c,p) countdown charges of elementary membranes: returns c.
std::optional<std::int64_t> remaining(const psys::ChargeValue& charge);
}  // namespace chg

}  // namespace mqsat::construct
