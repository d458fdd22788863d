#include "mqsat/construct/vocabulary.hpp"

#include <stdexcept>

#include "mqsat/construct/blocks.hpp"
#include "mqsat/qbf/qbf.hpp"

namespace mqsat::construct {

std::vector<std::string> Layout::block_values() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(branching));
  for (int v = 0; v < branching; ++v) out.push_back(block_string(static_cast<std::uint32_t>(v), k));
  return out;
}

Layout make_layout(int n, int delay) {
  if (n < 4) throw std::invalid_argument("the construction needs n >= 4 (pad smaller instances)");
  Layout lay;
  lay.n = n;
  lay.k = ceil_log2(n);
  if (n % lay.k != 0) {
    throw std::invalid_argument("n = " + std::to_string(n) + " is not divisible by k = " +
                                std::to_string(lay.k));
  }
  lay.l = n / lay.k;
  lay.branching = 1 << lay.k;
  lay.clause_space = qbf::clause_space(n);
  lay.delay = delay < 0 ? lay.k : delay;
  return lay;
}

namespace sym {

std::string x(int i) { return "x(" + std::to_string(i) + ")"; }
std::string Q(int j, const std::string& block) { return "Q(" + std::to_string(j) + "," + block + ")"; }
std::string C(std::uint64_t clause) { return "C(" + std::to_string(clause) + ")"; }
std::string T(std::int64_t t) { return "T(" + std::to_string(t) + ")"; }
std::string delayed(bool value, int i, int t) {
  return std::string(value ? "t(" : "f(") + std::to_string(i) + "," + std::to_string(t) + ")";
}
std::string value(bool value, int i) {
  return std::string(value ? "t(" : "f(") + std::to_string(i) + ")";
}
std::string result(bool yes, int r, std::int64_t c) {
  return std::string(yes ? "yes(" : "no(") + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace sym

namespace chg {

psys::ChargeValue reading(bool value, int i, std::int64_t p) {
  return {std::string(value ? "t" : "f") + std::to_string(i), p};
}

std::optional<std::int64_t> identifier(const psys::ChargeValue& charge) {
  const auto arity = charge.arity();
  if (arity == 4 || arity == 5) return charge.integer(3);
  if (arity != 2) return std::nullopt;
  if (charge.integer(0)) return charge.integer(1);
  const auto head = charge.atom(0);
  if (!head || head->empty()) return std::nullopt;
  // ("EA",0) records a placed block and carries no identifier.
  if ((*head)[0] == 'E' || (*head)[0] == 'A') return std::nullopt;
  return charge.integer(1);
}

std::optional<std::int64_t> remaining(const psys::ChargeValue& charge) {
  if (charge.arity() != 2) return std::nullopt;
  return charge.integer(0);
}

}  // namespace chg

}  // namespace mqsat::construct
