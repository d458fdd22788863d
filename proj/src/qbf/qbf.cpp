#include <algorithm>

#include "mqsat/qbf/qbf.hpp"

namespace mqsat::qbf {

Clause3 Clause3::from_literals(std::array<int, 3> literals) {
  std::array<std::pair<int, bool>, 3> lits{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (literals[i] == 0) throw std::invalid_argument("clause literal cannot be 0");
    lits[i] = {literals[i] < 0 ? -literals[i] : literals[i], literals[i] < 0};
  }
  std::sort(lits.begin(), lits.end());
  if (lits[0].first == lits[1].first || lits[1].first == lits[2].first) {
    throw std::invalid_argument("duplicate variable in clause");
  }
  Clause3 c;
  for (std::size_t i = 0; i < 3; ++i) {
    c.vars[i] = lits[i].first;
    c.negated[i] = lits[i].second;
  }
  return c;
}

std::array<int, 3> Clause3::literals() const {
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = negated[i] ? -vars[i] : vars[i];
  return out;
}

bool Clause3::satisfied_by(const Assignment& a) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.values[static_cast<std::size_t>(vars[i] - 1)] != negated[i]) return true;
  }
  return false;
}

QbfInstance::QbfInstance(std::vector<Quantifier> prefix, std::vector<Clause3> matrix)
    : prefix_(std::move(prefix)) {
  const int n = static_cast<int>(prefix_.size());
  if (n < 3) throw std::invalid_argument("a 3-CNF QBF needs at least 3 variables");
  for (const auto& c : matrix) {
    if (c.vars[0] < 1 || c.vars[2] > n || !(c.vars[0] < c.vars[1] && c.vars[1] < c.vars[2])) {
      throw std::invalid_argument("clause variable out of range or clause not normalized");
    }
  }
  std::vector<std::pair<std::uint64_t, Clause3>> keyed;
  keyed.reserve(matrix.size());
  for (const auto& c : matrix) keyed.emplace_back(clause_index(c, n), c);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  matrix_.reserve(keyed.size());
  for (const auto& kc : keyed) matrix_.push_back(kc.second);
}

char quantifier_char(Quantifier q) { return q == Quantifier::Universal ? 'A' : 'E'; }

}  // namespace mqsat::qbf
