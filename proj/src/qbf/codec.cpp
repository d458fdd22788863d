#include "mqsat/qbf/qbf.hpp"

namespace mqsat::qbf {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t clause_space(int n) { return 8 * binomial(static_cast<std::uint64_t>(n), 3); }

namespace {

// Lexicographic rank of a <b <c among increasing triples over 1..n.
std::uint64_t triple_rank(int a, int b, int c, int n) {
  std::uint64_t rank = 0;
  for (int x = 1; x < a; ++x) rank += binomial(static_cast<std::uint64_t>(n - x), 2);
  for (int y = a + 1; y < b; ++y) rank += static_cast<std::uint64_t>(n - y);
  return rank + static_cast<std::uint64_t>(c - b - 1);
}

}  // namespace

std::uint64_t clause_index(const Clause3& clause, int n) {
  const auto& v = clause.vars;
  const std::uint64_t signs = (clause.negated[0] ? 4u : 0u) | (clause.negated[1] ? 2u : 0u) |
                              (clause.negated[2] ? 1u : 0u);
  return 8 * triple_rank(v[0], v[1], v[2], n) + signs;
}

Clause3 clause_at(std::uint64_t index, int n) {
  if (index >= clause_space(n)) throw std::out_of_range("clause index out of range");
  std::uint64_t rank = index / 8;
  const std::uint64_t signs = index % 8;
  int a = 1;
  while (rank >= binomial(static_cast<std::uint64_t>(n - a), 2)) {
    rank -= binomial(static_cast<std::uint64_t>(n - a), 2);
    ++a;
  }
  int b = a + 1;
  while (rank >= static_cast<std::uint64_t>(n - b)) {
    rank -= static_cast<std::uint64_t>(n - b);
    ++b;
  }
  const int c = b + 1 + static_cast<int>(rank);
  Clause3 out;
  out.vars = {a, b, c};
  out.negated = {(signs & 4u) != 0, (signs & 2u) != 0, (signs & 1u) != 0};
  return out;
}

std::string encode(const QbfInstance& instance) {
  const int n = instance.n();
  const std::uint64_t space = clause_space(n);
  std::string bits(space + static_cast<std::uint64_t>(n), '0');
  for (const auto& c : instance.matrix()) bits[clause_index(c, n)] = '1';
  for (int i = 0; i < n; ++i) {
    if (instance.prefix()[static_cast<std::size_t>(i)] == Quantifier::Universal) {
      bits[space + static_cast<std::uint64_t>(i)] = '1';
    }
  }
  return bits;
}

QbfInstance decode(std::string_view bits) {
  int n = 3;
  while (clause_space(n) + static_cast<std::uint64_t>(n) < bits.size()) ++n;
  const std::uint64_t space = clause_space(n);
  if (space + static_cast<std::uint64_t>(n) != bits.size()) {
    throw EncodingError("bitstring length " + std::to_string(bits.size()) +
                        " is not 8*C(n,3)+n for any n >= 3");
  }
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw EncodingError("bitstring may only contain '0' and '1'");
  }
  std::vector<Clause3> matrix;
  for (std::uint64_t t = 0; t < space; ++t) {
    if (bits[t] == '1') matrix.push_back(clause_at(t, n));
  }
  std::vector<Quantifier> prefix;
  for (int i = 0; i < n; ++i) {
    prefix.push_back(bits[space + static_cast<std::uint64_t>(i)] == '1' ? Quantifier::Universal
                                                                        : Quantifier::Existential);
  }
  return QbfInstance(std::move(prefix), std::move(matrix));
}

}  // namespace mqsat::qbf
