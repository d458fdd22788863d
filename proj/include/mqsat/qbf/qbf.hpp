#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mqsat::qbf {

enum class Quantifier : std::uint8_t { Existential, Universal };

/// One truth value per variable; values[i] is x_{i+1}.
struct Assignment {
  std::vector<bool> values;
};

/// A disjunction of exactly three literals over distinct variables,
/// normalized so that vars is strictly increasing. negated[i] applies to
/// vars[i].
struct Clause3 {
  std::array<int, 3> vars{};
  std::array<bool, 3> negated{};

  /// Builds a normalized clause from DIMACS-style literals (negative =
  /// negated). Throws std::invalid_argument on zero or repeated variables.
  static Clause3 from_literals(std::array<int, 3> literals);

  std::array<int, 3> literals() const;
  bool satisfied_by(const Assignment& a) const;

  auto operator<=>(const Clause3&) const = default;
};

/// Closed prenex 3-CNF formula Q1 x1 ... Qn xn . φ*. Quantifier i binds
/// variable i. The matrix is a set: sorted by clause index, no repeats.
class QbfInstance {
 public:
  QbfInstance() = default;
  /// Sorts and dedupes the matrix. Throws std::invalid_argument if n < 3
  /// or a clause mentions a variable above n.
  QbfInstance(std::vector<Quantifier> prefix, std::vector<Clause3> matrix);

  int n() const { return static_cast<int>(prefix_.size()); }
  std::size_t m() const { return matrix_.size(); }
  const std::vector<Quantifier>& prefix() const { return prefix_; }
  const std::vector<Clause3>& matrix() const { return matrix_; }

  bool operator==(const QbfInstance&) const = default;

 private:
  std::vector<Quantifier> prefix_;
  std::vector<Clause3> matrix_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- canonical clause numbering and the bitstring encoding ----

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// Number of possible clauses, 8 * C(n, 3).
std::uint64_t clause_space(int n);
/// Position of the clause: 8 * (lexicographic rank of its variable
/// triple) + (4*s1 + 2*s2 + s3), with s = 1 for a negated literal.
std::uint64_t clause_index(const Clause3& clause, int n);
/// Inverse of clause_index.
Clause3 clause_at(std::uint64_t index, int n);

/// clause_space(n) clause bits followed by n quantifier bits (1 = ∀).
std::string encode(const QbfInstance& instance);
/// Throws EncodingError unless the length is 8*C(n,3)+n for some n >= 3 and
/// every character is '0' or '1'.
QbfInstance decode(std::string_view bits);

// ---- QDIMACS subset ----

/// Accepts comment lines, a `p qcnf n m` header, quantifier lines
/// `a|e v... 0` covering every variable once, and m clause lines of three
/// literals. Variables are renamed into quantification order.
QbfInstance parse_qdimacs(std::string_view text);
std::string to_qdimacs(const QbfInstance& instance);

// ---- evaluation ----

bool eval_matrix(std::span<const Clause3> matrix, const Assignment& assignment);
/// Validity by recursion over the quantification tree, short-circuiting.
bool oracle_eval(const QbfInstance& instance);

char quantifier_char(Quantifier q);

}  // namespace mqsat::qbf
