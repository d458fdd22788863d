#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mqsat/harness/verify.hpp"
#include "mqsat/qbf/qbf.hpp"

using namespace mqsat::qbf;

namespace {

constexpr auto E = Quantifier::Existential;
constexpr auto A = Quantifier::Universal;

Clause3 cl(int a, int b, int c) { return Clause3::from_literals({a, b, c}); }

// Clause triples in lexicographic order with all eight sign patterns,
// listed by nested loops.
std::vector<Clause3> enumerate_clauses(int n) {
  std::vector<Clause3> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int s = 0; s < 8; ++s) {
          out.push_back(cl((s & 4) ? -a : a, (s & 2) ? -b : b, (s & 1) ? -c : c));
        }
      }
    }
  }
  return out;
}

// Evaluates every leaf of the full assignment tree, then folds level by level.
bool tree_fold(const QbfInstance& q) {
  const int n = q.n();
  std::vector<char> layer(std::size_t{1} << n);
  for (std::size_t leaf = 0; leaf < layer.size(); ++leaf) {
    Assignment a;
    a.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a.values[static_cast<std::size_t>(i)] = (leaf >> (n - 1 - i)) & 1;
    bool all = true;
    for (const auto& c : q.matrix()) {
      bool any = false;
      for (int j = 0; j < 3; ++j) any |= a.values[static_cast<std::size_t>(c.vars[j] - 1)] != c.negated[j];
      all &= any;
    }
    layer[leaf] = all;
  }
  for (int i = n - 1; i >= 0; --i) {
    std::vector<char> up(layer.size() / 2);
    for (std::size_t j = 0; j < up.size(); ++j) {
      up[j] = q.prefix()[static_cast<std::size_t>(i)] == A ? (layer[2 * j] && layer[2 * j + 1])
                                                          : (layer[2 * j] || layer[2 * j + 1]);
    }
    layer = std::move(up);
  }
  return layer[0];
}

}  // namespace

TEST_CASE("clauses normalize their literal order") {
  const auto c = cl(4, -1, 2);
  CHECK(c.vars == std::array<int, 3>{1, 2, 4});
  CHECK(c.negated == std::array<bool, 3>{true, false, false});
  CHECK(c.literals() == std::array<int, 3>{-1, 2, 4});
  CHECK_THROWS_AS(cl(1, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(cl(0, 1, 2), std::invalid_argument);
}

TEST_CASE("instances sort and deduplicate the matrix") {
  const QbfInstance q({E, E, E, E}, {cl(2, 3, 4), cl(1, 2, 3), cl(3, 2, 1)});
  CHECK(q.m() == 2);
  CHECK(q.matrix()[0] == cl(1, 2, 3));
  CHECK_THROWS_AS(QbfInstance({E, E}, {}), std::invalid_argument);
  CHECK_THROWS_AS(QbfInstance({E, E, E}, {cl(1, 2, 4)}), std::invalid_argument);
}

TEST_CASE("clause index examples") {
  CHECK(clause_index(cl(1, 2, 3), 4) == 0);
  CHECK(clause_index(cl(-1, -2, -3), 4) == 7);
  CHECK(clause_index(cl(1, -2, 4), 4) == 10);
  CHECK(clause_at(10, 4) == cl(1, -2, 4));
  CHECK(clause_space(3) == 8);
  CHECK(clause_space(4) == 32);
  CHECK(clause_space(12) == 1760);
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(2, 3) == 0);
  CHECK_THROWS(clause_at(32, 4));
}

TEST_CASE("clause index is the position in the lexicographic enumeration") {
  for (int n = 3; n <= 8; ++n) {
    const auto all = enumerate_clauses(n);
    REQUIRE(all.size() == clause_space(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(clause_index(all[i], n) == i);
      REQUIRE(clause_at(i, n) == all[i]);
    }
  }
}

TEST_CASE("encoding examples") {
  const QbfInstance q({E, E, E}, {cl(1, 2, 3)});
  CHECK(encode(q) == "10000000000");
  const QbfInstance r({A, E, A}, {cl(-1, -2, -3), cl(1, 2, -3)});
  CHECK(encode(r) == "01000001" "101");
  CHECK(decode("01000001101") == r);
  CHECK(encode(QbfInstance(std::vector<Quantifier>(6, E), {})).size() == 166);
  CHECK(decode(std::string(166, '0')).n() == 6);
}

TEST_CASE("decoding rejects malformed bitstrings") {
  CHECK_THROWS_AS(decode("101"), EncodingError);
  CHECK_THROWS_AS(decode(""), EncodingError);
  CHECK_THROWS_AS(decode("1000000000x"), EncodingError);
  CHECK_THROWS_AS(decode(std::string(12, '0')), EncodingError);
}

TEST_CASE("encoding round-trips random instances") {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto q = mqsat::harness::random_instance(n, 1000 * static_cast<std::uint64_t>(n) + s);
      REQUIRE(q.n() == n);
      const auto bits = encode(q);
      REQUIRE(bits.size() == clause_space(n) + static_cast<std::size_t>(n));
      REQUIRE(decode(bits) == q);
      REQUIRE(parse_qdimacs(to_qdimacs(q)) == q);
    }
  }
}

TEST_CASE("QDIMACS parsing renames variables into quantifier order") {
  const std::string text =
      "c quantifiers listed out of variable order\n"
      "p qcnf 6 3\n"
      "a 2 3 0\n"
      "e 1 0\n"
      "e 4 0\n"
      "a 5 0\n"
      "e 6 0\n"
      "-1 2 6 0\n"
      "1 -3 4 0\n"
      "2 5 -6 0\n";
  const auto q = parse_qdimacs(text);
  CHECK(q.prefix() == std::vector<Quantifier>{A, A, E, E, A, E});
  const QbfInstance want({A, A, E, E, A, E}, {cl(1, -3, 6), cl(-2, 3, 4), cl(1, 5, -6)});
  CHECK(q == want);
  CHECK(to_qdimacs(q) ==
        "p qcnf 6 3\na 1 2 0\ne 3 4 0\na 5 0\ne 6 0\n1 -3 6 0\n1 5 -6 0\n-2 3 4 0\n");
}

TEST_CASE("QDIMACS parse errors") {
  const char* bad[] = {
      "",
      "e 1 2 3 0\n",
      "p cnf 3 1\ne 1 2 3 0\n1 2 3 0\n",
      "p qcnf 2 0\ne 1 2 0\n",
      "p qcnf 3 1\ne 1 2 0\n1 2 3 0\n",
      "p qcnf 3 1\ne 1 2 3 0\na 1 0\n1 2 3 0\n",
      "p qcnf 3 1\ne 1 2 3 0\n1 1 3 0\n",
      "p qcnf 3 1\ne 1 2 3 0\n1 2 0\n",
      "p qcnf 3 1\ne 1 2 3 0\n1 2 3\n",
      "p qcnf 3 2\ne 1 2 3 0\n1 2 3 0\n",
      "p qcnf 3 1\ne 1 2 3 0\n1 2 9 0\n",
      "p qcnf 3 2\ne 1 2 0\n1 2 3 0\na 3 0\n-1 2 3 0\n",
      "p qcnf 3 1\ne 1 2 x 0\n1 2 3 0\n",
      "p qcnf 3 1\np qcnf 3 1\ne 1 2 3 0\n1 2 3 0\n",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(parse_qdimacs(text), ParseError);
  }
}

TEST_CASE("matrix evaluation examples") {
  const std::vector<Clause3> m{cl(1, 2, 3), cl(-1, -2, 3)};
  CHECK(eval_matrix(m, {{true, false, false}}));
  CHECK_FALSE(eval_matrix(m, {{false, false, false}}));
  CHECK_FALSE(eval_matrix(m, {{true, true, false}}));
  CHECK(eval_matrix({}, {{false, false, false}}));
}

TEST_CASE("oracle examples") {
  CHECK(oracle_eval(QbfInstance({E, E, E, E}, {cl(1, 2, 3)})));
  CHECK_FALSE(oracle_eval(QbfInstance({A, A, A, A}, {cl(1, 2, 3)})));
  CHECK(oracle_eval(QbfInstance({A, A, A}, {})));
  // ∀x1 ∃x2: x2 must copy x1 through both clauses.
  CHECK(oracle_eval(QbfInstance({A, E, E}, {cl(1, -2, 3), cl(1, -2, -3), cl(-1, 2, 3), cl(-1, 2, -3)})));
  CHECK_FALSE(oracle_eval(QbfInstance({E, A, E}, {cl(1, -2, 3), cl(1, -2, -3), cl(-1, 2, 3), cl(-1, 2, -3)})));
}

TEST_CASE("oracle agrees with a full tree fold") {
  for (const auto& q : mqsat::harness::exhaustive_small_corpus()) REQUIRE(oracle_eval(q) == tree_fold(q));
  for (int n = 5; n <= 8; ++n) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const auto q = mqsat::harness::random_instance(n, 77 + 1000 * static_cast<std::uint64_t>(n) + s);
      REQUIRE(oracle_eval(q) == tree_fold(q));
    }
  }
}

TEST_CASE("with only existential quantifiers, dropping clauses preserves truth") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 3;
    auto q = mqsat::harness::random_instance(n, 9000 + static_cast<std::uint64_t>(trial));
    const QbfInstance ex(std::vector<Quantifier>(static_cast<std::size_t>(n), E), q.matrix());
    if (!oracle_eval(ex) || ex.m() == 0) continue;
    auto fewer = ex.matrix();
    fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
    REQUIRE(oracle_eval(QbfInstance(ex.prefix(), fewer)));
  }
}

TEST_CASE("random instances have distinct clauses within the size bound") {
  for (int n = 3; n <= 12; ++n) {
    const auto q = mqsat::harness::random_instance(n, 42);
    CHECK(q.m() >= 1);
    CHECK(q.m() <= static_cast<std::size_t>(3 * n));
    CHECK(q == mqsat::harness::random_instance(n, 42));
  }
  CHECK(mqsat::harness::exhaustive_small_corpus().size() == 672);
  std::set<std::string> distinct;
  for (const auto& q : mqsat::harness::exhaustive_small_corpus()) distinct.insert(encode(q));
  CHECK(distinct.size() == 672);
}
