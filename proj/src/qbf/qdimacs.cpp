#include <charconv>
#include <cstdlib>
#include <sstream>

#include "mqsat/qbf/qbf.hpp"

namespace mqsat::qbf {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

// Integers of a 0-terminated line, without the terminator.
std::vector<long long> zero_terminated(const std::vector<std::string_view>& toks, std::size_t first,
                                       std::size_t line_no) {
  std::vector<long long> vals;
  for (std::size_t i = first; i < toks.size(); ++i) vals.push_back(to_int(toks[i], line_no));
  if (vals.empty() || vals.back() != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": missing terminating 0");
  }
  vals.pop_back();
  for (long long v : vals) {
    if (v == 0) throw ParseError("line " + std::to_string(line_no) + ": 0 inside a line");
  }
  return vals;
}

}  // namespace

QbfInstance parse_qdimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<int> order;  // variables in quantification order
  std::vector<Quantifier> quant;
  std::vector<int> position;  // variable -> 1-based quantification position
  std::vector<std::array<int, 3>> raw;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (toks.size() != 4 || toks[1] != "qcnf") {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected 'p qcnf <n> <m>'");
      }
      n = to_int(toks[2], line_no);
      m = to_int(toks[3], line_no);
      if (n < 3 || m < 0) throw ParseError("header needs n >= 3 and m >= 0");
      position.assign(static_cast<std::size_t>(n) + 1, 0);
      continue;
    }
    if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": content before header");
    if (toks[0] == "a" || toks[0] == "e") {
      if (!raw.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": quantifier line after clauses");
      }
      const Quantifier q = toks[0] == "a" ? Quantifier::Universal : Quantifier::Existential;
      for (long long v : zero_terminated(toks, 1, line_no)) {
        if (v < 1 || v > n) {
          throw ParseError("line " + std::to_string(line_no) + ": variable " + std::to_string(v) +
                           " out of range");
        }
        if (position[static_cast<std::size_t>(v)] != 0) {
          throw ParseError("line " + std::to_string(line_no) + ": variable " + std::to_string(v) +
                           " quantified twice");
        }
        order.push_back(static_cast<int>(v));
        quant.push_back(q);
        position[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
      }
      continue;
    }
    const auto lits = zero_terminated(toks, 0, line_no);
    if (lits.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": clause must have exactly 3 literals");
    }
    std::array<int, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) {
      const long long v = lits[i] < 0 ? -lits[i] : lits[i];
      if (v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": variable " + std::to_string(v) +
                         " out of range");
      }
      c[i] = static_cast<int>(lits[i]);
    }
    if (std::abs(c[0]) == std::abs(c[1]) || std::abs(c[0]) == std::abs(c[2]) ||
        std::abs(c[1]) == std::abs(c[2])) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate variable in clause");
    }
    raw.push_back(c);
  }
  if (n < 0) throw ParseError("missing 'p qcnf' header");
  if (static_cast<long long>(order.size()) != n) {
    throw ParseError("quantifier prefix must bind each of the " + std::to_string(n) +
                     " variables exactly once");
  }
  if (static_cast<long long>(raw.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " clauses, found " +
                     std::to_string(raw.size()));
  }
  std::vector<Clause3> matrix;
  matrix.reserve(raw.size());
  for (auto c : raw) {
    for (int& lit : c) {
      const int renamed = position[static_cast<std::size_t>(std::abs(lit))];
      lit = lit < 0 ? -renamed : renamed;
    }
    matrix.push_back(Clause3::from_literals(c));
  }
  return QbfInstance(std::move(quant), std::move(matrix));
}

std::string to_qdimacs(const QbfInstance& instance) {
  std::ostringstream out;
  out << "p qcnf " << instance.n() << ' ' << instance.m() << '\n';
  const auto& prefix = instance.prefix();
  for (std::size_t i = 0; i < prefix.size();) {
    const Quantifier q = prefix[i];
    out << (q == Quantifier::Universal ? 'a' : 'e');
    for (; i < prefix.size() && prefix[i] == q; ++i) out << ' ' << i + 1;
    out << " 0\n";
  }
  for (const auto& c : instance.matrix()) {
    const auto l = c.literals();
    out << l[0] << ' ' << l[1] << ' ' << l[2] << " 0\n";
  }
  return out.str();
}

}  // namespace mqsat::qbf
