#include "mqsat/construct/generators.hpp"

#include "mqsat/construct/blocks.hpp"
#include "mqsat/qbf/qbf.hpp"

namespace mqsat::construct {

using psys::ChargeValue;
using psys::Label;
using psys::RuleKind;

void RuleEmitter::evolve(Label h, const ChargeValue& pre, const std::string& a,
                         const std::vector<std::pair<std::string, psys::Count>>& w) {
  psys::Multiset products;
  for (const auto& [name, n] : w) products.add(symbol(name), n);
  rules_.add_evolve(h, charge(pre), symbol(a), std::move(products), family_);
}

void RuleEmitter::send_in(Label h, const ChargeValue& pre, const std::string& a,
                          const std::string& b, const ChargeValue& post) {
  rules_.add_send_in(h, charge(pre), symbol(a), symbol(b), charge(post), family_);
}

void RuleEmitter::send_out(Label h, const ChargeValue& pre, const std::string& a,
                           const std::string& b, const ChargeValue& post) {
  rules_.add_send_out(h, charge(pre), symbol(a), symbol(b), charge(post), family_);
}

void RuleEmitter::divide(RuleKind kind, Label h, const ChargeValue& pre, const std::string& a,
                         const std::string& b, const ChargeValue& beta, const std::string& c,
                         const ChargeValue& gamma) {
  rules_.add_divide(kind, h, charge(pre), symbol(a), {symbol(b), charge(beta)},
                    {symbol(c), charge(gamma)}, family_);
}

namespace {

Label label(int j) { return static_cast<Label>(j); }

// Variables held by membrane label j in the initial configuration.
std::pair<int, int> block_range(const Layout& lay, int j) {
  return {(j - 2) * lay.k + 1, (j - 1) * lay.k};
}

}  // namespace

void gen_quantifier_placement(const Layout& lay, RuleEmitter& out) {
  const auto blocks = lay.block_values();
  out.set_family(1);
  for (int i = 2; i <= lay.l; ++i) {
    for (int j = i + 1; j <= lay.l; ++j) {
      for (const auto& si : blocks) {
        for (const auto& sj : blocks) {
          out.send_in(label(i), chg::placed(si), sym::Q(j, sj), sym::Q(j, sj), chg::placed(si));
        }
      }
    }
  }
  out.set_family(2);
  for (int j = 2; j <= lay.l; ++j) {
    for (const auto& s : blocks) {
      out.send_in(label(j), chg::neutral(), sym::Q(j, s), sym::junk, chg::placed(s));
    }
  }
  out.set_family(3);
  for (const auto& s : blocks) {
    out.send_out(1, chg::neutral(), sym::Q(1, s), sym::junk, chg::eval(s, lay.k, 0, 0));
  }
}

void gen_clause_distribution(const Layout& lay, RuleEmitter& out) {
  const auto blocks = lay.block_values();
  const Label bottom = lay.elementary_label();
  out.set_family(4);
  for (int j = 2; j <= lay.l; ++j) {
    for (const auto& s : blocks) {
      for (std::uint64_t c = 0; c < lay.clause_space; ++c) {
        out.send_in(label(j), chg::placed(s), sym::C(c), sym::C(c), chg::placed(s));
      }
    }
  }
  out.set_family(5);
  for (std::uint64_t c = 0; c < lay.clause_space; ++c) {
    out.send_in(bottom, chg::neutral(), sym::C(c), sym::C(c), chg::neutral());
  }
  out.set_family(6);
  for (const auto& s : blocks) {
    for (std::int64_t t = lay.sentinel_max(); t >= 1; --t) {
      out.evolve(1, chg::eval(s, lay.k, 0, 0), sym::T(t), {{sym::T(t - 1), 1}});
    }
  }
  for (int j = 2; j <= lay.l; ++j) {
    for (const auto& s : blocks) {
      out.send_in(label(j), chg::placed(s), sym::T(0), sym::T(0), chg::eval(s, lay.k, 0, 0));
    }
  }
  out.set_family(7);
  out.send_in(bottom, chg::neutral(), sym::T(0), sym::sat_pending,
              chg::countdown(lay.n - lay.k, 0));
}

void gen_division(const Layout& lay, RuleEmitter& out) {
  const auto blocks = lay.block_values();
  out.set_family(8);
  for (int j = 2; j <= lay.l; ++j) {
    const auto [lo, hi] = block_range(lay, j);
    for (int i = lo; i <= hi; ++i) {
      const std::int64_t h = bit_weight(i, lay.k);
      for (const auto& s : blocks) {
        for (std::int64_t p = 0; p < lay.branching; ++p) {
          if (p & h) continue;
          out.divide(RuleKind::DivideWeak, label(j), chg::eval(s, lay.k, 0, p), sym::x(i),
                     sym::delayed(false, i, lay.delay), chg::eval(s, lay.k, 0, p),
                     sym::delayed(true, i, lay.delay), chg::eval(s, lay.k, 0, p + h));
        }
      }
    }
  }
  out.set_family(9);
  const Label bottom = lay.elementary_label();
  const auto [lo, hi] = block_range(lay, lay.l + 1);
  for (int i = lo; i <= hi; ++i) {
    const std::int64_t h = bit_weight(i, lay.k);
    for (std::int64_t p = 0; p < lay.branching; ++p) {
      if (p & h) continue;
      out.divide(RuleKind::DivideElementary, bottom, chg::countdown(lay.n - lay.k, p), sym::x(i),
                 sym::value(false, i), chg::countdown(lay.n - lay.k, p), sym::value(true, i),
                 chg::countdown(lay.n - lay.k, p + h));
    }
  }
}

void gen_descent(const Layout& lay, RuleEmitter& out) {
  const auto blocks = lay.block_values();
  out.set_family(10);
  for (int j = 2; j <= lay.l; ++j) {
    for (int i = 1; i <= (j - 1) * lay.k; ++i) {
      for (bool v : {false, true}) {
        for (int t = lay.delay; t >= 1; --t) {
          for (const auto& s : blocks) {
            for (std::int64_t p = 0; p < lay.branching; ++p) {
              out.evolve(label(j), chg::eval(s, lay.k, 0, p), sym::delayed(v, i, t),
                         {{sym::delayed(v, i, t - 1), 1}});
            }
          }
        }
      }
    }
  }
  out.set_family(11);
  for (int j = 2; j <= lay.l; ++j) {
    for (int i = 1; i <= (j - 1) * lay.k; ++i) {
      for (bool v : {false, true}) {
        for (const auto& s : blocks) {
          for (std::int64_t p = 0; p < lay.branching; ++p) {
            out.evolve(label(j), chg::eval(s, lay.k, 0, p), sym::delayed(v, i, 0),
                       {{sym::value(v, i), static_cast<psys::Count>(lay.branching)}});
          }
        }
      }
    }
  }
  // Send-in candidates are prioritized by rule id, so keeping p innermost
  // hands the copies of one object to all siblings before any second object
  // enters any sibling.
  out.set_family(12);
  for (int j = 3; j <= lay.l; ++j) {
    for (int i = 1; i <= (j - 2) * lay.k; ++i) {
      for (bool v : {false, true}) {
        for (const auto& s : blocks) {
          for (std::int64_t p = 0; p < lay.branching; ++p) {
            out.send_in(label(j), chg::eval(s, lay.k, 0, p), sym::value(v, i),
                        sym::delayed(v, i, lay.delay), chg::eval(s, lay.k, 0, p));
          }
        }
      }
    }
  }
  out.set_family(13);
  const Label bottom = lay.elementary_label();
  for (int i = 1; i <= lay.n - lay.k; ++i) {
    for (bool v : {false, true}) {
      for (int c = lay.n - lay.k; c >= 1; --c) {
        for (std::int64_t p = 0; p < lay.branching; ++p) {
          out.send_in(bottom, chg::countdown(c, p), sym::value(v, i), sym::value(v, i),
                      chg::countdown(c - 1, p));
        }
      }
    }
  }
}

void gen_assignment_eval(const Layout& lay, RuleEmitter& out) {
  const Label bottom = lay.elementary_label();
  const std::int64_t width = lay.branching;
  out.set_family(14);
  for (bool v : {false, true}) {
    for (std::int64_t p = 0; p < width; ++p) {
      out.send_out(bottom, chg::countdown(0, p), sym::value(v, 1), sym::junk,
                   chg::reading(v, 1, p));
    }
  }
  out.set_family(15);
  for (int i = 2; i <= lay.n; ++i) {
    for (bool a : {false, true}) {
      for (bool b : {false, true}) {
        for (std::int64_t p = 0; p < width; ++p) {
          out.send_out(bottom, chg::reading(a, i - 1, p), sym::value(b, i), sym::junk,
                       chg::reading(b, i, p));
        }
      }
    }
  }
  for (int family : {16, 17}) {
    const bool negative = family == 17;
    out.set_family(family);
    for (std::uint64_t c = 0; c < lay.clause_space; ++c) {
      const qbf::Clause3 clause = qbf::clause_at(c, lay.n);
      for (std::size_t lit = 0; lit < 3; ++lit) {
        if (clause.negated[lit] != negative) continue;
        for (std::int64_t p = 0; p < width; ++p) {
          out.evolve(bottom, chg::reading(!negative, clause.vars[lit], p), sym::C(c),
                     {{sym::sat_pending, 1}});
        }
      }
    }
  }
  out.set_family(18);
  for (bool a : {false, true}) {
    for (std::int64_t p = 0; p < width; ++p) {
      out.send_out(bottom, chg::reading(a, lay.n, p), sym::end, sym::junk, chg::ended(p));
    }
  }
  out.set_family(19);
  for (std::int64_t p = 0; p < width; ++p) {
    out.evolve(bottom, chg::ended(p), sym::sat_pending, {{sym::sat, 1}});
  }
  out.set_family(20);
  for (std::uint64_t c = 0; c < lay.clause_space; ++c) {
    for (std::int64_t p = 0; p < width; ++p) {
      out.send_out(bottom, chg::ended(p), sym::C(c), sym::result(false, lay.k, p), chg::junk());
    }
  }
  out.set_family(21);
  for (std::int64_t p = 0; p < width; ++p) {
    out.send_out(bottom, chg::ended(p), sym::sat, sym::result(true, lay.k, p), chg::junk());
  }
}

void gen_quantifier_eval(const Layout& lay, RuleEmitter& out) {
  const auto blocks = lay.block_values();
  const int k = lay.k;
  // The skin never divides, so its identifier is always 0.
  auto for_each_site = [&](auto&& body) {
    for (int j = 1; j <= lay.l; ++j) {
      const std::int64_t ids = j == 1 ? 1 : lay.branching;
      for (std::int64_t p = 0; p < ids; ++p) {
        for (const auto& s : blocks) body(label(j), p, s);
      }
    }
  };
  out.set_family(22);
  for_each_site([&](Label j, std::int64_t p, const std::string& s) {
    for (int r = 1; r <= k; ++r) {
      for (std::int64_t c = 0; c < (std::int64_t{1} << r); c += 2) {
        for (bool a : {true, false}) {
          out.send_out(j, chg::eval(s, r, c, p), sym::result(a, r, c), sym::junk,
                       chg::eval_holding(s, r, c + 1, p, a));
        }
      }
    }
  });
  out.set_family(23);
  for_each_site([&](Label j, std::int64_t p, const std::string& s) {
    for (int r = 1; r <= k; ++r) {
      const bool universal = s[static_cast<std::size_t>(r - 1)] == 'A';
      for (std::int64_t c = 1; c < (std::int64_t{1} << r); c += 2) {
        for (bool a : {true, false}) {
          for (bool b : {true, false}) {
            const bool g = universal ? (a && b) : (a || b);
            out.evolve(j, chg::eval_holding(s, r, c, p, a), sym::result(b, r, c),
                       {{sym::result(g, r - 1, c / 2), 1}, {sym::spade, 1}});
          }
        }
      }
    }
  });
  out.set_family(24);
  for_each_site([&](Label j, std::int64_t p, const std::string& s) {
    for (int r = 1; r <= k; ++r) {
      for (std::int64_t c = 1; c < (std::int64_t{1} << r) - 1; c += 2) {
        for (bool a : {true, false}) {
          out.send_out(j, chg::eval_holding(s, r, c, p, a), sym::spade, sym::junk,
                       chg::eval(s, r, c + 1, p));
        }
      }
    }
  });
  out.set_family(25);
  for_each_site([&](Label j, std::int64_t p, const std::string& s) {
    for (int r = 1; r <= k; ++r) {
      const std::int64_t last = (std::int64_t{1} << r) - 1;
      for (bool a : {true, false}) {
        out.send_out(j, chg::eval_holding(s, r, last, p, a), sym::spade, sym::junk,
                     chg::eval(s, r - 1, 0, p));
      }
    }
  });
  out.set_family(26);
  for (int j = 2; j <= lay.l; ++j) {
    for (std::int64_t p = 0; p < lay.branching; ++p) {
      for (const auto& s : blocks) {
        for (bool a : {true, false}) {
          out.send_out(label(j), chg::eval(s, 0, 0, p), sym::result(a, 0, 0),
                       sym::result(a, k, p), chg::junk());
        }
      }
    }
  }
  out.set_family(27);
  for (const auto& s : blocks) {
    for (bool a : {true, false}) {
      out.send_out(1, chg::eval(s, 0, 0, 0), sym::result(a, 0, 0), a ? sym::yes : sym::no,
                   chg::junk());
    }
  }
}

}  // namespace mqsat::construct
