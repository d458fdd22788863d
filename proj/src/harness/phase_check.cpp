#include "mqsat/harness/phase_check.hpp"

#include <algorithm>
#include <charconv>

#include "mqsat/construct/blocks.hpp"

namespace mqsat::harness {

namespace {

using psys::Configuration;
using psys::MembraneId;

struct SymbolInfo {
  int variable = 0;       // x(i): i
  int value_var = 0;      // t(i) / f(i): i
  bool value = false;
};

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && ptr == s.data() + s.size() ? v : 0;
}

std::vector<SymbolInfo> classify(const psys::SymbolTable& symbols) {
  std::vector<SymbolInfo> info(symbols.size());
  for (psys::SymbolId s = 0; s < symbols.size(); ++s) {
    const std::string& name = symbols.name(s);
    if (name.size() < 4 || name.back() != ')' || name[1] != '(') continue;
    const std::string_view inner(name.data() + 2, name.size() - 3);
    if (name[0] == 'x') {
      info[s].variable = parse_int(inner);
    } else if ((name[0] == 't' || name[0] == 'f') && inner.find(',') == std::string_view::npos) {
      info[s].value_var = parse_int(inner);
      info[s].value = name[0] == 't';
    }
  }
  return info;
}

void preorder(const Configuration& c, MembraneId root, std::vector<MembraneId>& out) {
  out.push_back(root);
  for (MembraneId ch : c.at(root).children) preorder(c, ch, out);
}

class Checker {
 public:
  Checker(const construct::Blueprint& bp, PhaseReport& report)
      : bp_(bp), lay_(bp.layout), report_(report), info_(classify(bp.rules.symbols)) {}

  void before_step(const Configuration& c, const psys::RuleAssignment& a, std::uint64_t step) {
    for (const auto& app : a.applications) {
      const auto& rule = bp_.rules.rule(app.rule);
      if (psys::is_division(rule.kind)) check_waiting_above(c, app.membrane, step);
      if (rule.family == 12 || rule.family == 13) check_level_settled(c, rule.label, step);
    }
  }

  void after_step(const Configuration& c, const psys::StepOutcome& out, std::uint64_t step) {
    lineage_.resize(c.size(), 0);
    reached_.resize(c.size(), 0);
    std::vector<std::pair<std::size_t, const psys::StepEvent*>> divisions;
    for (const auto& e : out.events) {
      if (e.copy) divisions.emplace_back(c.level(e.membrane), &e);
    }
    std::sort(divisions.begin(), divisions.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [lvl, e] : divisions) {
      (void)lvl;
      const std::uint32_t count = ++lineage_[e->membrane];
      if (count > static_cast<std::uint32_t>(lay_.k)) {
        add(step, "division-count",
            "membrane " + std::to_string(e->membrane) + " lineage divided " +
                std::to_string(count) + " times, more than k = " + std::to_string(lay_.k));
      }
      std::vector<MembraneId> src, dst;
      preorder(c, e->membrane, src);
      preorder(c, *e->copy, dst);
      for (std::size_t i = 0; i < std::min(src.size(), dst.size()); ++i) {
        lineage_[dst[i]] = lineage_[src[i]];
      }
    }
    if (report_.generation_complete) return;
    const psys::Label bottom = lay_.elementary_label();
    bool all = true;
    for (const auto& m : c.membranes()) {
      if (m.label != bottom) continue;
      const auto& charge = bp_.rules.charges.value(m.charge);
      if (construct::chg::remaining(charge) == std::int64_t{0}) reached_[m.id] = 1;
      if (!reached_[m.id]) all = false;
    }
    if (all) complete(c, step);
  }

  void finish() {
    if (!report_.generation_complete) {
      add(0, "incomplete", "the elementary membranes never all reached a (0,p) charge");
    }
  }

 private:
  void add(std::uint64_t step, std::string kind, std::string detail) {
    if (report_.violations.size() < 64) {
      report_.violations.push_back({step, std::move(kind), std::move(detail)});
    }
  }

  // A level-L membrane is dividing; the parent region must not already hold
  // plain assignment objects meant for level L.
  void check_waiting_above(const Configuration& c, MembraneId id, std::uint64_t step) {
    const auto& m = c.at(id);
    if (!m.parent || m.label < 3) return;
    const int limit = (static_cast<int>(m.label) - 2) * lay_.k;
    for (const auto& [s, n] : c.at(*m.parent).contents) {
      const int v = info_[s].value_var;
      if (v >= 1 && v <= limit) {
        add(step, "timing",
            "membrane " + std::to_string(id) + " (label " + std::to_string(m.label) +
                ") divides while " + bp_.rules.symbols.name(s) + " waits in its parent");
        return;
      }
    }
  }

  void check_level_settled(const Configuration& c, psys::Label label, std::uint64_t step) {
    if (settled_.size() <= label) settled_.resize(label + 1, 0);
    if (settled_[label]) return;
    for (const auto& m : c.membranes()) {
      if (m.label != label) continue;
      for (const auto& [s, n] : m.contents) {
        if (info_[s].variable != 0) {
          add(step, "timing",
              "assignment object enters label " + std::to_string(label) + " while membrane " +
                  std::to_string(m.id) + " still holds " + bp_.rules.symbols.name(s));
          return;
        }
      }
    }
    settled_[label] = 1;
  }

  void complete(const Configuration& c, std::uint64_t step) {
    report_.generation_complete = step;
    const psys::Label bottom = lay_.elementary_label();
    report_.elementary_membranes = psys::count_membranes(c, bottom);
    report_.depth = psys::depth(c);
    const std::size_t expected = std::size_t{1} << lay_.n;
    if (report_.elementary_membranes != expected) {
      add(step, "geometry",
          std::to_string(report_.elementary_membranes) + " elementary membranes, expected " +
              std::to_string(expected));
    }
    if (report_.depth != static_cast<std::size_t>(lay_.l + 1)) {
      add(step, "geometry", "depth " + std::to_string(report_.depth) + ", expected " +
                                std::to_string(lay_.l + 1));
    }
    const auto width = static_cast<std::size_t>(lay_.branching);
    for (const auto& m : c.membranes()) {
      if (m.label == bottom) {
        check_assignment(c, m.id, step);
        continue;
      }
      if (m.children.size() != width) {
        add(step, "geometry",
            "membrane " + std::to_string(m.id) + " has " + std::to_string(m.children.size()) +
                " children, expected " + std::to_string(width));
        continue;
      }
      std::vector<int> seen(width, 0);
      for (MembraneId ch : m.children) {
        const auto p = construct::chg::identifier(bp_.rules.charges.value(c.at(ch).charge));
        if (!p || *p < 0 || static_cast<std::size_t>(*p) >= width) {
          add(step, "identifier", "membrane " + std::to_string(ch) + " carries no identifier");
        } else {
          ++seen[static_cast<std::size_t>(*p)];
        }
      }
      for (std::size_t p = 0; p < width; ++p) {
        if (seen[p] != 1) {
          add(step, "identifier",
              "children of membrane " + std::to_string(m.id) + " carry p = " + std::to_string(p) +
                  " " + std::to_string(seen[p]) + " times");
          break;
        }
      }
    }
  }

  // The membrane at (0,p) must hold t(i)/f(i) for every i, matching the
  // identifiers along its path.
  void check_assignment(const Configuration& c, MembraneId id, std::uint64_t step) {
    const auto& m = c.at(id);
    if (construct::chg::remaining(bp_.rules.charges.value(m.charge)) != std::int64_t{0}) return;
    std::vector<int> want(static_cast<std::size_t>(lay_.n) + 1, -1);
    for (std::optional<MembraneId> cur = id; cur && c.at(*cur).parent; cur = c.at(*cur).parent) {
      const auto& node = c.at(*cur);
      const auto p = construct::chg::identifier(bp_.rules.charges.value(node.charge));
      if (!p) return;  // reported by the identifier check
      const int block = static_cast<int>(node.label) - 1;
      for (int i = (block - 1) * lay_.k + 1; i <= block * lay_.k; ++i) {
        want[static_cast<std::size_t>(i)] = (*p & construct::bit_weight(i, lay_.k)) ? 1 : 0;
      }
    }
    std::vector<int> have(want.size(), 0);
    std::vector<int> value(want.size(), -1);
    for (const auto& [s, n] : m.contents) {
      const int v = info_[s].value_var;
      if (v < 1 || v > lay_.n) continue;
      have[static_cast<std::size_t>(v)] += static_cast<int>(n);
      value[static_cast<std::size_t>(v)] = info_[s].value ? 1 : 0;
    }
    for (int i = 1; i <= lay_.n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (have[u] != 1 || value[u] != want[u]) {
        add(step, "assignment",
            "elementary membrane " + std::to_string(id) + " holds " + std::to_string(have[u]) +
                " value objects for x" + std::to_string(i) + " or disagrees with its path");
        return;
      }
    }
  }

  const construct::Blueprint& bp_;
  const construct::Layout& lay_;
  PhaseReport& report_;
  std::vector<SymbolInfo> info_;
  std::vector<std::uint32_t> lineage_;
  std::vector<char> reached_;
  std::vector<char> settled_;
};

}  // namespace

PhaseReport check_phase_invariants(const psys::Trace& trace, std::uint64_t steps,
                                   const construct::Blueprint& blueprint,
                                   const psys::Configuration& initial) {
  PhaseReport report;
  Checker checker(blueprint, report);
  Configuration c = initial;
  const auto assignments = psys::assignments_from_trace(trace, steps);
  for (std::uint64_t s = 0; s < steps; ++s) {
    const auto& a = assignments[s];
    checker.before_step(c, a, s + 1);
    const auto out = psys::apply_assignment(c, blueprint.rules, a);
    checker.after_step(c, out, s + 1);
  }
  checker.finish();
  return report;
}

}  // namespace mqsat::harness
