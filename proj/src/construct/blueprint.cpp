#include "mqsat/construct/blueprint.hpp"

#include <stdexcept>

namespace mqsat::construct {

Blueprint build_skeleton(int n, int delay) {
  Blueprint bp;
  bp.layout = make_layout(n, delay);
  const Layout& lay = bp.layout;
  RuleEmitter out(bp.rules);
  out.charge(chg::neutral());
  gen_quantifier_placement(lay, out);
  gen_clause_distribution(lay, out);
  gen_division(lay, out);
  gen_descent(lay, out);
  gen_assignment_eval(lay, out);
  gen_quantifier_eval(lay, out);

  bp.membranes.push_back({1, std::nullopt, {}});
  for (int j = 2; j <= lay.l + 1; ++j) {
    SkeletonMembrane m{static_cast<psys::Label>(j), static_cast<std::size_t>(j - 2), {}};
    for (int i = (j - 2) * lay.k + 1; i <= (j - 1) * lay.k; ++i) {
      m.contents.add(bp.rules.symbols.at(sym::x(i)));
    }
    if (j == lay.l + 1) m.contents.add(bp.rules.symbols.at(sym::end));
    bp.membranes.push_back(std::move(m));
  }
  return bp;
}

psys::Multiset build_input(const qbf::QbfInstance& instance, const Blueprint& blueprint) {
  const Layout& lay = blueprint.layout;
  if (instance.n() != lay.n) {
    throw std::invalid_argument("instance has " + std::to_string(instance.n()) +
                                " variables but the system was built for n = " +
                                std::to_string(lay.n));
  }
  const auto& symbols = blueprint.rules.symbols;
  psys::Multiset w;
  for (int j = 1; j <= lay.l; ++j) {
    std::string block;
    for (int r = 0; r < lay.k; ++r) {
      block += qbf::quantifier_char(instance.prefix()[static_cast<std::size_t>((j - 1) * lay.k + r)]);
    }
    w.add(symbols.at(sym::Q(j, block)));
  }
  for (const auto& c : instance.matrix()) w.add(symbols.at(sym::C(qbf::clause_index(c, lay.n))));
  const auto m = static_cast<std::int64_t>(instance.m());
  w.add(symbols.at(sym::T(m + lay.l - 2)));
  return w;
}

psys::Configuration assemble(const Blueprint& blueprint, const psys::Multiset& input) {
  const psys::ChargeId neutral = blueprint.rules.charges.require(chg::neutral());
  const auto& skel = blueprint.membranes;
  if (skel.empty()) throw std::invalid_argument("blueprint has no membranes");
  psys::Configuration config(skel.front().label, neutral);
  std::vector<psys::MembraneId> ids{config.skin_id()};
  for (std::size_t i = 1; i < skel.size(); ++i) {
    if (!skel[i].parent || *skel[i].parent >= i) {
      throw std::invalid_argument("skeleton membranes must list parents first");
    }
    ids.push_back(config.add_membrane(ids[*skel[i].parent], skel[i].label, neutral));
  }
  for (std::size_t i = 0; i < skel.size(); ++i) {
    config.at(ids[i]).contents.add(skel[i].contents);
    if (skel[i].label == blueprint.input_label) config.at(ids[i]).contents.add(input);
  }
  return config;
}

std::array<std::size_t, kFamilyCount + 1> family_sizes(const psys::RuleSet& rules) {
  std::array<std::size_t, kFamilyCount + 1> out{};
  for (const auto& r : rules.rules()) {
    if (r.family < 1 || r.family > kFamilyCount) throw std::out_of_range("rule without a family");
    ++out[static_cast<std::size_t>(r.family)];
  }
  return out;
}

}  // namespace mqsat::construct
