#include "mqsat/construct/blueprint_json.hpp"

#include <stdexcept>

#include "mqsat/util/hash.hpp"

namespace mqsat::construct {

using nlohmann::json;

json charge_to_json(const psys::ChargeValue& charge) {
  json out = json::array();
  for (const auto& part : charge.parts()) {
    if (const auto* i = std::get_if<std::int64_t>(&part)) {
      out.push_back(*i);
    } else {
      out.push_back(std::get<std::string>(part));
    }
  }
  return out;
}

psys::ChargeValue charge_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("charge must be a non-empty array");
  std::vector<psys::ChargeAtom> parts;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      parts.emplace_back(e.get<std::int64_t>());
    } else if (e.is_string()) {
      parts.emplace_back(e.get<std::string>());
    } else {
      throw std::invalid_argument("charge components are integers or strings");
    }
  }
  return psys::ChargeValue(std::move(parts));
}

json multiset_to_json(const psys::Multiset& contents, const psys::SymbolTable& symbols) {
  json out = json::array();
  for (const auto& [s, n] : contents) out.push_back({symbols.name(s), n});
  return out;
}

namespace {

psys::Multiset multiset_from_json(const json& j, const psys::SymbolTable& symbols) {
  psys::Multiset out;
  for (const auto& e : j) out.add(symbols.at(e.at(0).get<std::string>()), e.at(1).get<psys::Count>());
  return out;
}

json product_to_json(const psys::Product& p, const psys::RuleSet& rules) {
  return {{"object", rules.symbols.name(p.object)},
          {"charge", charge_to_json(rules.charges.value(p.charge))}};
}

psys::Product product_from_json(const json& j, const psys::RuleSet& rules) {
  return {rules.symbols.at(j.at("object").get<std::string>()),
          rules.charges.require(charge_from_json(j.at("charge")))};
}

}  // namespace

json blueprint_to_json(const Blueprint& bp) {
  const auto& rules = bp.rules;
  json out;
  out["n"] = bp.layout.n;
  out["k"] = bp.layout.k;
  out["l"] = bp.layout.l;
  out["delay"] = bp.layout.delay;
  out["input_label"] = bp.input_label;
  json psi = json::array();
  for (const auto& c : rules.charges.values()) psi.push_back(charge_to_json(c));
  out["psi"] = std::move(psi);
  json symbols = json::array();
  for (psys::SymbolId s = 0; s < rules.symbols.size(); ++s) symbols.push_back(rules.symbols.name(s));
  out["symbols"] = std::move(symbols);
  json membranes = json::array();
  for (const auto& m : bp.membranes) {
    membranes.push_back({{"label", m.label},
                         {"parent", m.parent ? json(*m.parent) : json(nullptr)},
                         {"contents", multiset_to_json(m.contents, rules.symbols)}});
  }
  out["membranes"] = std::move(membranes);
  json list = json::array();
  for (const auto& r : rules.rules()) {
    json e;
    e["id"] = r.id;
    e["family"] = r.family;
    e["kind"] = std::string(psys::to_string(r.kind));
    e["label"] = r.label;
    e["pre"] = charge_to_json(rules.charges.value(r.pre));
    e["subject"] = rules.symbols.name(r.subject);
    if (r.kind == psys::RuleKind::Evolve) {
      e["products"] = multiset_to_json(r.products, rules.symbols);
    } else if (psys::is_division(r.kind)) {
      e["products"] = json::array({product_to_json(r.first, rules), product_to_json(r.second, rules)});
    } else {
      e["products"] = json::array({product_to_json(r.first, rules)});
    }
    list.push_back(std::move(e));
  }
  out["rules"] = std::move(list);
  return out;
}

Blueprint blueprint_from_json(const json& j) {
  try {
    Blueprint bp;
    bp.layout = make_layout(j.at("n").get<int>(), j.at("delay").get<int>());
    if (j.at("k").get<int>() != bp.layout.k || j.at("l").get<int>() != bp.layout.l) {
      throw std::invalid_argument("k and l disagree with n");
    }
    bp.input_label = j.value("input_label", psys::Label{1});
    auto& rules = bp.rules;
    for (const auto& c : j.at("psi")) rules.charges.intern(charge_from_json(c));
    for (const auto& s : j.at("symbols")) rules.symbols.intern(s.get<std::string>());
    for (const auto& m : j.at("membranes")) {
      SkeletonMembrane sm;
      sm.label = m.at("label").get<psys::Label>();
      if (!m.at("parent").is_null()) sm.parent = m.at("parent").get<std::size_t>();
      sm.contents = multiset_from_json(m.at("contents"), rules.symbols);
      bp.membranes.push_back(std::move(sm));
    }
    for (const auto& e : j.at("rules")) {
      psys::Rule r;
      const auto kind = psys::rule_kind_from_string(e.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("unknown rule kind " + e.at("kind").dump());
      r.kind = *kind;
      r.family = e.at("family").get<int>();
      r.label = e.at("label").get<psys::Label>();
      r.pre = rules.charges.require(charge_from_json(e.at("pre")));
      r.subject = rules.symbols.at(e.at("subject").get<std::string>());
      const auto& products = e.at("products");
      if (r.kind == psys::RuleKind::Evolve) {
        r.products = multiset_from_json(products, rules.symbols);
        r.first.charge = r.pre;
      } else {
        r.first = product_from_json(products.at(0), rules);
        if (psys::is_division(r.kind)) r.second = product_from_json(products.at(1), rules);
      }
      const auto expected = static_cast<psys::RuleId>(rules.size());
      if (e.at("id").get<psys::RuleId>() != expected) {
        throw std::invalid_argument("rule ids must be consecutive from 0");
      }
      rules.add(std::move(r));
    }
    return bp;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed blueprint: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed blueprint: ") + e.what());
  } catch (const psys::AlphabetError& e) {
    throw std::invalid_argument(std::string("malformed blueprint: ") + e.what());
  }
}

std::uint64_t configuration_digest(const psys::Configuration& config, const psys::RuleSet& rules) {
  std::string text;
  for (const auto& m : config.membranes()) {
    text += std::to_string(m.id) + ":" + std::to_string(m.label) + ":" +
            (m.parent ? std::to_string(*m.parent) : std::string("-")) + ":" +
            rules.charges.value(m.charge).to_string() + ":";
    for (const auto& [s, n] : m.contents) text += rules.symbols.name(s) + "*" + std::to_string(n) + ",";
    text += ";";
  }
  text += "env:";
  for (const auto& [s, n] : config.environment()) {
    text += rules.symbols.name(s) + "*" + std::to_string(n) + ",";
  }
  return fnv1a64(text);
}

}  // namespace mqsat::construct
