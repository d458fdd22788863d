#include "mqsat/psys/engine.hpp"

#include <algorithm>
#include <tuple>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mqsat/psys/simulator.hpp"

namespace mqsat::psys {

namespace detail {

void collect_instances(const Configuration& config, const RuleSet& rules, MembraneId id,
                       std::vector<Instance>& out) {
  const Membrane& m = config.at(id);
  if (!rules.charges.contains(m.charge)) {
    throw AlphabetError("membrane " + std::to_string(id) + " carries undeclared charge id " +
                        std::to_string(m.charge));
  }
  for (const auto& [symbol, n] : m.contents) {
    for (RuleId rid : rules.local_rules(m.label, m.charge, symbol)) {
      const Rule& r = rules.rule(rid);
      if (is_division(r.kind)) {
        if (!m.parent) continue;  // the skin never divides
        if (r.kind == RuleKind::DivideElementary && !m.elementary()) continue;
      }
      out.push_back({rid, id, id, symbol, r.kind == RuleKind::Evolve ? n : Count{1}});
    }
  }
  if (!m.parent) return;
  for (const auto& [symbol, n] : config.at(*m.parent).contents) {
    (void)n;
    for (RuleId rid : rules.inbound_rules(m.label, m.charge, symbol)) {
      out.push_back({rid, id, *m.parent, symbol, Count{1}});
    }
  }
}

}  // namespace detail

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t pool_key(MembraneId region, SymbolId symbol) {
  return (std::uint64_t{region} << 32) | symbol;
}

class Pools {
 public:
  explicit Pools(const Configuration& config) : config_(config) {}

  Count& at(MembraneId region, SymbolId symbol) {
    auto [it, inserted] = pools_.try_emplace(pool_key(region, symbol), 0);
    if (inserted) it->second = config_.at(region).contents.count(symbol);
    return it->second;
  }

 private:
  const Configuration& config_;
  std::unordered_map<std::uint64_t, Count> pools_;
};

RuleAssignment finish(std::map<std::pair<MembraneId, RuleId>, Count>& chosen) {
  RuleAssignment out;
  out.applications.reserve(chosen.size());
  for (const auto& [key, mult] : chosen) out.applications.push_back({key.second, key.first, mult});
  return out;
}

RuleAssignment select_canonical(std::span<const Instance> candidates, const Configuration& config,
                                const RuleSet& rules) {
  std::vector<Instance> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end());
  Pools pools(config);
  std::vector<char> blocked(config.size(), 0);
  std::map<std::pair<MembraneId, RuleId>, Count> chosen;
  for (const Instance& inst : order) {
    Count& avail = pools.at(inst.region, inst.subject);
    if (avail == 0) continue;
    if (is_blocking(rules.rule(inst.rule).kind)) {
      if (blocked[inst.membrane]) continue;
      blocked[inst.membrane] = 1;
      avail -= 1;
      chosen[{inst.membrane, inst.rule}] += 1;
    } else {
      chosen[{inst.membrane, inst.rule}] += avail;
      avail = 0;
    }
  }
  return finish(chosen);
}

RuleAssignment select_random(std::span<const Instance> candidates, const Configuration& config,
                             const RuleSet& rules, std::uint64_t seed) {
  std::vector<Instance> viable(candidates.begin(), candidates.end());
  std::sort(viable.begin(), viable.end());
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(config.step())));
  Pools pools(config);
  std::vector<char> blocked(config.size(), 0);
  std::map<std::pair<MembraneId, RuleId>, Count> chosen;
  while (!viable.empty()) {
    const std::size_t pick = static_cast<std::size_t>(rng() % viable.size());
    const Instance inst = viable[pick];
    const bool blocking = is_blocking(rules.rule(inst.rule).kind);
    Count& avail = pools.at(inst.region, inst.subject);
    if (avail == 0 || (blocking && blocked[inst.membrane])) {
      viable[pick] = viable.back();
      viable.pop_back();
      continue;
    }
    avail -= 1;
    chosen[{inst.membrane, inst.rule}] += 1;
    if (blocking) {
      blocked[inst.membrane] = 1;
      viable[pick] = viable.back();
      viable.pop_back();
    }
  }
  return finish(chosen);
}

}  // namespace

std::string_view to_string(SchedulingMode mode) {
  return mode == SchedulingMode::Canonical ? "canonical" : "random";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Timeout: return "timeout";
    case Outcome::MalformedRun: return "malformed";
  }
  return "?";
}

std::vector<Instance> applicable_instances(const Configuration& config, const RuleSet& rules) {
  std::vector<Instance> out;
  for (const Membrane& m : config.membranes()) detail::collect_instances(config, rules, m.id, out);
  std::sort(out.begin(), out.end());
  return out;
}

RuleAssignment select_from(std::span<const Instance> candidates, const Configuration& config,
                           const RuleSet& rules, const SchedulerPolicy& policy) {
  if (policy.mode == SchedulingMode::Canonical) return select_canonical(candidates, config, rules);
  return select_random(candidates, config, rules, policy.seed);
}

RuleAssignment select_assignment(const Configuration& config, const RuleSet& rules,
                                 const SchedulerPolicy& policy) {
  const auto candidates = applicable_instances(config, rules);
  return select_from(candidates, config, rules, policy);
}

StepOutcome apply_assignment(Configuration& config, const RuleSet& rules,
                             const RuleAssignment& assignment) {
  const std::uint64_t now = config.step() + 1;
  const auto original_size = static_cast<MembraneId>(config.size());
  StepOutcome outcome;
  std::vector<char> blocked(config.size(), 0);
  std::vector<MembraneId> touched;

  // Validate against the pre-step configuration and consume subjects.
  for (const Application& app : assignment.applications) {
    const Rule& r = rules.rule(app.rule);
    const Membrane& m = config.at(app.membrane);
    if (m.label != r.label || m.charge != r.pre) {
      throw std::logic_error("rule " + std::to_string(r.id) + " does not match membrane " +
                             std::to_string(m.id));
    }
    if (app.multiplicity == 0) throw std::logic_error("zero-multiplicity application");
    if (is_blocking(r.kind)) {
      if (app.multiplicity != 1 || blocked[m.id]) {
        throw std::logic_error("membrane " + std::to_string(m.id) +
                               " is subject to more than one blocking rule");
      }
      blocked[m.id] = 1;
    }
    if (is_division(r.kind)) {
      if (!m.parent) throw std::logic_error("the skin membrane cannot divide");
      if (r.kind == RuleKind::DivideElementary && !m.elementary()) {
        throw std::logic_error("elementary division applied to a non-elementary membrane");
      }
    }
    MembraneId region = m.id;
    if (r.kind == RuleKind::SendIn) {
      if (!m.parent) throw std::logic_error("nothing can be sent into the skin");
      region = *m.parent;
    }
    config.at(region).contents.remove(r.subject, app.multiplicity);
    touched.push_back(region);
  }

  // Evolution products.
  for (const Application& app : assignment.applications) {
    const Rule& r = rules.rule(app.rule);
    if (r.kind != RuleKind::Evolve) continue;
    auto& contents = config.at(app.membrane).contents;
    for (const auto& [symbol, n] : r.products) contents.add(symbol, n * app.multiplicity);
  }

  // Communication.
  for (const Application& app : assignment.applications) {
    const Rule& r = rules.rule(app.rule);
    Membrane& m = config.at(app.membrane);
    if (r.kind == RuleKind::SendIn) {
      m.contents.add(r.first.object);
      m.charge = r.first.charge;
      touched.push_back(m.id);
    } else if (r.kind == RuleKind::SendOut) {
      m.charge = r.first.charge;
      touched.push_back(m.id);
      if (m.parent) {
        const MembraneId p = *m.parent;
        config.at(p).contents.add(r.first.object);
        touched.push_back(p);
      } else {
        config.environment().add(r.first.object);
        outcome.emissions.push_back({now, r.first.object, 1});
      }
    }
  }

  // Divisions, deepest first.
  std::vector<std::pair<std::size_t, std::size_t>> divisions;  // (level, application index)
  for (std::size_t i = 0; i < assignment.applications.size(); ++i) {
    const auto& app = assignment.applications[i];
    if (is_division(rules.rule(app.rule).kind)) {
      divisions.emplace_back(config.level(app.membrane), i);
    }
  }
  std::sort(divisions.begin(), divisions.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return assignment.applications[a.second].membrane < assignment.applications[b.second].membrane;
  });
  std::vector<std::optional<MembraneId>> copies(assignment.applications.size());
  for (const auto& [lvl, idx] : divisions) {
    (void)lvl;
    const Application& app = assignment.applications[idx];
    const Rule& r = rules.rule(app.rule);
    const MembraneId copy = config.clone_subtree(app.membrane);
    Membrane& second = config.at(copy);
    second.contents.add(r.second.object);
    second.charge = r.second.charge;
    Membrane& first = config.at(app.membrane);
    first.contents.add(r.first.object);
    first.charge = r.first.charge;
    copies[idx] = copy;
    touched.push_back(app.membrane);
    touched.push_back(*first.parent);
  }
  for (auto id = original_size; id < config.size(); ++id) touched.push_back(id);

  outcome.events.reserve(assignment.applications.size());
  for (std::size_t i = 0; i < assignment.applications.size(); ++i) {
    const auto& app = assignment.applications[i];
    outcome.events.push_back({now, app.membrane, app.rule, app.multiplicity, copies[i]});
  }
  std::sort(outcome.events.begin(), outcome.events.end(), [](const auto& a, const auto& b) {
    return std::tie(a.membrane, a.rule) < std::tie(b.membrane, b.rule);
  });
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  outcome.touched = std::move(touched);
  config.set_step(now);
  return outcome;
}

StepOutcome step(Configuration& config, const RuleSet& rules, const SchedulerPolicy& policy) {
  return apply_assignment(config, rules, select_assignment(config, rules, policy));
}

RunResult run(Configuration config, const RuleSet& rules, const SchedulerPolicy& policy,
              const RunOptions& options) {
  if (options.max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  const auto yes = rules.symbols.find("yes");
  const auto no = rules.symbols.find("no");
  auto is_answer = [&](SymbolId s) { return (yes && s == *yes) || (no && s == *no); };

  RunResult result;
  Simulator sim(std::move(config), rules, policy);
  std::vector<Emission> answers;
  std::uint64_t performed = 0;
  while (true) {
    if (sim.halted()) {
      result.halted = true;
      break;
    }
    if (performed == options.max_steps) break;
    StepOutcome out = sim.step();
    ++performed;
    for (const auto& e : out.emissions) {
      if (is_answer(e.symbol)) answers.push_back(e);
    }
    if (options.observer) options.observer(sim.configuration(), out);
    if (options.record_trace) {
      result.trace.events.insert(result.trace.events.end(), out.events.begin(), out.events.end());
      result.trace.emissions.insert(result.trace.emissions.end(), out.emissions.begin(),
                                    out.emissions.end());
    }
  }
  result.final = std::move(sim).release();

  Verdict& v = result.verdict;
  v.steps = result.final.step();
  Count answer_copies = 0;
  for (const auto& e : answers) answer_copies += e.count;
  if (!answers.empty()) v.emission_step = answers.front().step;
  if (!result.halted) {
    v.outcome = Outcome::Timeout;
  } else if (answer_copies == 1 && answers.front().step == v.steps) {
    v.outcome = (yes && answers.front().symbol == *yes) ? Outcome::Yes : Outcome::No;
  } else {
    v.outcome = Outcome::MalformedRun;
  }
  return result;
}

std::vector<RuleAssignment> assignments_from_trace(const Trace& trace, std::uint64_t steps) {
  std::vector<RuleAssignment> out(steps);
  for (const auto& e : trace.events) {
    if (e.step == 0 || e.step > steps) throw std::out_of_range("trace event outside step range");
    out[e.step - 1].applications.push_back({e.rule, e.membrane, e.multiplicity});
  }
  return out;
}

}  // namespace mqsat::psys
