#include "mqsat/harness/verify.hpp"

#include <random>
#include <set>

#include "mqsat/construct/blocks.hpp"
#include "mqsat/util/hash.hpp"

namespace mqsat::harness {

qbf::QbfInstance random_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<qbf::Quantifier> prefix;
  for (int i = 0; i < n; ++i) {
    prefix.push_back((rng() & 1u) ? qbf::Quantifier::Universal : qbf::Quantifier::Existential);
  }
  const std::uint64_t space = qbf::clause_space(n);
  const std::uint64_t max_m = std::min<std::uint64_t>(3 * static_cast<std::uint64_t>(n), space);
  const std::uint64_t m = 1 + rng() % max_m;
  std::set<std::uint64_t> chosen;
  while (chosen.size() < m) chosen.insert(rng() % space);
  std::vector<qbf::Clause3> matrix;
  for (auto idx : chosen) matrix.push_back(qbf::clause_at(idx, n));
  return qbf::QbfInstance(std::move(prefix), std::move(matrix));
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed + index);
}

std::vector<qbf::QbfInstance> exhaustive_small_corpus() {
  const std::vector<qbf::Clause3> pool = {
      qbf::Clause3::from_literals({1, 2, 3}),   qbf::Clause3::from_literals({-1, 2, -4}),
      qbf::Clause3::from_literals({1, -3, 4}),  qbf::Clause3::from_literals({-2, -3, -4}),
      qbf::Clause3::from_literals({-1, -2, 3}), qbf::Clause3::from_literals({2, 3, -4}),
  };
  std::vector<std::vector<qbf::Clause3>> matrices;
  const auto size = static_cast<unsigned>(pool.size());
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<qbf::Clause3> m;
    for (unsigned b = 0; b < size; ++b) {
      if (mask & (1u << b)) m.push_back(pool[b]);
    }
    matrices.push_back(std::move(m));
  }
  std::vector<qbf::QbfInstance> out;
  for (unsigned q = 0; q < 16; ++q) {
    std::vector<qbf::Quantifier> prefix;
    for (int i = 0; i < 4; ++i) {
      prefix.push_back((q >> (3 - i)) & 1u ? qbf::Quantifier::Universal : qbf::Quantifier::Existential);
    }
    for (const auto& m : matrices) out.emplace_back(prefix, m);
  }
  return out;
}

std::shared_ptr<const construct::Blueprint> BlueprintCache::get(int n, int delay) {
  const int k = construct::ceil_log2(n);
  const auto key = std::make_pair(n, delay < 0 ? k : delay);
  std::lock_guard lock(mutex_);
  auto& slot = cache_[key];
  if (!slot) slot = std::make_shared<const construct::Blueprint>(construct::build_skeleton(n, key.second));
  return slot;
}

std::uint64_t instance_digest(const qbf::QbfInstance& instance) {
  return fnv1a64(qbf::encode(instance));
}

Compiled compile(const qbf::QbfInstance& instance, int delay, BlueprintCache* cache) {
  auto [padded, report] = construct::pad(instance);
  (void)report;
  Compiled out;
  out.blueprint = cache ? cache->get(padded.n(), delay)
                        : std::make_shared<const construct::Blueprint>(
                              construct::build_skeleton(padded.n(), delay));
  out.initial = construct::assemble(*out.blueprint, construct::build_input(padded, *out.blueprint));
  out.padded = std::move(padded);
  return out;
}

RunReport verify_instance(const qbf::QbfInstance& instance, const psys::SchedulerPolicy& policy,
                          const VerifyOptions& options, BlueprintCache* cache) {
  Compiled compiled = compile(instance, options.delay, cache);
  const auto& bp = *compiled.blueprint;
  RunReport r;
  r.digest = instance_digest(instance);
  r.n = instance.n();
  r.padded_n = compiled.padded.n();
  r.m = instance.m();
  r.policy = policy;
  r.psi = bp.rules.charges.size();
  r.rules = bp.rules.size();
  psys::RunOptions ro;
  ro.max_steps = options.max_steps;
  ro.record_trace = options.record_trace || options.check_phases;
  auto result = psys::run(compiled.initial, bp.rules, policy, ro);
  r.verdict = result.verdict;
  // Membranes never dissolve, so the final tree is the largest one.
  r.max_membranes = psys::membrane_total(result.final);
  r.depth = psys::depth(result.final);
  r.oracle = qbf::oracle_eval(instance);
  r.agrees = (r.verdict.outcome == psys::Outcome::Yes && r.oracle) ||
             (r.verdict.outcome == psys::Outcome::No && !r.oracle);
  if (options.check_phases) {
    r.phases = check_phase_invariants(result.trace, result.verdict.steps, bp, compiled.initial);
  }
  if (options.record_trace) r.trace = std::move(result.trace);
  return r;
}

}  // namespace mqsat::harness
