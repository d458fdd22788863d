#include "mqsat/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

namespace mqsat::harness {

std::vector<RunReport> verify_all(const std::vector<qbf::QbfInstance>& instances,
                                  const psys::SchedulerPolicy& policy, const VerifyOptions& verify,
                                  unsigned jobs, BlueprintCache& cache) {
  std::vector<RunReport> out(instances.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        out[i] = verify_instance(instances[i], policy, verify, &cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SweepReport summarize(int n, std::vector<RunReport> runs, const psys::SchedulerPolicy& policy,
                      double elapsed_ms) {
  SweepReport rep;
  rep.n = n;
  rep.count = runs.size();
  rep.policy = policy;
  rep.elapsed_ms = elapsed_ms;
  std::vector<std::uint64_t> steps;
  for (const auto& r : runs) {
    if (r.agrees) ++rep.agreements;
    if (r.verdict.outcome == psys::Outcome::Timeout) ++rep.timeouts;
    if (r.verdict.outcome == psys::Outcome::MalformedRun) ++rep.malformed;
    rep.max_membranes = std::max(rep.max_membranes, r.max_membranes);
    steps.push_back(r.verdict.steps);
  }
  if (!steps.empty()) {
    std::sort(steps.begin(), steps.end());
    rep.steps_min = steps.front();
    rep.steps_max = steps.back();
    rep.steps_median = steps[(steps.size() - 1) / 2];
    rep.agreement_rate = static_cast<double>(rep.agreements) / static_cast<double>(runs.size());
  }
  rep.runs = std::move(runs);
  return rep;
}

SweepReport sweep(int n, std::size_t count, const SweepOptions& options) {
  if (count == 0) throw std::invalid_argument("sweep needs at least one instance");
  const auto start = std::chrono::steady_clock::now();
  std::vector<qbf::QbfInstance> instances;
  instances.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    instances.push_back(random_instance(n, instance_seed(options.base_seed, i)));
  }
  BlueprintCache cache;
  auto runs = verify_all(instances, options.policy, options.verify, options.jobs, cache);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return summarize(n, std::move(runs), options.policy, elapsed.count());
}

}  // namespace mqsat::harness
