#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "mqsat/harness/confluence.hpp"
#include "mqsat/harness/phase_check.hpp"
#include "mqsat/harness/report_json.hpp"
#include "mqsat/harness/sweep.hpp"
#include "mqsat/harness/verify.hpp"
#include "mqsat/psys/trace_io.hpp"

using namespace mqsat;
using namespace mqsat::harness;
using psys::Outcome;
using psys::SchedulerPolicy;
using qbf::Quantifier;

namespace {

constexpr auto E = Quantifier::Existential;
constexpr auto A = Quantifier::Universal;

qbf::Clause3 cl(int a, int b, int c) { return qbf::Clause3::from_literals({a, b, c}); }

}  // namespace

TEST_CASE("verify examples") {
  const auto yes = verify_instance(qbf::QbfInstance({E, E, E, E}, {cl(1, 2, 3)}),
                                   SchedulerPolicy::canonical());
  CHECK(yes.verdict.outcome == Outcome::Yes);
  CHECK(yes.oracle);
  CHECK(yes.agrees);
  CHECK(yes.depth == 3);
  CHECK(yes.max_membranes == 1 + 4 + 16);
  CHECK(yes.padded_n == 4);
  CHECK(!yes.trace);

  const auto no = verify_instance(qbf::QbfInstance({A, A, A, A}, {cl(1, 2, 3)}),
                                  SchedulerPolicy::canonical());
  CHECK(no.verdict.outcome == Outcome::No);
  CHECK_FALSE(no.oracle);
  CHECK(no.agrees);

  VerifyOptions opt;
  opt.record_trace = true;
  opt.check_phases = true;
  const auto padded = verify_instance(qbf::QbfInstance({A, E, E}, {cl(-1, 2, 3)}),
                                      SchedulerPolicy::random(2), opt);
  CHECK(padded.n == 3);
  CHECK(padded.padded_n == 4);
  CHECK(padded.agrees);
  REQUIRE(padded.trace);
  REQUIRE(padded.phases);
  CHECK(padded.phases->ok());

  VerifyOptions tight;
  tight.max_steps = 3;
  const auto cut = verify_instance(qbf::QbfInstance({E, E, E, E}, {}), SchedulerPolicy::canonical(), tight);
  CHECK(cut.verdict.outcome == Outcome::Timeout);
  CHECK_FALSE(cut.agrees);
}

TEST_CASE("instance digests follow the encoding") {
  const auto a = qbf::QbfInstance({E, E, E, E}, {cl(1, 2, 3)});
  const auto b = qbf::QbfInstance({E, E, E, A}, {cl(1, 2, 3)});
  CHECK(instance_digest(a) == instance_digest(a));
  CHECK(instance_digest(a) != instance_digest(b));
  CHECK(instance_seed(1, 0) != instance_seed(1, 1));
}

TEST_CASE("blueprint cache shares systems per size") {
  BlueprintCache cache;
  const auto a = cache.get(4);
  CHECK(a == cache.get(4));
  CHECK(a != cache.get(4, 0));
  CHECK(a->layout.delay == 2);
  CHECK(cache.get(4, 0)->layout.delay == 0);
}

TEST_CASE("sweeps agree with the oracle") {
  SweepOptions opt;
  opt.base_seed = 100;
  const auto s4 = sweep(4, 50, opt);
  CHECK(s4.count == 50);
  CHECK(s4.agreements == 50);
  CHECK(s4.agreement_rate == 1.0);
  CHECK(s4.timeouts == 0);
  CHECK(s4.malformed == 0);
  CHECK(s4.steps_min <= s4.steps_median);
  CHECK(s4.steps_median <= s4.steps_max);
  REQUIRE(s4.runs.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(s4.runs[i].digest == instance_digest(random_instance(4, instance_seed(100, i))));
  }

  opt.jobs = 2;
  opt.policy = SchedulerPolicy::random(8);
  const auto s6 = sweep(6, 20, opt);
  CHECK(s6.agreements == 20);
  CHECK(s6.max_membranes >= 64);

  const auto j = to_json(s6);
  CHECK(j.at("agreement_rate") == 1.0);
  CHECK_FALSE(j.contains("runs"));
  CHECK(to_json(s6, true).at("runs").size() == 20);

  CHECK_THROWS_AS(sweep(4, 0), std::invalid_argument);
}

TEST_CASE("parallel verification keeps input order") {
  BlueprintCache cache;
  std::vector<qbf::QbfInstance> list;
  for (std::uint64_t s = 0; s < 12; ++s) list.push_back(random_instance(4 + static_cast<int>(s % 3), s));
  const auto serial = verify_all(list, SchedulerPolicy::canonical(), {}, 1, cache);
  const auto parallel = verify_all(list, SchedulerPolicy::canonical(), {}, 3, cache);
  REQUIRE(serial.size() == list.size());
  REQUIRE(parallel.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(serial[i].digest == instance_digest(list[i]));
    CHECK(parallel[i].digest == serial[i].digest);
    CHECK(parallel[i].verdict == serial[i].verdict);
  }
}

TEST_CASE("confluence probe runs canonical plus every seed") {
  const auto q = random_instance(4, 31);
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  const auto rep = confluence_probe(q, seeds);
  REQUIRE(rep.runs.size() == 4);
  CHECK(rep.runs[0].policy == SchedulerPolicy::canonical());
  CHECK(rep.runs[2].policy == SchedulerPolicy::random(2));
  CHECK(rep.oracle == qbf::oracle_eval(q));
  CHECK(rep.runs[0].agrees);
  CHECK(rep.runs[0].phase_violations == 0);
  // Random schedules are not guaranteed to preserve the verdict; flag only.
  CHECK_NOFAIL(rep.verdicts_equal);
  CHECK_NOFAIL(rep.agreements == 4);
  for (const auto& r : rep.runs) CHECK(r.archived.has_value() == false);
  const std::vector<std::uint64_t> one{1};
  CHECK_THROWS_AS(confluence_probe(q, one), std::invalid_argument);
  CHECK(to_json(rep).at("runs").size() == 4);
}

TEST_CASE("suspicious probe runs are archived with instance, seed and trace") {
  const auto dir = std::filesystem::temp_directory_path() / "mqsat-probe-test";
  std::filesystem::remove_all(dir);
  ProbeOptions opt;
  opt.max_steps = 5;  // every run times out, so every random run is suspicious
  opt.archive_dir = dir;
  const auto q = random_instance(4, 9);
  const std::vector<std::uint64_t> seeds{4, 5};
  const auto rep = confluence_probe(q, seeds, opt);
  CHECK(rep.agreements == 0);
  CHECK(!rep.runs[0].archived);
  for (std::size_t i = 1; i < rep.runs.size(); ++i) {
    REQUIRE(rep.runs[i].archived);
    std::ifstream in(*rep.runs[i].archived);
    const auto bundle = nlohmann::json::parse(in);
    CHECK(bundle.at("seed") == seeds[i - 1]);
    CHECK(qbf::parse_qdimacs(bundle.at("instance").get<std::string>()) == q);
    CHECK(qbf::decode(bundle.at("bits").get<std::string>()) == q);
    CHECK_FALSE(bundle.at("trace").get<std::string>().empty());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical seeds give identical traces") {
  VerifyOptions opt;
  opt.record_trace = true;
  const auto q = random_instance(6, 4);
  const auto a = verify_instance(q, SchedulerPolicy::random(7), opt);
  const auto b = verify_instance(q, SchedulerPolicy::random(7), opt);
  REQUIRE(a.trace);
  REQUIRE(b.trace);
  CHECK(*a.trace == *b.trace);
  const auto c = verify_instance(q, SchedulerPolicy::random(8), opt);
  CHECK(c.verdict.outcome == a.verdict.outcome);
}

TEST_CASE("phase checker accepts canonical and random runs") {
  VerifyOptions opt;
  opt.check_phases = true;
  for (int n : {4, 6}) {
    for (std::uint64_t s = 0; s < 4; ++s) {
      const auto q = random_instance(n, 500 + s);
      for (const auto& policy : {SchedulerPolicy::canonical(), SchedulerPolicy::random(s)}) {
        const auto rep = verify_instance(q, policy, opt);
        REQUIRE(rep.phases);
        INFO("n=" << n << " seed=" << s);
        for (const auto& v : rep.phases->violations) INFO(v.kind << ": " << v.detail);
        CHECK(rep.phases->ok());
        CHECK(rep.phases->elementary_membranes == (std::size_t{1} << n));
        CHECK(rep.phases->depth == 3);
      }
    }
  }
}

TEST_CASE("phase checker flags a system without descent delay") {
  VerifyOptions opt;
  opt.check_phases = true;
  opt.delay = 0;
  const auto rep = verify_instance(qbf::QbfInstance({E, A, E, A}, {cl(1, 2, 3)}),
                                   SchedulerPolicy::canonical(), opt);
  REQUIRE(rep.phases);
  bool timing = false;
  for (const auto& v : rep.phases->violations) timing |= v.kind == "timing";
  CHECK(timing);
  CHECK_FALSE(rep.phases->ok());
}

TEST_CASE("phase checker reports an unfinished generation phase") {
  const auto compiled = compile(qbf::QbfInstance({E, E, E, E}, {cl(1, 2, 3)}));
  psys::RunOptions opt;
  opt.max_steps = 4;
  const auto r = psys::run(compiled.initial, compiled.blueprint->rules, SchedulerPolicy::canonical(), opt);
  const auto rep = check_phase_invariants(r.trace, r.verdict.steps, *compiled.blueprint, compiled.initial);
  CHECK(!rep.generation_complete);
  CHECK_FALSE(rep.ok());
  bool incomplete = false;
  for (const auto& v : rep.violations) incomplete |= v.kind == "incomplete";
  CHECK(incomplete);
}

TEST_CASE("run reports serialize to JSON") {
  const auto rep = verify_instance(qbf::QbfInstance({E, E, E, E}, {cl(1, 2, 3)}), SchedulerPolicy::random(3));
  const auto j = to_json(rep);
  CHECK(j.at("verdict").at("outcome") == "yes");
  CHECK(j.at("agrees") == true);
  CHECK(j.at("policy").at("mode") == "random");
  CHECK_FALSE(j.contains("trace"));
}
