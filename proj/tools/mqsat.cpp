#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mqsat/construct/blocks.hpp"
#include "mqsat/construct/blueprint.hpp"
#include "mqsat/construct/blueprint_json.hpp"
#include "mqsat/harness/confluence.hpp"
#include "mqsat/harness/report_json.hpp"
#include "mqsat/harness/sweep.hpp"
#include "mqsat/harness/verify.hpp"
#include "mqsat/psys/trace_io.hpp"
#include "mqsat/qbf/qbf.hpp"

namespace {

using namespace mqsat;
using nlohmann::json;

enum Exit : int { kOk = 0, kDisagree = 1, kUsage = 2, kIncomplete = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_quiet = false;

void emit(const std::string& text, const std::string& path = {}) {
  if (!path.empty()) {
    std::ofstream out(path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
    return;
  }
  if (!g_quiet) std::cout << text;
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// A bitstring file holds nothing but '0'/'1' and whitespace.
qbf::QbfInstance read_formula(const std::string& path) {
  const std::string text = read_file(path);
  std::string bits;
  bool only_bits = true;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits += ch;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      only_bits = false;
      break;
    }
  }
  if (only_bits && !bits.empty()) return qbf::decode(bits);
  return qbf::parse_qdimacs(text);
}

psys::SchedulerPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "canonical") return psys::SchedulerPolicy::canonical();
  if (name == "random") return psys::SchedulerPolicy::random(seed);
  throw UsageError("unknown policy '" + name + "' (expected canonical or random)");
}

int verdict_exit(const psys::Verdict& v) {
  return v.outcome == psys::Outcome::Yes || v.outcome == psys::Outcome::No ? kOk : kIncomplete;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << v;
  return s.str();
}

struct RunArgs {
  std::string formula;
  std::string policy = "canonical";
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  int delay = -1;
};

void add_run_flags(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("formula", a.formula, "QDIMACS or bitstring file ('-' for stdin)")->required();
  cmd->add_option("--policy", a.policy, "canonical or random")->capture_default_str();
  cmd->add_option("--seed", a.seed, "seed for the random policy")->capture_default_str();
  cmd->add_option("--max-steps", a.max_steps, "step limit")->capture_default_str()->check(
      CLI::PositiveNumber);
  cmd->add_option("--delay", a.delay, "descent delay (default k)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear-depth QSAT solver on a simulated P system with active membranes"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", g_quiet, "print nothing; report through the exit code only");

  std::string in_path, out_path;
  auto* encode = app.add_subcommand("encode", "formula file -> bitstring");
  encode->add_option("formula", in_path, "QDIMACS or bitstring file")->required();
  encode->add_option("-o,--output", out_path, "output file");

  auto* decode = app.add_subcommand("decode", "bitstring file -> QDIMACS");
  decode->add_option("bits", in_path, "bitstring file")->required();
  decode->add_option("-o,--output", out_path, "output file");

  int build_n = 0;
  int build_delay = -1;
  auto* build = app.add_subcommand("build", "emit the compiled system as JSON");
  auto* build_n_opt = build->add_option("-n", build_n, "variable count (padded automatically)");
  auto* build_f_opt = build->add_option("formula", in_path, "formula file; adds the input multiset");
  build_n_opt->excludes(build_f_opt);
  build->add_option("--delay", build_delay, "descent delay (default k)");
  build->add_option("-o,--output", out_path, "output file");

  RunArgs run_args;
  std::string trace_path;
  auto* run = app.add_subcommand("run", "run the compiled system and print the verdict");
  add_run_flags(run, run_args);
  run->add_option("--trace", trace_path, "write the trace as JSON lines");

  RunArgs verify_args;
  bool verify_phases = false;
  auto* verify = app.add_subcommand("verify", "run and compare with the brute-force oracle");
  add_run_flags(verify, verify_args);
  verify->add_flag("--phases", verify_phases, "also check the generation-phase invariants");

  int sweep_n = 0;
  std::size_t sweep_count = 0;
  std::uint64_t sweep_seed = 0;
  unsigned sweep_jobs = 1;
  std::string sweep_policy = "canonical";
  std::uint64_t sweep_policy_seed = 0;
  bool sweep_runs = false;
  auto* sweep = app.add_subcommand("sweep", "verify a batch of random instances");
  sweep->add_option("-n", sweep_n, "variable count")->required()->check(CLI::Range(3, 64));
  sweep->add_option("--count", sweep_count, "number of instances")->required();
  sweep->add_option("--seed", sweep_seed, "corpus seed")->capture_default_str();
  sweep->add_option("--jobs", sweep_jobs, "worker threads (0 = all cores)")->capture_default_str();
  sweep->add_option("--policy", sweep_policy, "canonical or random")->capture_default_str();
  sweep->add_option("--policy-seed", sweep_policy_seed, "seed for the random policy");
  sweep->add_flag("--runs", sweep_runs, "include per-instance reports");

  int stats_n = 0;
  auto* stats = app.add_subcommand("stats", "depth, charge and rule counts, membrane peak");
  auto* stats_n_opt = stats->add_option("-n", stats_n, "variable count");
  auto* stats_f_opt = stats->add_option("formula", in_path, "formula file");
  stats_n_opt->excludes(stats_f_opt);

  std::vector<std::uint64_t> probe_seeds{1, 2, 3, 4, 5};
  std::string archive_dir;
  auto* probe = app.add_subcommand("probe", "confluence probe under seeded random scheduling");
  probe->add_option("formula", in_path, "formula file")->required();
  probe->add_option("--seeds", probe_seeds, "random-policy seeds (at least two)")->delimiter(',');
  probe->add_option("--archive", archive_dir, "directory for counterexample bundles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (!g_quiet) app.exit(e);
    return kUsage;
  }

  try {
    if (*encode) {
      emit(qbf::encode(read_formula(in_path)) + "\n", out_path);
      return kOk;
    }
    if (*decode) {
      std::string bits;
      for (char ch : read_file(in_path)) {
        if (!std::isspace(static_cast<unsigned char>(ch))) bits += ch;
      }
      emit(qbf::to_qdimacs(qbf::decode(bits)), out_path);
      return kOk;
    }
    if (*build) {
      if (build_n_opt->count() == 0 && in_path.empty()) throw UsageError("build needs -n or a formula");
      json out;
      if (build_n_opt->count() > 0) {
        const int n = construct::padded_size(build_n);
        out = construct::blueprint_to_json(construct::build_skeleton(n, build_delay));
      } else {
        const auto inst = read_formula(in_path);
        const auto compiled = harness::compile(inst, build_delay);
        const auto& bp = *compiled.blueprint;
        const auto input = construct::build_input(compiled.padded, bp);
        out["system"] = construct::blueprint_to_json(bp);
        out["input"] = construct::multiset_to_json(input, bp.rules.symbols);
        out["padding"] = {{"original", inst.n()},
                          {"padded", compiled.padded.n()},
                          {"added", compiled.padded.n() - inst.n()}};
        out["config_digest"] = hex(construct::configuration_digest(compiled.initial, bp.rules));
      }
      emit(out.dump() + "\n", out_path);
      return kOk;
    }
    if (*run) {
      const auto inst = read_formula(run_args.formula);
      const auto policy = make_policy(run_args.policy, run_args.seed);
      const auto compiled = harness::compile(inst, run_args.delay);
      psys::RunOptions ro;
      ro.max_steps = run_args.max_steps;
      ro.record_trace = !trace_path.empty();
      const auto result = psys::run(compiled.initial, compiled.blueprint->rules, policy, ro);
      if (!trace_path.empty()) {
        emit(psys::to_jsonl(result.trace, compiled.blueprint->rules.symbols), trace_path);
      }
      emit(harness::to_json(result.verdict).dump() + "\n");
      return verdict_exit(result.verdict);
    }
    if (*verify) {
      const auto inst = read_formula(verify_args.formula);
      harness::VerifyOptions vo;
      vo.max_steps = verify_args.max_steps;
      vo.delay = verify_args.delay;
      vo.check_phases = verify_phases;
      const auto r = harness::verify_instance(
          inst, make_policy(verify_args.policy, verify_args.seed), vo);
      emit(harness::to_json(r).dump() + "\n");
      if (verdict_exit(r.verdict) != kOk) return kIncomplete;
      if (!r.agrees || (r.phases && !r.phases->ok())) return kDisagree;
      return kOk;
    }
    if (*sweep) {
      harness::SweepOptions so;
      so.base_seed = sweep_seed;
      so.jobs = sweep_jobs;
      so.policy = make_policy(sweep_policy, sweep_policy_seed);
      if (sweep_count == 0) throw UsageError("--count must be at least 1");
      const auto rep = harness::sweep(sweep_n, sweep_count, so);
      emit(harness::to_json(rep, sweep_runs).dump(2) + "\n");
      return rep.agreements == rep.count ? kOk : kDisagree;
    }
    if (*stats) {
      qbf::QbfInstance inst;
      if (stats_n_opt->count() > 0) {
        if (stats_n < 3) throw UsageError("-n must be at least 3");
        inst = qbf::QbfInstance(std::vector<qbf::Quantifier>(static_cast<std::size_t>(stats_n),
                                                             qbf::Quantifier::Existential),
                                {});
      } else if (!in_path.empty()) {
        inst = read_formula(in_path);
      } else {
        throw UsageError("stats needs -n or a formula");
      }
      harness::VerifyOptions vo;
      const auto r = harness::verify_instance(inst, psys::SchedulerPolicy::canonical(), vo);
      const auto compiled = harness::compile(inst);
      const auto& lay = compiled.blueprint->layout;
      json families = json::array();
      const auto sizes = construct::family_sizes(compiled.blueprint->rules);
      for (std::size_t f = 1; f < sizes.size(); ++f) families.push_back(sizes[f]);
      json out{{"n", inst.n()},
               {"padded_n", lay.n},
               {"k", lay.k},
               {"l", lay.l},
               {"initial_depth", psys::depth(compiled.initial)},
               {"depth", r.depth},
               {"psi", r.psi},
               {"rules", r.rules},
               {"family_sizes", std::move(families)},
               {"membrane_peak", r.max_membranes},
               {"steps", r.verdict.steps},
               {"verdict", std::string(psys::to_string(r.verdict.outcome))}};
      emit(out.dump(2) + "\n");
      return kOk;
    }
    if (*probe) {
      const auto inst = read_formula(in_path);
      harness::ProbeOptions po;
      if (!archive_dir.empty()) po.archive_dir = archive_dir;
      const auto rep = harness::confluence_probe(inst, probe_seeds, po);
      emit(harness::to_json(rep).dump(2) + "\n");
      return kOk;
    }
  } catch (const UsageError& e) {
    if (!g_quiet) std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qbf::ParseError& e) {
    if (!g_quiet) std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const qbf::EncodingError& e) {
    if (!g_quiet) std::cerr << "encoding error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    if (!g_quiet) std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    if (!g_quiet) std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
