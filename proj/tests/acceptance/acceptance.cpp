// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqsat/construct/blueprint.hpp"
#include "mqsat/harness/confluence.hpp"
#include "mqsat/harness/sweep.hpp"
#include "mqsat/harness/verify.hpp"
#include "mqsat/psys/trace_io.hpp"

using namespace mqsat;
using harness::RunReport;
using psys::Outcome;
using psys::SchedulerPolicy;

namespace {

struct Line {
  int id;
  bool pass;
  std::string text;
};

std::vector<Line> results;

void report(int id, bool pass, const std::string& text) {
  results.push_back({id, pass, text});
  std::printf("%s %d: %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
}

std::uint64_t choose3(std::uint64_t n) { return n * (n - 1) * (n - 2) / 6; }

std::pair<std::uint64_t, std::uint64_t> closed_form_rules_psi(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  const std::uint64_t l = n / k;
  const std::uint64_t B = std::uint64_t{1} << k;
  const std::uint64_t M = 8 * choose3(n);
  const std::uint64_t d = k;
  const std::uint64_t sites = 1 + (l - 1) * B;
  const std::uint64_t placement = (l - 1) * (l - 2) / 2 * B * B + (l - 1) * B + B;
  const std::uint64_t clauses = (l - 1) * M * B + M + B * (M + l - 2) + (l - 1) * B + 1;
  const std::uint64_t division = (l - 1) * k * B * B / 2 + k * B / 2;
  const std::uint64_t descent = k * l * (l - 1) * (d + 1) * B * B + k * (l - 2) * (l - 1) * B * B +
                                2 * (n - k) * (n - k) * B;
  const std::uint64_t checking = 2 * B + 4 * (n - 1) * B + 3 * M * B + 2 * B + B + M * B + B;
  const std::uint64_t folding = sites * B * (2 * (B - 1) + 4 * (B - 1) + 2 * (B - 1 - k) + 2 * k) +
                                2 * (l - 1) * B * B + 2 * B;
  const std::uint64_t rules = placement + clauses + division + descent + checking + folding;
  const std::uint64_t psi = 2 + B + B * B * B + 2 * B * B * (B - 1) + (n - k + 1) * B + 2 * n * B + B;
  return {rules, psi};
}

// Least-squares polynomial of the given degree; returns the coefficients.
std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y, int degree) {
  const int m = degree + 1;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) a[r][c] += std::pow(x[i], r + c);
      a[r][m] += y[i] * std::pow(x[i], r);
    }
  }
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> coef(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) coef[r] = a[r][m] / a[r][r];
  return coef;
}

// Random prefix with exactly m distinct random clauses.
qbf::QbfInstance fixed_m_instance(int n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(n));
  std::vector<qbf::Quantifier> prefix;
  for (int i = 0; i < n; ++i) prefix.push_back(rng() & 1 ? qbf::Quantifier::Universal : qbf::Quantifier::Existential);
  std::set<std::uint64_t> picked;
  const std::uint64_t space = qbf::clause_space(n);
  while (picked.size() < m) picked.insert(rng() % space);
  std::vector<qbf::Clause3> matrix;
  for (auto c : picked) matrix.push_back(qbf::clause_at(c, n));
  return qbf::QbfInstance(std::move(prefix), std::move(matrix));
}

double polyval(const std::vector<double>& coef, double x) {
  double v = 0.0;
  for (std::size_t i = coef.size(); i-- > 0;) v = v * x + coef[i];
  return v;
}

std::string fmt(double v, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string archive;
  unsigned jobs = 1;
  app.add_option("--archive", archive, "Directory for counterexample bundles");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  harness::BlueprintCache cache;

  // 1: oracle agreement over the exhaustive corpus and random corpora.
  std::vector<RunReport> corpus_runs;
  {
    auto small = harness::exhaustive_small_corpus();
    std::vector<qbf::QbfInstance> r4, r6;
    for (std::uint64_t i = 0; i < 200; ++i) r4.push_back(harness::random_instance(4, harness::instance_seed(4000, i)));
    for (std::uint64_t i = 0; i < 200; ++i) r6.push_back(harness::random_instance(6, harness::instance_seed(6000, i)));
    std::size_t agree = 0;
    std::size_t total = 0;
    std::string parts;
    for (const auto* set : {&small, &r4, &r6}) {
      auto runs = harness::verify_all(*set, SchedulerPolicy::canonical(), {}, jobs, cache);
      std::size_t a = 0;
      for (const auto& r : runs) a += r.agrees;
      parts += (parts.empty() ? "" : ", ") + std::to_string(a) + "/" + std::to_string(runs.size());
      agree += a;
      total += runs.size();
      corpus_runs.insert(corpus_runs.end(), runs.begin(), runs.end());
    }
    report(1, agree == total,
           "oracle agreement " + std::to_string(agree) + "/" + std::to_string(total) +
               " (exhaustive n=4, random n=4, random n=6: " + parts + ")");
  }

  // 2: membrane depth after generation, and at every step.
  {
    bool ok = true;
    std::string parts;
    const std::map<int, std::size_t> want{{4, 3}, {6, 3}, {12, 4}};
    for (const auto& [n, depth] : want) {
      std::set<std::size_t> seen;
      for (std::uint64_t i = 0; i < 3; ++i) {
        const auto r = harness::verify_instance(harness::random_instance(n, 12000 + i),
                                                SchedulerPolicy::canonical(), {}, &cache);
        seen.insert(r.depth);
        ok &= r.agrees;
      }
      ok &= seen == std::set<std::size_t>{depth};
      parts += (parts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " depth " +
               std::to_string(*seen.rbegin()) + " (expected " + std::to_string(depth) + ")";
    }
    report(2, ok, parts);
  }

  // 3: generation phase produces 2^n elementary membranes with full identifier coverage.
  {
    bool ok = true;
    std::string parts;
    harness::VerifyOptions opt;
    opt.check_phases = true;
    for (int n : {4, 6}) {
      std::size_t good = 0;
      std::set<std::size_t> counts;
      const std::size_t tries = 20;
      for (std::uint64_t i = 0; i < tries; ++i) {
        const auto policy = i % 2 ? SchedulerPolicy::random(i) : SchedulerPolicy::canonical();
        const auto r = harness::verify_instance(harness::random_instance(n, 3000 + i), policy, opt, &cache);
        good += r.phases && r.phases->ok();
        if (r.phases) counts.insert(r.phases->elementary_membranes);
      }
      ok &= good == tries && counts == std::set<std::size_t>{std::size_t{1} << n};
      parts += (parts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
               std::to_string(good) + "/" + std::to_string(tries) + " clean, elementary " +
               std::to_string(*counts.rbegin());
    }
    report(3, ok, parts);
  }

  // 4: every run halts with a single answer in its final step.
  {
    std::size_t malformed = 0, timeouts = 0, late = 0;
    for (const auto& r : corpus_runs) {
      malformed += r.verdict.outcome == Outcome::MalformedRun;
      timeouts += r.verdict.outcome == Outcome::Timeout;
      late += !r.verdict.emission_step || *r.verdict.emission_step != r.verdict.steps;
    }
    report(4, malformed == 0 && timeouts == 0 && late == 0,
           std::to_string(corpus_runs.size()) + " runs, malformed " + std::to_string(malformed) +
               ", timeouts " + std::to_string(timeouts) + ", answer before final step " +
               std::to_string(late));
  }

  // 5: system size and running time grow polynomially.
  {
    bool ok = true;
    std::string parts;
    const std::vector<int> sizes{4, 6, 12, 16};
    for (int n : sizes) {
      const auto bp = cache.get(n);
      const auto [rules, psi] = closed_form_rules_psi(static_cast<std::uint64_t>(n));
      ok &= bp->rules.size() == rules && bp->rules.charges.size() == psi;
      parts += "n=" + std::to_string(n) + " |R|=" + std::to_string(bp->rules.size()) +
               (bp->rules.size() == rules ? "" : "!=" + std::to_string(rules)) + " |Psi|=" +
               std::to_string(bp->rules.charges.size()) +
               (bp->rules.charges.size() == psi ? "" : "!=" + std::to_string(psi)) + "; ";
    }
    // Four sizes and degree 2 leave one degree of freedom, so the fit can miss.
    const int degree = std::min<int>(4, static_cast<int>(sizes.size()) - 2);
    for (std::size_t m : {3u, 12u}) {
      std::vector<double> xs, ys;
      std::string row;
      for (int n : sizes) {
        std::vector<std::uint64_t> steps;
        for (std::uint64_t i = 0; i < 3; ++i) {
          const auto r = harness::verify_instance(fixed_m_instance(n, m, 5000 + i),
                                                  SchedulerPolicy::canonical(), {}, &cache);
          ok &= r.agrees;
          steps.push_back(r.verdict.steps);
        }
        std::sort(steps.begin(), steps.end());
        xs.push_back(n);
        ys.push_back(static_cast<double>(steps[1]));
        row += (row.empty() ? "" : "/") + std::to_string(steps[1]);
      }
      const auto coef = polyfit(xs, ys, degree);
      const double top = *std::max_element(ys.begin(), ys.end());
      double worst = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(polyval(coef, xs[i]) - ys[i]));
      ok &= worst < 0.10 * top;
      parts += "m=" + std::to_string(m) + " steps " + row + " residual " + fmt(100.0 * worst / top) + "% of max; ";
    }
    report(5, ok, parts + "degree-" + std::to_string(degree) + " least-squares fit over n=4/6/12/16");
  }

  // 6: runs are reproducible byte for byte.
  {
    bool ok = true;
    std::size_t compared = 0;
    for (int n : {4, 6}) {
      const auto compiled = harness::compile(harness::random_instance(n, 600 + static_cast<std::uint64_t>(n)), -1, &cache);
      const auto& rs = compiled.blueprint->rules;
      for (const auto& policy : {SchedulerPolicy::canonical(), SchedulerPolicy::random(17)}) {
        std::set<std::string> traces;
        for (int rep = 0; rep < 3; ++rep) {
          traces.insert(psys::to_jsonl(psys::run(compiled.initial, rs, policy).trace, rs.symbols));
        }
        ok &= traces.size() == 1 && !traces.begin()->empty();
        ++compared;
      }
    }
    report(6, ok, std::to_string(compared) + " (instance, policy) pairs, 3 runs each, traces identical");
  }

  // 7: how often verdicts survive nondeterministic choices; reported, not asserted.
  {
    harness::ProbeOptions opt;
    if (!archive.empty()) opt.archive_dir = std::filesystem::path(archive);
    const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t runs = 0, agree = 0, split = 0, violations = 0, suspicious = 0, archived = 0;
    bool complete = true;
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto rep = harness::confluence_probe(harness::random_instance(4, 7000 + i), seeds, opt, &cache);
      complete &= rep.runs.size() == seeds.size() + 1;
      runs += rep.runs.size();
      agree += rep.agreements;
      split += !rep.verdicts_equal;
      for (std::size_t r = 0; r < rep.runs.size(); ++r) {
        violations += rep.runs[r].phase_violations;
        if (r > 0 && (!rep.runs[r].agrees || rep.runs[r].phase_violations > 0)) ++suspicious;
        archived += rep.runs[r].archived.has_value();
      }
    }
    const bool archive_ok = archive.empty() || archived == suspicious;
    report(7, complete && archive_ok,
           "20 instances x (canonical + 5 seeds): agreement " +
               fmt(100.0 * static_cast<double>(agree) / static_cast<double>(runs)) + "% (" +
               std::to_string(agree) + "/" + std::to_string(runs) + "), split verdicts " +
               std::to_string(split) + ", phase violations " + std::to_string(violations) +
               ", counterexamples archived " + std::to_string(archived) + "/" + std::to_string(suspicious));
  }

  const bool all = std::all_of(results.begin(), results.end(), [](const Line& l) { return l.pass; });
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
