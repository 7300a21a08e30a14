// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cbound/bounds.hpp"
#include "cbound/campaign.hpp"
#include "cbound/graded_rank.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/lpp.hpp"
#include "cbound/serialize.hpp"
#include "cbound/verifier.hpp"
#include "oracles.hpp"

using namespace cbound;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && cond;
  }
  Outcome done(const std::string& summary) const {
    if (ok_) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, "first failure: " + first_failure_};
  }

 private:
  bool ok_ = true;
  long checks_ = 0;
  std::string first_failure_;
};

AciParams params(std::vector<int> d, int D) { return AciParams(DegreeSequence(std::move(d)), D); }

std::string name(const std::vector<int>& d, int D) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ";" + std::to_string(D) + ")";
}

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Outcome c_sequences() {
  Tally t;
  t.expect(c_sequence(DegreeSequence({4, 4, 4}), 4) == std::vector<int>{1, 3, 4}, "c(4,4,4;4)");
  t.expect(c_sequence(DegreeSequence({3, 3, 3}), 3) == std::vector<int>{1, 2, 3}, "c(3,3,3;3)");
  return t.done("c(4,4,4;4) = (1,3,4), c(3,3,3;3) = (1,2,3)");
}

Outcome three_surfaces() {
  Tally t;
  for (int D = 2; D <= 6; ++D) {
    const BoundReport r = best_threshold(params({D, D, D}, D));
    t.expect(r.threshold == D * D * D - D * D + D + 1, "threshold " + name({D, D, D}, D) + " = " + std::to_string(r.threshold));
  }
  return t.done("D = 2..6");
}

Outcome four_cubics() {
  Tally t;
  const BoundReport r = best_threshold(params({3, 3, 3, 3}, 3));
  t.expect(r.threshold == 70, "threshold = " + std::to_string(r.threshold));
  t.expect(r.selected_tag == BoundTag::symmetric, "selected " + std::string(to_string(r.selected_tag)));
  return t.done("threshold 70 via symmetric");
}

Outcome example_44410() {
  Tally t;
  const AciParams p = params({4, 4, 4, 10}, 4);
  const BoundReport r = best_threshold(p);
  t.expect(r.threshold == 532 && r.selected_tag == BoundTag::delta2, "delta2 threshold = " + std::to_string(r.threshold));
  t.expect(bound_symmetric(p) + 1 == 612, "phi-based = " + std::to_string(bound_symmetric(p) + 1));
  t.expect(r.egh_conjectural + 1 == 521, "egh + 1 = " + std::to_string(r.egh_conjectural + 1));
  return t.done("532 / 612 / 521");
}

Outcome cubics() {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    const AciParams p = params(std::vector<int>(2 * n, 3), 3);
    const Int th = best_threshold(p).threshold;
    t.expect(th == ipow(3, 2 * n) - (6 * n * n - 8 * n + 3), "threshold n = " + std::to_string(n) + ": " + std::to_string(th));
    const auto phis = phi_table(p.degrees);
    const Int s = std::accumulate(phis.begin() + 4, phis.begin() + 2 * n + 2, Int{0});
    t.expect(s == 3 * n * n - 4 * n + 1, "phi sum n = " + std::to_string(n) + ": " + std::to_string(s));
  }
  return t.done("n = 2,3,4");
}

Outcome quadrics() {
  Tally t;
  for (int n = 3; n <= 8; ++n) {
    for (int D = 1; D < n; ++D) {
      const Int th = best_threshold(params(std::vector<int>(n, 2), D)).threshold;
      t.expect(th == ipow(2, n) - (3 * (n - D) * (n - D) + 1) / 4,
               "n = " + std::to_string(n) + ", D = " + std::to_string(D) + ": " + std::to_string(th));
    }
  }
  return t.done("n = 3..8, 1 <= D < n");
}

Outcome colon_identity() {
  Tally t;
  for (const auto& d : oracle::degree_sweep(4, 1, 5)) {
    const DegreeSequence ds(d);
    const MonomialIdeal f = power_ideal(d, d.size());
    for (int D = 1; D <= ds.sigma(); ++D) {
      const MonomialIdeal g = colon(f, lpp_monomial(ds, D));
      t.expect(g == power_ideal(c_sequence(ds, D), d.size()), name(d, D));
    }
  }
  return t.done("entries <= 5, h <= 4");
}

std::vector<oracle::Exps> raw(const MonomialIdeal& I) {
  std::vector<oracle::Exps> out;
  for (const auto& g : I.generators()) {
    const Monomial p = g.padded(I.num_vars());
    out.emplace_back(p.exponents().begin(), p.exponents().end());
  }
  return out;
}

Outcome oracle_equivalence() {
  Tally t;
  std::mt19937_64 rng(20240601);
  int cases = 0;
  for (int k = 0; k < 150; ++k, ++cases) {
    const std::size_t n = 1 + k % 5;
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      oracle::Exps e = oracle::random_exps(rng, n, 8);
      if (std::accumulate(e.begin(), e.end(), 0) == 0) e[0] = 1;
      gens.emplace_back(e);
    }
    const MonomialIdeal I(n, gens);
    t.expect(hilbert_function(I, 10).values == oracle::enum_hf(raw(I), n, 10), "random ideal " + to_string(I));
  }
  for (int k = 0; k < 120; ++k, ++cases) {
    const std::size_t n = 1 + k % 5;
    const std::size_t h = 1 + rng() % n;
    std::vector<int> d(h);
    for (auto& x : d) x = 1 + static_cast<int>(rng() % 8);
    std::sort(d.begin(), d.end());
    const int up_to = 12;
    const auto split = hilbert_function(power_ideal(d, n), up_to).values;
    t.expect(split == oracle::enum_hf(oracle::pure_powers(d, n), n, up_to), "power ideal enum " + name(d, 0));
    t.expect(split == ci_hilbert(d, n, up_to).values, "power ideal ci " + name(d, 0));
    t.expect(split == oracle::series_ci(d, n, up_to), "power ideal series " + name(d, 0));
  }
  return t.done(std::to_string(cases) + " randomized cases, n <= 5, degrees <= 8");
}

Outcome exhaustive_egh() {
  Tally t;
  long runs = 0;
  for (const auto& d : oracle::degree_sweep(4, 1, 4)) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D, ++runs) {
      const ExhaustiveResult r = exhaustive_monomial_max(ds, D);
      t.expect(r.matches_lpp, name(d, D) + " max " + std::to_string(r.max_multiplicity) + " vs " +
                                  std::to_string(lpp_multiplicity(ds, D)));
      t.expect(r.lpp_is_maximizer, name(d, D) + " U_D not a maximizer");
    }
  }
  return t.done(std::to_string(runs) + " (d;D) pairs, entries <= 4, h <= 4");
}

Outcome linkage() {
  Tally t;
  long instances = 0;
  for (const auto& d : oracle::degree_sweep(4, 1, 5)) {
    const DegreeSequence ds(d);
    const MonomialIdeal f = power_ideal(d, d.size());
    for (int D = 1; D <= ds.sigma(); ++D) {
      for (const auto& u : standard_monomials(f, D)) {
        ++instances;
        const LinkageResult r = check_linkage_symmetry(ds, D, u);
        t.expect(r.passed(), name(d, D) + " U = " + to_string(u));
      }
    }
  }
  return t.done(std::to_string(instances) + " monomial ACIs");
}

std::string report_key(const CampaignReport& r) { return to_json(r).dump(); }

Outcome campaigns() {
  Tally t;
  long trials = 0;
  auto run = [&](CampaignConfig c, const std::string& label) {
    const CampaignReport r = run_campaign(c);
    trials += r.attempted;
    t.expect(r.failed == 0, label + ": " + std::to_string(r.failed) + " failures" +
                                (r.failures.empty() ? "" : " e.g. " + to_json(r.failures.front()).dump()));
    t.expect(r.certification_failures == 0, label + ": certification failures");
    return r;
  };

  // (a) Artinian, three variables.
  for (const auto& d : oracle::degree_sweep(3, 1, 4, 3)) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D) {
      CampaignConfig c{ds, D, 3};
      c.trials = 200;
      c.seed = 101;
      c.checks = {Check::aci_definition, Check::hf_dominance};
      run(c, "(a) " + name(d, D));
    }
  }

  // (b) h = 3 in four variables.
  for (const auto& d : oracle::degree_sweep(3, 1, 3, 3)) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D) {
      CampaignConfig c{ds, D, 4};
      c.trials = 100;
      c.seed = 202;
      c.checks = {Check::aci_definition, Check::hf_dominance};
      run(c, "(b) " + name(d, D));
    }
  }

  // (c) four cubics, D = 3.
  {
    CampaignConfig c{DegreeSequence({3, 3, 3, 3}), 3, 4};
    c.trials = 100;
    c.seed = 303;
    const CampaignReport r = run(c, "(c) (3,3,3,3;3)");
    t.expect(r.per_check.at("multiplicity").failed == 0, "(c) multiplicity");
    // Independent recheck of the phi profile and e(S/a) <= 69 on the first trials.
    const AciParams p = params({3, 3, 3, 3}, 3);
    const auto ci = ci_hilbert(p.degrees.values(), 4, 9);
    const auto phis = phi_table(p.degrees);
    for (long i = 0; i < 10; ++i) {
      const AciInstance inst = random_aci(p, 4, 101, trial_seed(c.seed, static_cast<std::uint64_t>(i)));
      const auto gens = inst.generators();
      const HilbertTable hf = graded_rank_hf(gens, 4, 101, 9);
      for (int m = 4; m <= 8; ++m) t.expect(hf.at(m) <= ci.at(m) - phis[m], "(c) trial " + std::to_string(i) + " degree " + std::to_string(m));
      t.expect(hf.at(9) == 0 && hf.total() <= 69, "(c) trial " + std::to_string(i) + " e = " + std::to_string(hf.total()));
    }
  }

  // Determinism: identical reports for different thread counts.
  CampaignConfig c{DegreeSequence({2, 3, 3}), 3, 3};
  c.trials = 60;
  c.seed = 9;
  c.threads = 1;
  const std::string one = report_key(run_campaign(c));
  c.threads = 3;
  t.expect(one == report_key(run_campaign(c)), "reports differ across thread counts");

  return t.done(std::to_string(trials) + " trials, 0 failures, seed-deterministic");
}

std::vector<std::vector<int>> full_sweep() { return oracle::degree_sweep(5, 1, 6); }

Outcome bound_ordering() {
  Tally t;
  long pairs = 0;
  for (const auto& d : full_sweep()) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D, ++pairs) {
      const BoundReport r = best_threshold(AciParams(ds, D));
      const auto sym = r.entry(BoundTag::symmetric).value;
      const auto chain = r.entry(BoundTag::phi_chain).value;
      const auto eh = r.entry(BoundTag::engheta_hmmcs).value;
      if (sym && chain) t.expect(*sym <= *chain, name(d, D) + " symmetric > phi_chain");
      if (chain && eh) t.expect(*chain <= *eh, name(d, D) + " phi_chain > engheta_hmmcs");
      for (const auto& e : r.bounds) {
        if (e.value) t.expect(*e.value >= r.egh_conjectural, name(d, D) + " " + std::string(to_string(e.tag)) + " < egh");
      }
    }
  }
  return t.done(std::to_string(pairs) + " (d;D) pairs, entries <= 6, h <= 5");
}

Outcome phi_shape() {
  Tally t;
  long seqs = 0;
  for (const auto& d : full_sweep()) {
    ++seqs;
    const DegreeSequence ds(d);
    const auto phis = phi_table(ds);
    for (int m = 2; m <= ds.sigma(); ++m) t.expect(phis[m] > 0, name(d, m) + " phi not positive");
    for (int m = 2; m < ds.sigma(); ++m) t.expect(phis[m] >= phis[m + 1], name(d, m) + " phi increases");
  }
  return t.done(std::to_string(seqs) + " degree sequences");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"c-sequences", c_sequences},
      {"three surfaces in P^3: D^3 - D^2 + D + 1", three_surfaces},
      {"four cubics in P^4, D = 3: threshold 70", four_cubics},
      {"(4,4,4,10;4): 532 / 612 / 521", example_44410},
      {"2n cubics in P^2n: threshold and phi sum", cubics},
      {"n quadrics in P^n: closed form", quadrics},
      {"colon identity (x^d) : U_D = (x^c)", colon_identity},
      {"Hilbert function oracle equivalence", oracle_equivalence},
      {"exhaustive monomial maximum equals LPP", exhaustive_egh},
      {"linkage symmetry of monomial ACIs", linkage},
      {"random-field campaigns", campaigns},
      {"bound ordering and EGH dominance", bound_ordering},
      {"phi positivity and monotonicity", phi_shape},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [label, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("%s  [%2d] %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", index, label.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
