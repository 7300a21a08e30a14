#include "cbound/verifier.hpp"

#include <algorithm>

#include "cbound/graded_rank.hpp"

namespace cbound {

namespace {

int certification_degree(const AciParams& params) { return std::max(params.sigma(), params.D) + 1; }

bool matches_ci(const HilbertTable& actual, const HilbertTable& expected) { return actual.values == expected.values; }

struct CertifiedSequence {
  std::vector<Form> forms;
  HilbertTable hf;
};

CertifiedSequence draw_regular_sequence(const DegreeSequence& d, std::size_t num_vars, std::uint32_t p, int through,
                                        std::mt19937_64& rng, int max_retries) {
  if (d.size() > num_vars) {
    throw InvalidArgument("a regular sequence of length " + std::to_string(d.size()) + " needs at least that many variables");
  }
  const PrimeField field(p);
  const HilbertTable expected = ci_hilbert(d.values(), num_vars, through);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Form> forms;
    for (int deg : d.values()) forms.push_back(random_form(num_vars, deg, p, rng));
    HilbertTable hf = graded_rank_hf(forms, num_vars, p, through);
    if (matches_ci(hf, expected)) return {std::move(forms), std::move(hf)};
  }
  throw CertificationFailed("no regular sequence of degrees (" + to_string(d) + ") certified over GF(" +
                            std::to_string(p) + ") after " + std::to_string(max_retries) +
                            " attempts; try a larger prime");
}

}  // namespace

std::vector<Form> AciInstance::generators() const {
  std::vector<Form> gens = ci_forms;
  gens.push_back(extra_form);
  return gens;
}

AciCertification certify(const AciParams& params, std::size_t num_vars, std::uint32_t p,
                         const std::vector<Form>& ci_forms, const Form& extra_form) {
  AciCertification cert;
  cert.checked_through = certification_degree(params);
  cert.ci_hf = graded_rank_hf(ci_forms, num_vars, p, cert.checked_through);
  cert.is_regular_sequence =
      params.h() <= num_vars && matches_ci(cert.ci_hf, ci_hilbert(params.degrees.values(), num_vars, cert.checked_through));
  std::vector<Form> gens = ci_forms;
  gens.push_back(extra_form);
  cert.aci_hf = graded_rank_hf(gens, num_vars, p, cert.checked_through);
  cert.g_not_in_f = cert.aci_hf.at(params.D) < cert.ci_hf.at(params.D);
  return cert;
}

AciInstance make_instance(std::size_t num_vars, std::uint32_t p, std::vector<Form> ci_forms, Form extra_form) {
  if (ci_forms.empty()) throw InvalidArgument("need at least one form in the complete intersection");
  std::stable_sort(ci_forms.begin(), ci_forms.end(), [](const Form& a, const Form& b) { return a.degree() < b.degree(); });
  std::vector<int> degrees;
  for (const auto& f : ci_forms) degrees.push_back(f.degree());
  AciParams params(DegreeSequence(std::move(degrees)), extra_form.degree());
  AciCertification cert = certify(params, num_vars, p, ci_forms, extra_form);
  return AciInstance{std::move(params), num_vars, p, std::move(ci_forms), std::move(extra_form), std::move(cert)};
}

std::vector<Form> random_regular_sequence(const DegreeSequence& d, std::size_t num_vars, std::uint32_t p,
                                          std::mt19937_64& rng, int max_retries) {
  return draw_regular_sequence(d, num_vars, p, d.sigma() + 1, rng, max_retries).forms;
}

std::vector<Form> random_regular_sequence(const DegreeSequence& d, std::size_t num_vars, std::uint32_t p,
                                          std::uint64_t seed, int max_retries) {
  std::mt19937_64 rng(seed);
  return random_regular_sequence(d, num_vars, p, rng, max_retries);
}

AciInstance random_aci(const AciParams& params, std::size_t num_vars, std::uint32_t p, std::uint64_t seed,
                       int max_retries) {
  std::mt19937_64 rng(seed);
  const int through = certification_degree(params);
  CertifiedSequence f = draw_regular_sequence(params.degrees, num_vars, p, through, rng, max_retries);
  if (f.hf.at(params.D) == 0) {
    throw CertificationFailed("every form of degree " + std::to_string(params.D) + " already lies in f");
  }
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Form g = random_form(num_vars, params.D, p, rng);
    std::vector<Form> gens = f.forms;
    gens.push_back(g);
    HilbertTable aci = graded_rank_hf(gens, num_vars, p, through);
    if (aci.at(params.D) < f.hf.at(params.D)) {
      AciCertification cert{true, true, through, std::move(f.hf), std::move(aci)};
      return AciInstance{params, num_vars, p, std::move(f.forms), std::move(g), std::move(cert)};
    }
  }
  throw CertificationFailed("no degree-" + std::to_string(params.D) + " form outside f found over GF(" +
                            std::to_string(p) + ") after " + std::to_string(max_retries) + " attempts");
}

bool DominanceResult::degrees_pass() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeCheck& c) { return c.pass(); });
}

bool DominanceResult::multiplicity_pass() const {
  return std::all_of(multiplicity.begin(), multiplicity.end(), [](const MultiplicityCheck& c) { return c.pass(); });
}

std::optional<int> DominanceResult::first_failing_degree() const {
  for (const auto& c : degrees) {
    if (!c.pass()) return c.degree;
  }
  return std::nullopt;
}

DominanceResult check_hf_dominance(const AciInstance& inst) {
  if (!inst.certified()) throw CertificationFailed("instance is not certified as an almost complete intersection");
  const AciParams& p = inst.params;
  if (p.D > p.sigma()) throw InvalidArgument("dominance is only checked for D <= sigma");
  const int top = p.sigma() + 1;
  const HilbertTable aci = inst.certification.checked_through >= top
                               ? inst.certification.aci_hf
                               : graded_rank_hf(inst.generators(), inst.num_vars, inst.p, top);

  DominanceResult result;
  if (p.h() == 3) {
    const HilbertTable profile = hf_profile(p, top, inst.num_vars);
    for (int m = 0; m <= top; ++m) result.degrees.push_back({m, aci.at(m), profile.at(m)});
  } else {
    if (inst.num_vars != p.h()) {
      throw InvalidArgument("for h != 3 dominance is only checked for Artinian instances (n == h)");
    }
    const HilbertTable profile = hf_profile(p, top);
    for (int m = p.D + 1; m <= top; ++m) result.degrees.push_back({m, aci.at(m), profile.at(m)});
  }

  result.artinian = inst.num_vars == p.h() && aci.at(top) == 0;
  if (result.artinian) {
    const Int e = aci.total();
    for (BoundTag tag : kAllBoundTags) {
      if (auto b = try_bound(tag, p)) result.multiplicity.push_back({tag, e, *b});
    }
  }
  return result;
}

DefinitionCheck check_aci_definition(const AciInstance& inst) {
  const auto& cert = inst.certification;
  DefinitionCheck out;
  for (int j = 0; j <= cert.checked_through; ++j) {
    const Int a = cert.aci_hf.at(j);
    const Int f = cert.ci_hf.at(j);
    const bool ok = j == inst.params.D ? a < f : a <= f;
    if (!ok) {
      out.passed = false;
      out.failing_degree = j;
      break;
    }
  }
  return out;
}

LinkageResult check_linkage_symmetry(const DegreeSequence& d, int D, const Monomial& u) {
  const int s = d.sigma();
  const std::size_t h = d.size();
  if (D < 1 || D > s) throw InvalidArgument("linkage check needs 1 <= D <= sigma");
  if (u.degree() != D) throw InvalidArgument("U must have degree D");
  if (u.support_size() > h) throw InvalidArgument("U must involve only x1..x" + std::to_string(h));
  const MonomialIdeal f = power_ideal(d.values(), h);
  const Monomial uu = u.padded(h);
  if (f.contains(uu)) throw InvalidArgument(to_string(u) + " lies in (x^d)");

  const MonomialIdeal a = sum(f, MonomialIdeal(h, {uu}));
  const MonomialIdeal g = colon(f, uu);
  const int top = s + 1;
  const HilbertTable hf_f = hilbert_function(f, top);
  const HilbertTable hf_a = hilbert_function(a, top);
  const HilbertTable hf_g = hilbert_function(g, top);

  LinkageResult out;
  out.a_over_f.resize(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) out.a_over_f[j] = hf_f.at(j) - hf_a.at(j);
  auto quotient = [&](int j) -> Int { return j < 0 || j > top ? 0 : out.a_over_f[j]; };

  for (int m = -top; m <= top; ++m) {
    if (quotient(D + m) != quotient(s - m)) {
      out.symmetric = false;
      out.failing_degree = D + m;
      break;
    }
  }
  for (int j = 0; j <= top; ++j) {
    if (hf_a.at(j) != hf_f.at(j) - hf_g.at(s - j)) {
      out.linkage_identity = false;
      if (!out.failing_degree) out.failing_degree = j;
      break;
    }
  }
  return out;
}

ExhaustiveResult exhaustive_monomial_max(const DegreeSequence& d, int D) {
  const int s = d.sigma();
  if (D < 1 || D > s) {
    throw InvalidArgument("exhaustive search needs 1 <= D <= sigma = " + std::to_string(s) + ", got " + std::to_string(D));
  }
  const std::size_t h = d.size();
  const Int total = d.product();
  ExhaustiveResult out;
  bool first = true;
  for (auto& u : standard_monomials(power_ideal(d.values(), h), D)) {
    Int colon_mult = 1;
    for (std::size_t i = 0; i < h; ++i) colon_mult = checked_mul(colon_mult, d[i] - u.exponent(i));
    const Int mult = total - colon_mult;
    ++out.candidates;
    if (first || mult > out.max_multiplicity) {
      out.max_multiplicity = mult;
      out.maximizers.clear();
      first = false;
    }
    if (mult == out.max_multiplicity) out.maximizers.push_back(std::move(u));
  }
  out.lpp_prediction = lpp_multiplicity(d, D);
  out.matches_lpp = out.max_multiplicity == out.lpp_prediction;
  const Monomial lpp = lpp_monomial(d, D);
  out.lpp_is_maximizer = std::find(out.maximizers.begin(), out.maximizers.end(), lpp) != out.maximizers.end();
  return out;
}

}  // namespace cbound
