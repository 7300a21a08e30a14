#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cbound/bounds.hpp"
#include "cbound/form.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/lpp.hpp"

namespace cbound {

inline constexpr int kDefaultMaxRetries = 32;

/// Evidence recomputed from the generators of an instance.
struct AciCertification {
  /// HF(S/f) agrees with the complete-intersection Hilbert function through
  /// `checked_through`. For n = h this certifies a regular sequence; for
  /// n > h it is a certificate, not a proof.
  bool is_regular_sequence = false;
  /// HF(S/a; D) < HF(S/f; D), i.e. G is not in f.
  bool g_not_in_f = false;
  int checked_through = 0;
  HilbertTable ci_hf;   // HF(S/f; 0..checked_through)
  HilbertTable aci_hf;  // HF(S/a; 0..checked_through)
};

/// a = f + (G) over GF(p) in `num_vars` variables.
struct AciInstance {
  AciParams params;
  std::size_t num_vars;
  std::uint32_t p;
  std::vector<Form> ci_forms;
  Form extra_form;
  AciCertification certification;

  std::vector<Form> generators() const;
  bool certified() const { return certification.is_regular_sequence && certification.g_not_in_f; }
};

/// Recomputes certification evidence through degree max(sigma, D) + 1.
AciCertification certify(const AciParams& params, std::size_t num_vars, std::uint32_t p,
                         const std::vector<Form>& ci_forms, const Form& extra_form);

/// Assembles an instance from explicit generators (sorted by degree).
AciInstance make_instance(std::size_t num_vars, std::uint32_t p, std::vector<Form> ci_forms, Form extra_form);

/// h random forms of degrees d whose quotient matches the complete
/// intersection Hilbert function through sigma + 1. Throws CertificationFailed
/// after `max_retries` draws.
std::vector<Form> random_regular_sequence(const DegreeSequence& d, std::size_t num_vars, std::uint32_t p,
                                          std::uint64_t seed, int max_retries = kDefaultMaxRetries);
std::vector<Form> random_regular_sequence(const DegreeSequence& d, std::size_t num_vars, std::uint32_t p,
                                          std::mt19937_64& rng, int max_retries = kDefaultMaxRetries);

/// Certified regular sequence plus a random degree-D form outside it.
AciInstance random_aci(const AciParams& params, std::size_t num_vars, std::uint32_t p, std::uint64_t seed,
                       int max_retries = kDefaultMaxRetries);

struct DegreeCheck {
  int degree;
  Int value;
  Int bound;
  bool pass() const { return value <= bound; }
};

struct MultiplicityCheck {
  BoundTag tag;
  Int value;
  Int bound;
  bool pass() const { return value <= bound; }
};

struct DominanceResult {
  std::vector<DegreeCheck> degrees;
  std::vector<MultiplicityCheck> multiplicity;  // only for Artinian instances
  bool artinian = false;

  bool degrees_pass() const;
  bool multiplicity_pass() const;
  bool passed() const { return degrees_pass() && multiplicity_pass(); }
  std::optional<int> first_failing_degree() const;
};

/// HF(S/a; m) against hf_profile. For h = 3 every degree 0..sigma+1 is
/// checked (in n variables); otherwise n must equal h and degrees D < m <= sigma+1
/// are checked. Artinian instances also compare e(S/a) with every
/// applicable multiplicity bound.
DominanceResult check_hf_dominance(const AciInstance& inst);

/// HF(S/a; j) <= HF(S/f; j) for all checked j, strictly at j = D.
struct DefinitionCheck {
  bool passed = true;
  std::optional<int> failing_degree;
};
DefinitionCheck check_aci_definition(const AciInstance& inst);

struct LinkageResult {
  bool symmetric = true;          // HF(a/f; D+m) == HF(a/f; sigma-m)
  bool linkage_identity = true;   // HF(S/a; j) == HF(S/f; j) - HF(S/g; sigma-j)
  std::optional<int> failing_degree;
  std::vector<Int> a_over_f;      // HF(a/f; 0..sigma+1)
  bool passed() const { return symmetric && linkage_identity; }
};

/// Linkage checks for a = (x^d) + (U) and g = (x^d) : U, in h variables.
LinkageResult check_linkage_symmetry(const DegreeSequence& d, int D, const Monomial& u);

struct ExhaustiveResult {
  Int max_multiplicity = 0;
  std::vector<Monomial> maximizers;
  std::size_t candidates = 0;
  Int lpp_prediction = 0;
  bool matches_lpp = false;
  bool lpp_is_maximizer = false;
  bool passed() const { return matches_lpp && lpp_is_maximizer; }
};

/// Maximum of prod d - prod (d_i - e_i(U)) over all standard monomials U of
/// degree D of (x^d) in h variables.
ExhaustiveResult exhaustive_monomial_max(const DegreeSequence& d, int D);

}  // namespace cbound
