#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbound/common.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/lpp.hpp"

namespace cbound {

/// The proven multiplicity bounds for almost complete intersections.
/// Declaration order is the tie-break order used by best_threshold.
enum class BoundTag { codim3, delta2, symmetric, phi_chain, engheta_hmmcs };

inline constexpr std::array<BoundTag, 5> kAllBoundTags = {
    BoundTag::codim3, BoundTag::delta2, BoundTag::symmetric, BoundTag::phi_chain, BoundTag::engheta_hmmcs};

std::string_view to_string(BoundTag tag);
BoundTag parse_bound_tag(std::string_view text);

// Each bound is an upper bound on e(S/a) for an almost complete intersection
// a of degrees (d; D). They throw NotApplicable outside their hypotheses.

/// prod d - sigma + D - 1 when D < sigma, else prod d - 1.
Int bound_engheta_hmmcs(const AciParams& p);
/// prod d - sum_{m=D+1}^{sigma} phi_m - 1.
Int bound_phi_chain(const AciParams& p);
/// prod d - sum_{D+1}^{tau_-} phi_m - sum_{D+1}^{tau^+} phi_m - 2, for D < sigma.
Int bound_symmetric(const AciParams& p);
/// As bound_symmetric with delta_m in place of phi_m; h >= 4, D < d_4, D < sigma.
Int bound_delta2(const AciParams& p);
/// d1 d2 d3 - c1 c2 c3, for h = 3 and D <= sigma.
Int bound_codim3(const AciParams& p);

/// Evaluates `tag`, or nullopt when its hypotheses fail.
std::optional<Int> try_bound(BoundTag tag, const AciParams& p);

/// e(S/L(d;D)), the value the EGH conjecture predicts to be optimal.
/// Proven only for h = 3.
Int egh_conjectural(const AciParams& p);

/// Per-degree upper bounds for HF(S/a; m), m = 0..up_to.
///
///  - h = 3: HF(S/L(d;D)) computed in `num_vars` variables;
///  - h >= 4 and D < d_4: HF(S/(x^d); m) - delta_m;
///  - otherwise HF(S/(x^d); m), minus phi_m for m > D.
///
/// The last two live in exactly h variables. `num_vars` defaults to h and
/// may exceed it only for h = 3.
HilbertTable hf_profile(const AciParams& p, int up_to, std::optional<std::size_t> num_vars = std::nullopt);

struct BoundEntry {
  BoundTag tag;
  std::optional<Int> value;  // empty when not applicable
  bool applicable() const { return value.has_value(); }
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundReport {
  AciParams params;
  std::vector<BoundEntry> bounds;  // one per tag, in kAllBoundTags order
  Int egh_conjectural = 0;
  Int best_bound = 0;
  Int threshold = 0;  // best_bound + 1
  BoundTag selected_tag = BoundTag::engheta_hmmcs;
  std::vector<std::string> warnings;

  const BoundEntry& entry(BoundTag tag) const;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Every bound for (d; D), the smallest applicable one and the point
/// threshold min + 1. Requires 1 <= D <= sigma.
BoundReport best_threshold(const AciParams& p);

}  // namespace cbound
