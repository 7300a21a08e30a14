#include "cbound/bounds.hpp"

#include <algorithm>

namespace cbound {

std::string_view to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::codim3:
      return "codim3";
    case BoundTag::delta2:
      return "delta2";
    case BoundTag::symmetric:
      return "symmetric";
    case BoundTag::phi_chain:
      return "phi_chain";
    case BoundTag::engheta_hmmcs:
      return "engheta_hmmcs";
  }
  return "?";
}

BoundTag parse_bound_tag(std::string_view text) {
  for (BoundTag tag : kAllBoundTags) {
    if (to_string(tag) == text) return tag;
  }
  throw ParseError("unknown bound tag '" + std::string(text) + "'");
}

namespace {

// sum_{m=from}^{to} values[m]; empty when to < from.
Int range_sum(const std::vector<Int>& values, int from, int to) {
  Int s = 0;
  for (int m = from; m <= to; ++m) {
    if (m >= 0 && static_cast<std::size_t>(m) < values.size()) s = checked_add(s, values[static_cast<std::size_t>(m)]);
  }
  return s;
}

Int two_sided(const AciParams& p, const std::vector<Int>& drops) {
  Int b = p.degrees.product();
  b = checked_sub(b, range_sum(drops, p.D + 1, p.tau_minus()));
  b = checked_sub(b, range_sum(drops, p.D + 1, p.tau_plus()));
  return checked_sub(b, 2);
}

std::string describe(const AciParams& p) {
  return "(" + to_string(p.degrees) + ";" + std::to_string(p.D) + ")";
}

}  // namespace

Int bound_engheta_hmmcs(const AciParams& p) {
  const Int total = p.degrees.product();
  if (p.D < p.sigma()) return checked_sub(checked_add(checked_sub(total, p.sigma()), p.D), 1);
  return checked_sub(total, 1);
}

Int bound_phi_chain(const AciParams& p) {
  if (p.D > p.sigma()) throw NotApplicable("phi_chain needs D <= sigma for " + describe(p));
  const auto table = phi_table(p.degrees);
  return checked_sub(checked_sub(p.degrees.product(), range_sum(table, p.D + 1, p.sigma())), 1);
}

Int bound_symmetric(const AciParams& p) {
  if (p.D >= p.sigma()) throw NotApplicable("symmetric needs D < sigma for " + describe(p));
  return two_sided(p, phi_table(p.degrees));
}

Int bound_delta2(const AciParams& p) {
  if (p.h() < 4) throw NotApplicable("delta2 needs h >= 4 for " + describe(p));
  if (p.D >= p.degrees[3]) throw NotApplicable("delta2 needs D < d_4 for " + describe(p));
  if (p.D >= p.sigma()) throw NotApplicable("delta2 needs D < sigma for " + describe(p));
  return two_sided(p, delta_table(p.degrees, p.D, p.tau_plus()));
}

Int bound_codim3(const AciParams& p) {
  if (p.h() != 3) throw NotApplicable("codim3 needs h = 3 for " + describe(p));
  if (p.D > p.sigma()) throw NotApplicable("codim3 needs D <= sigma for " + describe(p));
  return lpp_multiplicity(p.degrees, p.D);
}

std::optional<Int> try_bound(BoundTag tag, const AciParams& p) {
  try {
    switch (tag) {
      case BoundTag::codim3:
        return bound_codim3(p);
      case BoundTag::delta2:
        return bound_delta2(p);
      case BoundTag::symmetric:
        return bound_symmetric(p);
      case BoundTag::phi_chain:
        return bound_phi_chain(p);
      case BoundTag::engheta_hmmcs:
        return bound_engheta_hmmcs(p);
    }
  } catch (const NotApplicable&) {
  }
  return std::nullopt;
}

Int egh_conjectural(const AciParams& p) { return lpp_multiplicity(p.degrees, p.D); }

HilbertTable hf_profile(const AciParams& p, int up_to, std::optional<std::size_t> num_vars) {
  if (p.D > p.sigma()) throw InvalidArgument("hf_profile needs D <= sigma for " + describe(p));
  if (up_to < 0) throw InvalidArgument("up_to must be >= 0");
  const std::size_t h = p.h();
  const std::size_t n = num_vars.value_or(h);
  if (n < h) throw InvalidArgument("hf_profile needs at least h variables");
  if (h == 3) return hilbert_function(lpp_ideal(p.degrees, p.D, n), up_to);
  if (n != h) throw InvalidArgument("hf_profile in more than h variables is only known for h = 3");

  const HilbertTable full = ci_hilbert(p.degrees.values(), h, up_to);
  std::vector<Int> values = full.values;
  if (h >= 4 && p.D < p.degrees[3]) {
    const auto drops = delta_table(p.degrees, p.D, up_to);
    for (int m = 0; m <= up_to; ++m) values[m] = checked_sub(values[m], drops[m]);
  } else {
    const auto drops = phi_table(p.degrees);
    for (int m = p.D + 1; m <= up_to; ++m) {
      if (static_cast<std::size_t>(m) < drops.size()) values[m] = checked_sub(values[m], drops[m]);
    }
  }
  return make_table(std::move(values));
}

const BoundEntry& BoundReport::entry(BoundTag tag) const {
  auto it = std::find_if(bounds.begin(), bounds.end(), [&](const BoundEntry& e) { return e.tag == tag; });
  if (it == bounds.end()) throw InvalidArgument("report has no entry for " + std::string(to_string(tag)));
  return *it;
}

BoundReport best_threshold(const AciParams& p) {
  if (p.D > p.sigma()) {
    throw InvalidArgument("no point threshold for D > sigma: " + describe(p) + " has sigma = " +
                          std::to_string(p.sigma()));
  }
  BoundReport report{p, {}, egh_conjectural(p), 0, 0, BoundTag::engheta_hmmcs, {}};
  std::optional<Int> best;
  for (BoundTag tag : kAllBoundTags) {
    const auto value = try_bound(tag, p);
    report.bounds.push_back({tag, value});
    // Strict comparison keeps the earliest tag on ties.
    if (value && (!best || *value < *best)) {
      best = value;
      report.selected_tag = tag;
    }
  }
  report.best_bound = *best;  // engheta_hmmcs always applies
  report.threshold = checked_add(report.best_bound, 1);
  if (p.D == p.sigma()) {
    report.warnings.push_back("D = sigma: the bound is prod d - 1, so the threshold equals prod d and is vacuous");
  }
  return report;
}

}  // namespace cbound
