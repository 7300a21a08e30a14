#include "cbound/reproduce.hpp"

#include "cbound/bounds.hpp"
#include "cbound/lpp.hpp"

namespace cbound {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string params_name(const AciParams& p) { return "(" + to_string(p.degrees) + ";" + std::to_string(p.D) + ")"; }

std::string with_tag(Int value, BoundTag tag) { return std::to_string(value) + " [" + std::string(to_string(tag)) + "]"; }

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

std::vector<ManifestRow> run_reproduction() {
  std::vector<ManifestRow> rows;
  auto add = [&](std::string name, std::string expected, std::string computed) {
    rows.push_back({std::move(name), std::move(expected), std::move(computed)});
  };

  add("c-sequence (4,4,4;4)", "(1,3,4)", join(c_sequence(DegreeSequence({4, 4, 4}), 4)));
  add("c-sequence (3,3,3;3)", "(1,2,3)", join(c_sequence(DegreeSequence({3, 3, 3}), 3)));

  // Plane curves: a curve of degree d1 + d2 - 3 through all but one point.
  {
    const AciParams p(DegreeSequence({3, 3}), 3);
    add("threshold " + params_name(p), "8", std::to_string(best_threshold(p).threshold));
  }

  // Three surfaces of degree D in P^3.
  for (int D = 2; D <= 6; ++D) {
    const AciParams p(DegreeSequence({D, D, D}), D);
    const Int expected = D * D * D - D * D + D + 1;
    add("threshold " + params_name(p), with_tag(expected, BoundTag::codim3),
        with_tag(best_threshold(p).threshold, best_threshold(p).selected_tag));
  }

  {
    const AciParams p(DegreeSequence({3, 3, 3, 3}), 3);
    const BoundReport r = best_threshold(p);
    add("threshold " + params_name(p), with_tag(70, BoundTag::symmetric), with_tag(r.threshold, r.selected_tag));
    add("EGH-predicted threshold " + params_name(p), "64", std::to_string(r.egh_conjectural + 1));
  }

  {
    const AciParams p(DegreeSequence({4, 4, 4, 10}), 4);
    const BoundReport r = best_threshold(p);
    add("threshold " + params_name(p), with_tag(532, BoundTag::delta2), with_tag(r.threshold, r.selected_tag));
    add("phi-based threshold " + params_name(p), "612", std::to_string(bound_symmetric(p) + 1));
    add("EGH-predicted threshold " + params_name(p), "521", std::to_string(r.egh_conjectural + 1));
  }

  // 2n cubics in P^{2n}, D = 3.
  for (int n = 2; n <= 4; ++n) {
    const AciParams p(DegreeSequence(std::vector<int>(2 * n, 3)), 3);
    const auto phis = phi_table(p.degrees);
    Int phi_sum = 0;
    for (int m = 4; m <= 2 * n + 1; ++m) phi_sum += phis[m];
    add("cubics in P^" + std::to_string(2 * n) + ": sum phi_4..phi_" + std::to_string(2 * n + 1),
        std::to_string(3 * n * n - 4 * n + 1), std::to_string(phi_sum));
    add("cubics in P^" + std::to_string(2 * n) + ": sigma, tau_-, tau^+",
        std::to_string(4 * n) + "," + std::to_string(2 * n + 1) + "," + std::to_string(2 * n + 1),
        std::to_string(p.sigma()) + "," + std::to_string(p.tau_minus()) + "," + std::to_string(p.tau_plus()));
    add("cubics in P^" + std::to_string(2 * n) + ": threshold " + params_name(p),
        std::to_string(ipow(3, 2 * n) - (6 * n * n - 8 * n + 3)), std::to_string(best_threshold(p).threshold));
  }

  // n quadrics in P^n.
  for (int n = 3; n <= 8; ++n) {
    for (int D = 1; D < n; ++D) {
      const AciParams p(DegreeSequence(std::vector<int>(n, 2)), D);
      const Int expected = ipow(2, n) - (3 * (n - D) * (n - D) + 1) / 4;
      add("quadrics in P^" + std::to_string(n) + ": threshold " + params_name(p), std::to_string(expected),
          std::to_string(best_threshold(p).threshold));
    }
  }
  return rows;
}

}  // namespace cbound
