#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cbound/common.hpp"
#include "cbound/monomial_ideal.hpp"

namespace cbound {

/// Degrees d_1 <= ... <= d_h of a complete intersection, each >= 1.
class DegreeSequence {
 public:
  /// Requires a non-empty, ascending sequence of positive integers.
  explicit DegreeSequence(std::vector<int> degrees);
  /// Sorts first; still rejects empty input and entries < 1.
  static DegreeSequence sorted(std::vector<int> degrees);

  std::size_t size() const { return d_.size(); }
  int operator[](std::size_t i) const { return d_[i]; }
  std::span<const int> values() const { return d_; }

  /// sigma = sum (d_i - 1), the socle degree of k[x_1..x_h]/(x^d).
  int sigma() const;
  Int product() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> d_;
};

std::string to_string(const DegreeSequence& d);

/// Degrees of an almost complete intersection: (d; D).
struct AciParams {
  DegreeSequence degrees;
  int D;

  AciParams(DegreeSequence d, int extra_degree);

  std::size_t h() const { return degrees.size(); }
  int sigma() const { return degrees.sigma(); }
  /// floor((sigma + D - 1) / 2)
  int tau_minus() const;
  /// ceil((sigma + D - 1) / 2)
  int tau_plus() const;

  friend bool operator==(const AciParams&, const AciParams&) = default;
};

int sigma(const DegreeSequence& d);

/// U_D: the lex-largest degree-D monomial outside (x^d). Lives in h variables
/// when D <= sigma and in h + 1 variables otherwise.
Monomial lpp_monomial(const DegreeSequence& d, int D);

/// c_i = d_i - e_i(U_D), so that (x^d) : U_D = (x^c). Requires 1 <= D <= sigma.
std::vector<int> c_sequence(const DegreeSequence& d, int D);

/// L(d; D) = (x^d) + (U_D) in `num_vars` variables.
MonomialIdeal lpp_ideal(const DegreeSequence& d, int D, std::size_t num_vars);

/// phi_m: HF(S/(x^d); m) - HF(S/L(d; m-1); m) in exactly h variables for
/// 2 <= m <= sigma, zero otherwise.
Int phi(const DegreeSequence& d, int m);

/// phi_0 .. phi_{sigma+1}, indexed by m.
std::vector<Int> phi_table(const DegreeSequence& d);

/// delta_m for h >= 4 and 1 <= D < d_4: HF(S/(x^d); m) - HF(S/L(d;D); m) in
/// h variables when 0 <= m <= d_4, phi_m otherwise.
Int delta_m(const DegreeSequence& d, int D, int m);

/// delta_0 .. delta_{up_to}, same preconditions as delta_m.
std::vector<Int> delta_table(const DegreeSequence& d, int D, int up_to);

/// e(S/L(d;D)): prod d - prod c when D <= sigma, prod d - 1 beyond.
Int lpp_multiplicity(const DegreeSequence& d, int D);

}  // namespace cbound
