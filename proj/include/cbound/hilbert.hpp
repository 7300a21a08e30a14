#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cbound/common.hpp"
#include "cbound/monomial_ideal.hpp"

namespace cbound {

/// HF(S/I; 0..bound). `artinian_certified` is set when some value in the
/// table is zero, which forces every later value to vanish as well.
struct HilbertTable {
  std::vector<Int> values;
  int bound = 0;
  bool artinian_certified = false;

  Int at(int degree) const;  // zero for negative degrees and past the table
  Int total() const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

/// Builds a table from raw values, deriving `bound` and the certification flag.
HilbertTable make_table(std::vector<Int> values);

/// True when every zero in the table is followed only by zeros.
bool vanishes_monotonically(const HilbertTable& table);

/// Hilbert function by the splitting recursion
///   HF(S/I; m) = HF(S/(I:x_i); m-1) + HF(S/(I + (x_i)); m),
/// memoized on the canonical generator list.
HilbertTable hilbert_function(const MonomialIdeal& ideal, int up_to);

/// Degree-m monomials outside the ideal, lex-descending.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree);

/// Coefficients of prod (1 - t^{d_i}) / (1 - t)^n.
HilbertTable ci_hilbert(std::span<const int> degrees, std::size_t num_vars, int up_to);

/// Total dimension of S/I. Throws NotArtinian unless every variable has a
/// pure power among the generators.
Int artinian_multiplicity(const MonomialIdeal& ideal);

}  // namespace cbound
