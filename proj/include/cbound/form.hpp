#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cbound/monomial.hpp"
#include "cbound/prime_field.hpp"

namespace cbound {

struct Term {
  Monomial monomial;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A homogeneous polynomial over GF(p). Terms are kept lex-descending with
/// nonzero coefficients reduced mod p; like monomials are merged.
class Form {
 public:
  Form(std::size_t num_vars, int degree, std::uint32_t p, std::vector<Term> terms);

  static Form from_monomial(const Monomial& m, std::size_t num_vars, std::uint32_t p);

  std::size_t num_vars() const { return n_; }
  int degree() const { return degree_; }
  std::uint32_t characteristic() const { return p_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// m * f, with m a monomial in the same ring.
  Form times(const Monomial& m) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::size_t n_;
  int degree_;
  std::uint32_t p_;
  std::vector<Term> terms_;
};

/// `3*x1^2 + x2*x3`; `0` for the zero form.
std::string to_string(const Form& f);

/// Uniform draw from [0, bound) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Coefficients drawn uniformly from GF(p) over the full degree-`degree` basis.
Form random_form(std::size_t num_vars, int degree, std::uint32_t p, std::mt19937_64& rng);

}  // namespace cbound
