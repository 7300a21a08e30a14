#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbound {

/// A monomial x_1^{e_1} ... x_n^{e_n} in a ring with n >= 1 variables.
///
/// Equality and hashing ignore trailing zero exponents, so x1*x2 in three
/// variables compares equal to x1*x2 in two. Operations that build ideals
/// still check the declared variable counts.
class Monomial {
 public:
  /// The unit monomial in one variable.
  Monomial();
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t num_vars);
  /// x_{index+1}^power (variables are zero-indexed internally).
  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  int degree() const { return degree_; }
  /// Exponent of variable `index`; zero past the declared variable count.
  int exponent(std::size_t index) const { return index < exps_.size() ? exps_[index] : 0; }
  std::span<const int> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// Same monomial viewed in a ring with `num_vars` variables. Throws if a
  /// variable with positive exponent would be dropped.
  Monomial padded(std::size_t num_vars) const;

  /// Index of the last variable with positive exponent plus one.
  std::size_t support_size() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws if `divisor` does not divide *this.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Lexicographic comparison with x_1 > x_2 > ... ; shorter vectors are padded.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Ascending degree, lex-descending within a degree. Canonical order of
/// ideal generators.
struct GeneratorOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// All monomials of degree `degree` in `num_vars` variables, lex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

/// Text form: `x1^2*x3`, exponent 1 omitted, `1` for the unit monomial.
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Parses the text form. Variables must have index <= num_vars.
Monomial parse_monomial(std::string_view text, std::size_t num_vars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace cbound
