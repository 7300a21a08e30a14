#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbound/monomial.hpp"

namespace cbound {

/// A monomial ideal of k[x_1..x_n], stored by its minimal generators.
///
/// The generator list is kept in canonical order (ascending degree, then
/// lex-descending), so two ideals are equal iff their generator lists are.
/// An empty list is the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars);
  /// Minimalizes `gens`. Every generator is padded to `num_vars` variables.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars); }
  static MonomialIdeal unit(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;

  /// True when every variable has a pure power among the generators.
  bool is_artinian() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

/// Drops every generator divisible by another one.
MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// I : m, generated by g / gcd(g, m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// I + J; both must live in the same number of variables.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// (x_1^{d_1}, ..., x_h^{d_h}) in `num_vars` >= h variables.
MonomialIdeal power_ideal(std::span<const int> degrees, std::size_t num_vars);

/// Comma-separated monomials; "1" for the unit ideal.
std::string to_string(const MonomialIdeal& ideal);

/// Parses a comma-separated list. An empty (or all-blank) string is the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, std::size_t num_vars);

}  // namespace cbound
