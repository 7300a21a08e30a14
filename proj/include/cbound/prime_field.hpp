#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cbound {

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for primes p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  Elem reduce(std::int64_t v) const;
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem inv(Elem a) const;

 private:
  std::uint32_t p_;
};

/// Row echelon basis over GF(p), grown one row at a time. Rows are dense and
/// stored row-major; every stored row has a leading 1 in a distinct column.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, std::size_t columns);

  /// Reduces `row` against the basis; appends it and returns true when it
  /// is independent of the rows already present.
  bool insert(std::vector<PrimeField::Elem> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  bool full() const { return rows_.size() == columns_; }

 private:
  PrimeField field_;
  std::size_t columns_;
  std::vector<std::vector<PrimeField::Elem>> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index, -1 if none
};

/// Rank of a dense matrix over GF(p).
std::size_t rank_mod_p(const std::vector<std::vector<PrimeField::Elem>>& rows, std::uint32_t p);

}  // namespace cbound
