#include "cbound/prime_field.hpp"

#include "cbound/common.hpp"

namespace cbound {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw InvalidArgument("characteristic must be below 2^31");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  // Fermat: a^(p-2).
  Elem result = 1;
  Elem base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

EchelonBasis::EchelonBasis(const PrimeField& field, std::size_t columns)
    : field_(field), columns_(columns), pivot_row_(columns, -1) {}

bool EchelonBasis::insert(std::vector<PrimeField::Elem> row) {
  if (row.size() != columns_) throw InvalidArgument("row width mismatch");
  const std::uint64_t p = field_.characteristic();
  std::size_t lead = columns_;
  for (std::size_t col = 0; col < columns_; ++col) {
    const PrimeField::Elem c = row[col];
    if (c == 0) continue;
    const std::ptrdiff_t r = pivot_row_[col];
    if (r < 0) {
      lead = col;
      break;
    }
    // row -= c * rows_[r]; the pivot row has a leading 1 at `col`.
    const auto& piv = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t factor = p - c;
    for (std::size_t k = col; k < columns_; ++k) {
      if (piv[k] != 0) row[k] = static_cast<PrimeField::Elem>((row[k] + factor * piv[k]) % p);
    }
  }
  if (lead == columns_) return false;
  const PrimeField::Elem scale = field_.inv(row[lead]);
  for (std::size_t k = lead; k < columns_; ++k) row[k] = field_.mul(row[k], scale);
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::size_t rank_mod_p(const std::vector<std::vector<PrimeField::Elem>>& rows, std::uint32_t p) {
  const PrimeField field(p);
  if (rows.empty()) return 0;
  EchelonBasis basis(field, rows.front().size());
  for (const auto& r : rows) {
    std::vector<PrimeField::Elem> reduced(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) reduced[k] = r[k] % p;
    basis.insert(std::move(reduced));
    if (basis.full()) break;
  }
  return basis.rank();
}

}  // namespace cbound
