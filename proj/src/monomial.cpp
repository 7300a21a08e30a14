#include "cbound/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "cbound/common.hpp"

namespace cbound {

namespace {

int checked_int_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long parse_positive(std::string_view digits, std::string_view context) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw ParseError("bad number '" + std::string(digits) + "' in '" + std::string(context) + "'");
  }
  return value;
}

void enumerate(std::vector<int>& exps, std::size_t pos, int remaining, std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    enumerate(exps, pos + 1, remaining - e, out);
  }
}

}  // namespace

Monomial::Monomial() : exps_(1, 0) {}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw InvalidArgument("a monomial needs at least one variable");
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent");
    degree_ = checked_int_add(degree_, e);
  }
}

Monomial Monomial::one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  std::vector<int> exps(num_vars, 0);
  exps[index] = power;
  return Monomial(std::move(exps));
}

Monomial Monomial::padded(std::size_t num_vars) const {
  if (num_vars < support_size()) {
    throw InvalidArgument("cannot view " + to_string(*this) + " in " + std::to_string(num_vars) +
                          " variables");
  }
  std::vector<int> exps(num_vars, 0);
  std::copy_n(exps_.begin(), std::min(num_vars, exps_.size()), exps.begin());
  return Monomial(std::move(exps));
}

std::size_t Monomial::support_size() const {
  std::size_t k = exps_.size();
  while (k > 0 && exps_[k - 1] == 0) --k;
  return k;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> exps(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = checked_int_add(exponent(i), other.exponent(i));
  return Monomial(std::move(exps));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divides(divisor, *this)) {
    throw InvalidArgument(to_string(divisor) + " does not divide " + to_string(*this));
  }
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= divisor.exponent(i);
  return Monomial(std::move(exps));
}

bool operator==(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.exponent(i) != b.exponent(i)) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.num_vars(), b.num_vars());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.num_vars(), b.num_vars());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.exponent(i) > b.exponent(i)) return false;
  }
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> exps(std::max(a.num_vars(), b.num_vars()));
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> exps(std::max(a.num_vars(), b.num_vars()));
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(exps));
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> exps(num_vars, 0);
  enumerate(exps, 0, degree, out);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial");
  std::vector<int> exps(num_vars, 0);
  if (text == "1") return Monomial(std::move(exps));

  while (true) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("bad factor '" + std::string(factor) + "' in '" + std::string(whole) + "'");
    }
    factor.remove_prefix(1);
    const auto caret = factor.find('^');
    const long index = parse_positive(trim(factor.substr(0, caret)), whole);
    long power = 1;
    if (caret != std::string_view::npos) power = parse_positive(trim(factor.substr(caret + 1)), whole);
    if (index < 1 || static_cast<std::size_t>(index) > num_vars) {
      throw ParseError("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(num_vars));
    }
    if (power > 1'000'000) throw ParseError("exponent too large in '" + std::string(whole) + "'");
    exps[index - 1] = checked_int_add(exps[index - 1], static_cast<int>(power));
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  const std::size_t k = m.support_size();
  for (std::size_t i = 0; i < k; ++i) {
    h ^= static_cast<std::size_t>(m.exponent(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cbound
