#include "cbound/lpp.hpp"

#include <algorithm>

#include "cbound/hilbert.hpp"

namespace cbound {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {
  if (d_.empty()) throw InvalidArgument("degree sequence must be non-empty");
  for (int x : d_) {
    if (x < 1) throw InvalidArgument("degrees must be >= 1");
  }
  if (!std::is_sorted(d_.begin(), d_.end())) throw InvalidArgument("degrees must be ascending");
}

DegreeSequence DegreeSequence::sorted(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  return DegreeSequence(std::move(degrees));
}

int DegreeSequence::sigma() const {
  Int s = 0;
  for (int x : d_) s = checked_add(s, x - 1);
  if (s > 1'000'000) throw OverflowError("sigma too large");
  return static_cast<int>(s);
}

Int DegreeSequence::product() const {
  Int p = 1;
  for (int x : d_) p = checked_mul(p, x);
  return p;
}

std::string to_string(const DegreeSequence& d) {
  std::string out;
  for (int x : d.values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

AciParams::AciParams(DegreeSequence d, int extra_degree) : degrees(std::move(d)), D(extra_degree) {
  if (D < 1) throw InvalidArgument("D must be >= 1");
}

int AciParams::tau_minus() const { return (sigma() + D - 1) / 2; }
int AciParams::tau_plus() const { return (sigma() + D) / 2; }

int sigma(const DegreeSequence& d) { return d.sigma(); }

Monomial lpp_monomial(const DegreeSequence& d, int D) {
  if (D < 1) throw InvalidArgument("D must be >= 1");
  const std::size_t h = d.size();
  std::vector<int> exps(D > d.sigma() ? h + 1 : h, 0);
  int remaining = D;
  for (std::size_t i = 0; i < h; ++i) {
    exps[i] = std::min(d[i] - 1, remaining);
    remaining -= exps[i];
  }
  if (remaining > 0) exps[h] = remaining;
  return Monomial(std::move(exps));
}

std::vector<int> c_sequence(const DegreeSequence& d, int D) {
  if (D < 1 || D > d.sigma()) {
    throw InvalidArgument("c-sequence needs 1 <= D <= sigma = " + std::to_string(d.sigma()) + ", got D = " +
                          std::to_string(D));
  }
  const Monomial u = lpp_monomial(d, D);
  std::vector<int> c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = d[i] - u.exponent(i);
  return c;
}

MonomialIdeal lpp_ideal(const DegreeSequence& d, int D, std::size_t num_vars) {
  const Monomial u = lpp_monomial(d, D);
  if (num_vars < u.num_vars()) {
    throw InvalidArgument("L(d;D) with D = " + std::to_string(D) + " needs at least " +
                          std::to_string(u.num_vars()) + " variables");
  }
  return sum(power_ideal(d.values(), num_vars), MonomialIdeal(num_vars, {u}));
}

Int phi(const DegreeSequence& d, int m) {
  const int s = d.sigma();
  if (m < 2 || m > s) return 0;
  const std::size_t h = d.size();
  const Int full = ci_hilbert(d.values(), h, m).at(m);
  const Int cut = hilbert_function(lpp_ideal(d, m - 1, h), m).at(m);
  return checked_sub(full, cut);
}

std::vector<Int> phi_table(const DegreeSequence& d) {
  const int s = d.sigma();
  std::vector<Int> out(static_cast<std::size_t>(s) + 2, 0);
  for (int m = 2; m <= s; ++m) out[static_cast<std::size_t>(m)] = phi(d, m);
  return out;
}

namespace {

void require_delta_domain(const DegreeSequence& d, int D) {
  if (d.size() < 4) throw InvalidArgument("delta_m needs h >= 4");
  if (D < 1 || D >= d[3]) {
    throw InvalidArgument("delta_m needs 1 <= D < d_4 = " + std::to_string(d[3]) + ", got D = " + std::to_string(D));
  }
}

}  // namespace

std::vector<Int> delta_table(const DegreeSequence& d, int D, int up_to) {
  require_delta_domain(d, D);
  if (up_to < 0) return {};
  const std::size_t h = d.size();
  const int d4 = d[3];
  const int top = std::min(up_to, d4);
  const HilbertTable full = ci_hilbert(d.values(), h, top);
  const HilbertTable cut = hilbert_function(lpp_ideal(d, D, h), top);
  std::vector<Int> out(static_cast<std::size_t>(up_to) + 1, 0);
  for (int m = 0; m <= up_to; ++m) {
    out[static_cast<std::size_t>(m)] = m <= d4 ? checked_sub(full.at(m), cut.at(m)) : phi(d, m);
  }
  return out;
}

Int delta_m(const DegreeSequence& d, int D, int m) {
  require_delta_domain(d, D);
  if (m < 0) return phi(d, m);
  return delta_table(d, D, m).back();
}

Int lpp_multiplicity(const DegreeSequence& d, int D) {
  if (D < 1) throw InvalidArgument("D must be >= 1");
  const Int total = d.product();
  if (D > d.sigma()) return checked_sub(total, 1);
  Int c_product = 1;
  for (int c : c_sequence(d, D)) c_product = checked_mul(c_product, c);
  return checked_sub(total, c_product);
}

}  // namespace cbound
