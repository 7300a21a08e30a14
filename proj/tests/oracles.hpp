#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw exponent vectors and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Int = std::int64_t;

inline void for_each_of_degree(std::size_t n, int degree, const std::function<void(const Exps&)>& fn) {
  Exps e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      fn(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n == 0) {
    if (degree == 0) fn(e);
    return;
  }
  rec(0, degree);
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > (i < b.size() ? b[i] : 0)) return false;
  }
  return true;
}

inline bool in_ideal(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

/// HF(S/I; 0..up_to) by counting monomials outside I.
inline std::vector<Int> enum_hf(const std::vector<Exps>& gens, std::size_t n, int up_to) {
  std::vector<Int> out;
  for (int m = 0; m <= up_to; ++m) {
    Int count = 0;
    for_each_of_degree(n, m, [&](const Exps& e) { count += in_ideal(gens, e) ? 0 : 1; });
    out.push_back(count);
  }
  return out;
}

/// Coefficients of prod (1 - t^{d_i}) / (1 - t)^n through t^up_to.
inline std::vector<Int> series_ci(const std::vector<int>& degrees, std::size_t n, int up_to) {
  std::vector<Int> poly(static_cast<std::size_t>(up_to) + 1, 0);
  poly[0] = 1;
  for (int d : degrees) {
    for (int k = up_to; k >= d; --k) poly[k] -= poly[k - d];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (int k = 1; k <= up_to; ++k) poly[k] += poly[k - 1];
  }
  return poly;
}

inline std::vector<Exps> pure_powers(const std::vector<int>& d, std::size_t n) {
  std::vector<Exps> gens;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Exps e(n, 0);
    e[i] = d[i];
    gens.push_back(e);
  }
  return gens;
}

inline int sigma(const std::vector<int>& d) {
  int s = 0;
  for (int x : d) s += x - 1;
  return s;
}

inline Int product(const std::vector<int>& d) {
  Int p = 1;
  for (int x : d) p *= x;
  return p;
}

/// Lex-largest degree-D monomial in h variables outside (x^d), found by search.
inline Exps lex_largest_standard(const std::vector<int>& d, int D) {
  const std::size_t h = d.size();
  const auto gens = pure_powers(d, h);
  Exps best;
  for_each_of_degree(h, D, [&](const Exps& e) {
    if (!in_ideal(gens, e) && (best.empty() || e > best)) best = e;
  });
  return best;
}

/// Standard monomials of degree D of (x^d) in h variables.
inline std::vector<Exps> standard_of_degree(const std::vector<int>& d, int D) {
  const auto gens = pure_powers(d, d.size());
  std::vector<Exps> out;
  for_each_of_degree(d.size(), D, [&](const Exps& e) {
    if (!in_ideal(gens, e)) out.push_back(e);
  });
  return out;
}

/// Number of monomials outside (x^d) + (u) in h variables.
inline Int multiplicity_with(const std::vector<int>& d, const Exps& u) {
  auto gens = pure_powers(d, d.size());
  gens.push_back(u);
  const auto hf = enum_hf(gens, d.size(), sigma(d) + 1);
  return std::accumulate(hf.begin(), hf.end(), Int{0});
}

/// HF of (x^d) : u at degree j, by testing v*u in (x^d).
inline Int colon_hf(const std::vector<int>& d, const Exps& u, int j) {
  const auto gens = pure_powers(d, d.size());
  Int count = 0;
  for_each_of_degree(d.size(), j, [&](const Exps& v) {
    Exps w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] + u[i];
    count += in_ideal(gens, w) ? 0 : 1;
  });
  return count;
}

/// phi_m for 2 <= m <= sigma straight from the definition, by enumeration.
inline Int phi(const std::vector<int>& d, int m) {
  const std::size_t h = d.size();
  auto gens = pure_powers(d, h);
  const Int full = enum_hf(gens, h, m)[m];
  gens.push_back(lex_largest_standard(d, m - 1));
  return full - enum_hf(gens, h, m)[m];
}

/// All nondecreasing sequences with h entries in [lo, hi].
inline std::vector<std::vector<int>> degree_sweep(std::size_t max_h, int lo, int hi, std::size_t min_h = 1) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() >= min_h) out.push_back(cur);
    if (cur.size() == max_h) return;
    for (int x = from; x <= hi; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

/// Random exponent vector of total degree at most max_degree.
inline Exps random_exps(std::mt19937_64& rng, std::size_t n, int max_degree) {
  Exps e(n, 0);
  const int total = std::uniform_int_distribution<int>(0, max_degree)(rng);
  for (int k = 0; k < total; ++k) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
  return e;
}

}  // namespace oracle
