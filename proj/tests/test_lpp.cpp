#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cbound/common.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/lpp.hpp"
#include "oracles.hpp"

using namespace cbound;

namespace {

oracle::Exps exps_of(const Monomial& m, std::size_t n) {
  const Monomial p = m.padded(n);
  return {p.exponents().begin(), p.exponents().end()};
}

// c-sequence for h = 3 from the piecewise description of U_D.
std::vector<int> c_three(int d1, int d2, int d3, int D) {
  if (D <= d1 - 1) return {d1 - D, d2, d3};
  if (D <= d1 + d2 - 2) return {1, d1 + d2 - 1 - D, d3};
  return {1, 1, d1 + d2 + d3 - 2 - D};
}

}  // namespace

TEST_CASE("degree sequences") {
  const DegreeSequence d({2, 3, 5});
  CHECK(d.sigma() == 7);
  CHECK(d.product() == 30);
  CHECK(DegreeSequence::sorted({5, 2, 3}) == d);
  CHECK_THROWS_AS(DegreeSequence({3, 2}), InvalidArgument);
  CHECK_THROWS_AS(DegreeSequence({0, 2}), InvalidArgument);
  CHECK_THROWS_AS(DegreeSequence(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(AciParams(d, 0), InvalidArgument);
  const AciParams p(DegreeSequence({4, 4, 4, 10}), 4);
  CHECK(p.sigma() == 18);
  CHECK(p.tau_minus() == 10);
  CHECK(p.tau_plus() == 11);
}

TEST_CASE("published c-sequences") {
  CHECK(c_sequence(DegreeSequence({4, 4, 4}), 4) == std::vector<int>{1, 3, 4});
  CHECK(c_sequence(DegreeSequence({3, 3, 3}), 3) == std::vector<int>{1, 2, 3});
  CHECK(lpp_monomial(DegreeSequence({4, 4, 4}), 4) == Monomial({3, 1, 0}));
  CHECK(lpp_ideal(DegreeSequence({4, 4, 4}), 4, 3) == parse_ideal("x1^4,x1^3*x2,x2^4,x3^4", 3));
  CHECK_THROWS_AS(c_sequence(DegreeSequence({2, 2}), 3), InvalidArgument);
}

TEST_CASE("D beyond sigma places the remainder on a new variable") {
  const Monomial u = lpp_monomial(DegreeSequence({2, 2}), 4);
  CHECK(u == Monomial({1, 1, 2}));
  CHECK(lpp_ideal(DegreeSequence({2, 2}), 4, 3).contains(u));
}

TEST_CASE("property: U_D is the lex-largest standard monomial") {
  for (const auto& d : oracle::degree_sweep(4, 1, 5)) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D) {
      CHECK(exps_of(lpp_monomial(ds, D), d.size()) == oracle::lex_largest_standard(d, D));
    }
  }
}

TEST_CASE("property: c-sequence piecewise formula for three degrees") {
  for (const auto& d : oracle::degree_sweep(3, 1, 8, 3)) {
    const DegreeSequence ds(d);
    for (int D = 1; D <= ds.sigma(); ++D) CHECK(c_sequence(ds, D) == c_three(d[0], d[1], d[2], D));
  }
}

TEST_CASE("property: colon by U_D has degrees c, and HF(S/L) sums to prod d - prod c") {
  for (const auto& d : oracle::degree_sweep(4, 1, 5)) {
    const DegreeSequence ds(d);
    const std::size_t h = d.size();
    for (int D = 1; D <= ds.sigma(); ++D) {
      const auto u = exps_of(lpp_monomial(ds, D), h);
      const auto c = c_sequence(ds, D);
      const auto c_hf = oracle::enum_hf(oracle::pure_powers(c, h), h, ds.sigma() + 1);
      for (int j = 0; j <= ds.sigma() + 1; ++j) CHECK(oracle::colon_hf(d, u, j) == c_hf[j]);
      CHECK(lpp_multiplicity(ds, D) == oracle::product(d) - oracle::product(c));
      CHECK(oracle::multiplicity_with(d, u) == oracle::product(d) - oracle::product(c));
    }
  }
}

TEST_CASE("phi against the enumeration oracle") {
  for (const auto& d : oracle::degree_sweep(4, 2, 4, 2)) {
    const DegreeSequence ds(d);
    const auto table = phi_table(ds);
    REQUIRE(table.size() == static_cast<std::size_t>(ds.sigma()) + 2);
    for (int m = 2; m <= ds.sigma(); ++m) {
      CHECK(phi(ds, m) == oracle::phi(d, m));
      CHECK(table[m] == phi(ds, m));
    }
    CHECK(phi(ds, 1) == 0);
    CHECK(phi(ds, ds.sigma() + 1) == 0);
  }
}

TEST_CASE("property: phi is positive and nonincreasing") {
  for (const auto& d : oracle::degree_sweep(4, 2, 5, 2)) {
    const DegreeSequence ds(d);
    const auto t = phi_table(ds);
    for (int m = 2; m <= ds.sigma(); ++m) CHECK(t[m] > 0);
    for (int m = 2; m < ds.sigma(); ++m) CHECK(t[m] >= t[m + 1]);
  }
}

TEST_CASE("cubics: sum of phi over 4..2n+1 is 3n^2 - 4n + 1") {
  for (int n = 2; n <= 4; ++n) {
    const auto t = phi_table(DegreeSequence(std::vector<int>(2 * n, 3)));
    Int s = 0;
    for (int m = 4; m <= 2 * n + 1; ++m) s += t[m];
    CHECK(s == 3 * n * n - 4 * n + 1);
  }
}

TEST_CASE("property: delta dominates phi where both are defined") {
  for (const auto& d : oracle::degree_sweep(5, 2, 5, 4)) {
    const DegreeSequence ds(d);
    const auto phis = phi_table(ds);
    for (int D = 1; D < d[3] && D <= ds.sigma(); ++D) {
      const auto deltas = delta_table(ds, D, ds.sigma());
      for (int m = D + 1; m <= ds.sigma(); ++m) CHECK(deltas[m] >= phis[m]);
    }
  }
  CHECK_THROWS_AS(delta_table(DegreeSequence({2, 2, 2}), 1, 3), InvalidArgument);
  CHECK_THROWS_AS(delta_table(DegreeSequence({3, 3, 3, 3}), 3, 5), InvalidArgument);
}

TEST_CASE("delta below d4 is the Hilbert function difference with L(d;D)") {
  const DegreeSequence d({4, 4, 4, 10});
  const auto deltas = delta_table(d, 4, 12);
  const auto full = ci_hilbert(d.values(), 4, 10);
  const auto cut = hilbert_function(lpp_ideal(d, 4, 4), 10);
  for (int m = 0; m <= 10; ++m) CHECK(deltas[m] == full.at(m) - cut.at(m));
  CHECK(deltas[11] == phi(d, 11));
  CHECK(delta_m(d, 4, 7) == deltas[7]);
}

TEST_CASE("small worked values") {
  CHECK(DegreeSequence({4, 4, 4}).sigma() == 9);
  CHECK(DegreeSequence({1, 1, 1}).sigma() == 0);
  CHECK(lpp_monomial(DegreeSequence({2, 2}), 3) == Monomial({1, 1, 1}));
  CHECK(lpp_monomial(DegreeSequence({3, 3, 3, 3}), 3) == Monomial({2, 1, 0, 0}));
  CHECK(lpp_ideal(DegreeSequence({2, 2}), 3, 3) == parse_ideal("x1^2,x2^2,x1*x2*x3", 3));
  CHECK(lpp_ideal(DegreeSequence({2, 2, 2}), 2, 3) == parse_ideal("x1^2,x2^2,x3^2,x1*x2", 3));
  for (int D = 2; D <= 6; ++D) CHECK(c_sequence(DegreeSequence({D, D, D}), D) == std::vector<int>{1, D - 1, D});
  CHECK(lpp_multiplicity(DegreeSequence({4, 4, 4}), 4) == 52);
  CHECK(lpp_multiplicity(DegreeSequence({2, 2}), 3) == 3);
  CHECK(lpp_multiplicity(DegreeSequence({2, 2, 2}), 2) == 6);
  const auto deltas = delta_table(DegreeSequence({4, 4, 4, 10}), 4, 4);
  CHECK(deltas == std::vector<Int>{0, 0, 0, 0, 1});
}
