#include "cbound/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cbound {

Int HilbertTable::at(int degree) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= values.size()) return 0;
  return values[static_cast<std::size_t>(degree)];
}

Int HilbertTable::total() const {
  Int s = 0;
  for (Int v : values) s = checked_add(s, v);
  return s;
}

HilbertTable make_table(std::vector<Int> values) {
  HilbertTable t;
  t.bound = static_cast<int>(values.size()) - 1;
  t.artinian_certified = std::find(values.begin(), values.end(), Int{0}) != values.end();
  t.values = std::move(values);
  return t;
}

bool vanishes_monotonically(const HilbertTable& table) {
  auto first_zero = std::find(table.values.begin(), table.values.end(), Int{0});
  return std::all_of(first_zero, table.values.end(), [](Int v) { return v == 0; });
}

namespace {

// Splitting recursion over monomial ideals. Memoized per top-level call so the
// public function stays pure and thread-safe.
class SplittingHf {
 public:
  explicit SplittingHf(std::size_t n) : n_(n) {}

  std::vector<Int> compute(const MonomialIdeal& ideal, int bound) {
    if (bound < 0) return {};
    const auto key = key_of(ideal);
    if (auto it = memo_.find(key); it != memo_.end() && it->second.size() >= static_cast<std::size_t>(bound) + 1) {
      return {it->second.begin(), it->second.begin() + bound + 1};
    }
    std::vector<Int> out = evaluate(ideal, bound);
    memo_[key] = out;
    return out;
  }

 private:
  std::vector<int> key_of(const MonomialIdeal& ideal) const {
    std::vector<int> key;
    key.reserve(ideal.size() * n_);
    for (const auto& g : ideal.generators()) {
      for (std::size_t i = 0; i < n_; ++i) key.push_back(g.exponent(i));
    }
    return key;
  }

  std::vector<Int> evaluate(const MonomialIdeal& ideal, int bound) {
    const auto len = static_cast<std::size_t>(bound) + 1;
    std::vector<Int> out(len, 0);
    if (ideal.is_unit()) return out;

    // Pivot: first variable occurring in a generator of degree >= 2.
    std::size_t pivot = n_;
    std::size_t linear = 0;
    for (const auto& g : ideal.generators()) {
      if (g.degree() == 1) {
        ++linear;
        continue;
      }
      for (std::size_t i = 0; i < n_ && i < pivot; ++i) {
        if (g.exponent(i) > 0) {
          pivot = i;
          break;
        }
      }
    }

    if (pivot == n_) {
      // Only variables among the generators: a polynomial ring in the rest.
      const auto free = static_cast<Int>(n_ - linear);
      for (std::size_t m = 0; m < len; ++m) {
        const auto mm = static_cast<Int>(m);
        out[m] = free == 0 ? (m == 0 ? 1 : 0) : binomial(mm + free - 1, free - 1);
      }
      return out;
    }

    const Monomial x = Monomial::variable(n_, pivot);
    const std::vector<Int> with_var = compute(sum(ideal, MonomialIdeal(n_, {x})), bound);
    const std::vector<Int> quotient = compute(colon(ideal, x), bound - 1);
    for (std::size_t m = 0; m < len; ++m) {
      out[m] = with_var[m];
      if (m >= 1) out[m] = checked_add(out[m], quotient[m - 1]);
    }
    return out;
  }

  std::size_t n_;
  std::map<std::vector<int>, std::vector<Int>> memo_;
};

}  // namespace

HilbertTable hilbert_function(const MonomialIdeal& ideal, int up_to) {
  if (up_to < 0) throw InvalidArgument("up_to must be >= 0");
  SplittingHf engine(ideal.num_vars());
  return make_table(engine.compute(ideal, up_to));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  std::vector<Monomial> all = monomials_of_degree(ideal.num_vars(), degree);
  std::erase_if(all, [&](const Monomial& m) { return ideal.contains(m); });
  return all;
}

HilbertTable ci_hilbert(std::span<const int> degrees, std::size_t num_vars, int up_to) {
  if (up_to < 0) throw InvalidArgument("up_to must be >= 0");
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  if (degrees.size() > num_vars) {
    throw InvalidArgument("a complete intersection of " + std::to_string(degrees.size()) +
                          " forms needs at least that many variables, got " + std::to_string(num_vars));
  }
  const auto len = static_cast<std::size_t>(up_to) + 1;
  std::vector<Int> series(len, 0);
  series[0] = 1;
  for (int d : degrees) {
    if (d < 1) throw InvalidArgument("degrees must be >= 1");
    for (std::size_t k = len; k-- > static_cast<std::size_t>(d);) {
      series[k] = checked_sub(series[k], series[k - static_cast<std::size_t>(d)]);
    }
  }
  // Multiply by 1/(1-t) once per variable.
  for (std::size_t v = 0; v < num_vars; ++v) {
    for (std::size_t k = 1; k < len; ++k) series[k] = checked_add(series[k], series[k - 1]);
  }
  return make_table(std::move(series));
}

Int artinian_multiplicity(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) {
    throw NotArtinian("S/I is not Artinian: some variable has no pure power in (" + to_string(ideal) + ")");
  }
  if (ideal.is_unit()) return 0;
  std::vector<int> top(ideal.num_vars(), 0);
  for (const auto& g : ideal.generators()) {
    const std::size_t k = g.support_size();
    if (g.degree() == g.exponent(k - 1)) {
      int& t = top[k - 1];
      t = t == 0 ? g.degree() : std::min(t, g.degree());
    }
  }
  // HF vanishes in degree sum(a_i - 1) + 1.
  int cap = 1;
  for (int a : top) cap += a - 1;
  const HilbertTable table = hilbert_function(ideal, cap);
  return table.total();
}

}  // namespace cbound
