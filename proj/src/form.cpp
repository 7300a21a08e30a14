#include "cbound/form.hpp"

#include <algorithm>
#include <limits>

#include "cbound/common.hpp"

namespace cbound {

Form::Form(std::size_t num_vars, int degree, std::uint32_t p, std::vector<Term> terms)
    : n_(num_vars), degree_(degree), p_(p) {
  const PrimeField field(p);
  if (num_vars == 0) throw InvalidArgument("a form needs at least one variable");
  if (degree < 0) throw InvalidArgument("form degree must be >= 0");
  for (auto& t : terms) {
    if (t.monomial.degree() != degree) {
      throw InvalidArgument("term " + cbound::to_string(t.monomial) + " is not of degree " + std::to_string(degree));
    }
    if (t.monomial.num_vars() != num_vars) t.monomial = t.monomial.padded(num_vars);
    t.coeff %= p;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

Form Form::from_monomial(const Monomial& m, std::size_t num_vars, std::uint32_t p) {
  return Form(num_vars, m.degree(), p, {Term{m.padded(num_vars), 1}});
}

Form Form::times(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coeff});
  return Form(n_, degree_ + m.degree(), p_, std::move(out));
}

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1 || t.monomial.is_one()) {
      out += std::to_string(t.coeff);
      if (!t.monomial.is_one()) out += '*';
    }
    if (!t.monomial.is_one()) out += to_string(t.monomial);
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Form random_form(std::size_t num_vars, int degree, std::uint32_t p, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(num_vars, degree)) {
    terms.push_back({std::move(m), static_cast<std::uint32_t>(uniform_below(rng, p))});
  }
  return Form(num_vars, degree, p, std::move(terms));
}

}  // namespace cbound
