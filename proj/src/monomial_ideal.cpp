#include "cbound/monomial_ideal.hpp"

#include <algorithm>

#include "cbound/common.hpp"

namespace cbound {

MonomialIdeal::MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw InvalidArgument("an ideal needs at least one variable");
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : MonomialIdeal(num_vars) {
  for (auto& g : gens) {
    if (g.num_vars() != num_vars) g = g.padded(num_vars);
  }
  std::sort(gens.begin(), gens.end(), GeneratorOrder{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // After sorting by degree, a generator can only be divided by an earlier one.
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) {
  return MonomialIdeal(num_vars, {Monomial::one(num_vars)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_artinian() const {
  std::vector<bool> has_power(num_vars_, false);
  for (const auto& g : gens_) {
    if (g.is_one()) return true;
    const std::size_t k = g.support_size();
    if (g.degree() == g.exponent(k - 1)) has_power[k - 1] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens) {
  return MonomialIdeal(num_vars, std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.support_size() > ideal.num_vars()) throw InvalidArgument("colon by a monomial outside the ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InvalidArgument("ideal sum across rings with " + std::to_string(a.num_vars()) + " and " +
                          std::to_string(b.num_vars()) + " variables");
  }
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal power_ideal(std::span<const int> degrees, std::size_t num_vars) {
  if (degrees.size() > num_vars) throw InvalidArgument("more pure powers than variables");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw InvalidArgument("pure power degrees must be >= 1");
    gens.push_back(Monomial::variable(num_vars, i, degrees[i]));
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ',';
    out += to_string(g);
  }
  return out;
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t num_vars) {
  std::vector<Monomial> gens;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return MonomialIdeal(num_vars);
  while (true) {
    const auto comma = text.find(',');
    gens.push_back(parse_monomial(text.substr(0, comma), num_vars));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

}  // namespace cbound
