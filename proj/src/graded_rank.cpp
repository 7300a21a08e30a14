#include "cbound/graded_rank.hpp"

#include <cstdlib>
#include <string>
#include <unordered_map>

namespace cbound {

std::size_t max_graded_dim() {
  if (const char* env = std::getenv("CB_MAX_DIM"); env != nullptr && *env != '\0') {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("CB_MAX_DIM must be a positive integer, got '") + env + "'");
  }
  return kDefaultMaxGradedDim;
}

HilbertTable graded_rank_hf(std::span<const Form> gens, std::size_t num_vars, std::uint32_t p, int up_to,
                            std::size_t max_dim) {
  const PrimeField field(p);
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  if (up_to < 0) throw InvalidArgument("up_to must be >= 0");
  for (const auto& g : gens) {
    if (g.characteristic() != p) throw InvalidArgument("generator over a different field");
    if (g.num_vars() != num_vars) throw InvalidArgument("generator in a different ring");
  }

  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(up_to) + 1);
  bool vanished = false;
  for (int j = 0; j <= up_to; ++j) {
    if (vanished) {
      // S_{j+1} = S_1 S_j, so once the ideal fills a degree it fills all later ones.
      values.push_back(0);
      continue;
    }
    const Int dim = binomial(j + static_cast<Int>(num_vars) - 1, static_cast<Int>(num_vars) - 1);
    if (static_cast<std::size_t>(dim) > max_dim) {
      throw ResourceLimit("dim S_" + std::to_string(j) + " = " + std::to_string(dim) + " exceeds the cap " +
                          std::to_string(max_dim) + " (raise CB_MAX_DIM to allow it)");
    }
    const std::vector<Monomial> basis = monomials_of_degree(num_vars, j);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

    EchelonBasis ech(field, basis.size());
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > j) continue;
      for (const auto& mult : monomials_of_degree(num_vars, j - g.degree())) {
        std::vector<PrimeField::Elem> row(basis.size(), 0);
        for (const auto& t : g.terms()) row[index.at(t.monomial * mult)] = t.coeff;
        ech.insert(std::move(row));
        if (ech.full()) break;
      }
      if (ech.full()) break;
    }
    const Int hf = dim - static_cast<Int>(ech.rank());
    values.push_back(hf);
    vanished = hf == 0;
  }
  return make_table(std::move(values));
}

}  // namespace cbound
