#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "cbound/form.hpp"
#include "cbound/hilbert.hpp"

namespace cbound {

inline constexpr std::size_t kDefaultMaxGradedDim = 20000;

/// Cap on dim S_j for graded linear algebra: CB_MAX_DIM if set, else 20000.
std::size_t max_graded_dim();

/// HF(S/(gens); 0..up_to) over GF(p): dim S_j minus the rank of all products
/// m * g with deg m = j - deg g, written in the degree-j monomial basis.
/// Throws ResourceLimit when some dim S_j exceeds `max_dim`.
HilbertTable graded_rank_hf(std::span<const Form> gens, std::size_t num_vars, std::uint32_t p, int up_to,
                            std::size_t max_dim = max_graded_dim());

}  // namespace cbound
