#ifndef HALLINV_EXACT_RANK_HPP
#define HALLINV_EXACT_RANK_HPP

#include "hallinv/rational.hpp"

#include <cstddef>

namespace hallinv {

/// Rank over the rationals.
///
/// Each row is first cleared of denominators (row scaling does not change
/// rank), then reduced by fraction-free Bareiss elimination on the integer
/// matrix. Pivots are the largest-magnitude entry of the current column;
/// all-zero columns are skipped. Every division by the previous pivot is
/// exact, so the result carries no rounding.
std::size_t exact_rank(const RationalMatrix& m);

/// Numerical rank from the singular values: count of sigma_i > rel_tol * sigma_max.
/// Cross-check only; exact_rank is authoritative.
std::size_t floating_rank(const RationalMatrix& m, double rel_tol = 1e-8);

}  // namespace hallinv

#endif  // HALLINV_EXACT_RANK_HPP
