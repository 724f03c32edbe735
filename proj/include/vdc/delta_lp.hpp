#pragma once

#include <cstdint>

#include "vdc/core.hpp"
#include "vdc/simplex.hpp"

namespace vdc {

/// Grid relaxation of delta(K): minimize T_0 over T_0 and T_k (k in K, free)
/// subject to T(j / 2M) >= 0 for j = 0..M and T(0) = 1. The optimum is a
/// lower bound for delta over polynomials supported in K. Solution layout is
/// [T_0, T_{k_1}, ..., T_{k_n}] in increasing k.
/// Throws InvalidArgument for an empty or periodic set and InvalidGrid when
/// M < 2 max(K).
[[nodiscard]] LPResult delta_grid_lp(const SupportSet& support, std::int64_t grid,
                                     std::size_t max_iters = kDefaultMaxIters);

/// Dense cosine polynomial rebuilt from a delta_grid_lp solution vector.
[[nodiscard]] CosPoly delta_polynomial(const SupportSet& support, const LPResult& result);

/// delta_grid_lp on K_{p,q} truncated at q * periods + (q - p).
[[nodiscard]] LPResult delta_periodic_lp(const RationalCutoff& h, std::int64_t periods,
                                         std::int64_t grid);

/// Support used by delta_periodic_lp.
[[nodiscard]] SupportSet periodic_truncation(const RationalCutoff& h, std::int64_t periods);

/// Estimator of A(h): maximize a_0 over a_0..a_N >= 0 with sum a_n = 1 and
/// |f(x_j)| <= eps on the M + 1 uniform points of [h, 1/2]. `value` of the
/// returned result is a_0 (not the minimization objective) and `solution`
/// holds a_0..a_N. Truncation and the eps relaxation push in opposite
/// directions, so this is an estimate rather than a bound.
/// Throws EpsTooSmall when the relaxed problem is infeasible.
[[nodiscard]] LPResult turan_relaxed_lp(const RationalCutoff& h, std::int64_t degree,
                                        std::int64_t grid, double eps);

}  // namespace vdc
