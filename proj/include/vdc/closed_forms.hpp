#pragma once

#include <cstdint>
#include <vector>

#include "vdc/core.hpp"

namespace vdc {

/// Interpolating cosine combination
///   Gamma(nu) = g_0 + sum_i g_{i+1} cos(2 pi shift_i nu / q)
/// with Gamma(0) = 1 and Gamma(1) = ... = Gamma(p-1) = 0.
struct GammaSolution {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r0 = 0;
    std::vector<double> gammas;
    std::vector<std::int64_t> shifts;
    double a_value = 0.0;  // 1 / (q g_0)

    /// Gamma evaluated at an integer frequency.
    [[nodiscard]] double operator()(std::int64_t nu) const;
};

/// Extremal value A(p/q) for the four known families:
/// p = 1; p = 2 with odd q; p = 3 with 3 not dividing q; q = 2p + 1.
/// Throws UnsupportedCase otherwise.
[[nodiscard]] double turan_value(const RationalCutoff& h);

/// True when turan_value has a closed form for h.
[[nodiscard]] bool has_turan_value(const RationalCutoff& h) noexcept;

/// Individual branch formulas, usable as independent cross-checks.
[[nodiscard]] double turan_value_p1(std::int64_t q);
[[nodiscard]] double turan_value_p2(std::int64_t q);
[[nodiscard]] double turan_value_p3(std::int64_t q);
[[nodiscard]] double turan_value_half_step(std::int64_t p);  // q = 2p + 1

/// Solves Gamma(0) = 1, Gamma(1) = ... = Gamma(p-1) = 0 for p in {2, 3}.
/// p = 3 uses shifts (r0, r0 + 1) with r0 = floor(q/3); p = 2 uses the
/// single shift (q - 1)/2.
/// Throws UnsupportedCase, SingularSystem or NonPositiveGamma.
[[nodiscard]] GammaSolution solve_gamma(const RationalCutoff& h);

/// Gaussian elimination with partial pivoting on a small dense system.
/// `matrix` is row-major n x n. Throws SingularSystem.
[[nodiscard]] std::vector<double> solve_dense(std::vector<double> matrix,
                                              std::vector<double> rhs);

}  // namespace vdc
