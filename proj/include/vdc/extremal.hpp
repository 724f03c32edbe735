#pragma once

#include <cstdint>

#include "vdc/closed_forms.hpp"
#include "vdc/core.hpp"

namespace vdc {

/// Outcome of checking T against the admissible class for a support set:
/// frequencies in K, T >= 0 everywhere, T(0) = 1.
struct MembershipReport {
    bool support_ok = false;
    double t_at_zero = 0.0;
    double t0 = 0.0;
    double certified_min = 0.0;
    double lipschitz_bound = 0.0;
    std::int64_t grid_size = 0;

    [[nodiscard]] bool member() const noexcept;
};

inline constexpr double kSnapTolerance = 1e-12;

/// Gamma data used by the construction; p = 1 is represented with
/// gammas = {1/q} and no shifts.
[[nodiscard]] GammaSolution extremal_gamma(const RationalCutoff& h);

/// Extremal polynomial with coefficients t_nu = Gamma(nu) F_nu / g_0,
/// nu = 0..q-1 (F_nu the Fejer coefficients). Coefficients below
/// kSnapTolerance in magnitude are set to zero. Supports p in {1, 2, 3}.
[[nodiscard]] CosPoly build_extremal(const RationalCutoff& h);

/// The same polynomial evaluated as a positive combination of shifted Fejer
/// kernels: F(x) + sum_i g_i / (2 g_0) (F(x + r_i/q) + F(x - r_i/q)).
[[nodiscard]] double extremal_shifted_kernel_value(const GammaSolution& gamma, double x);

[[nodiscard]] MembershipReport verify_membership(const CosPoly& poly, const SupportSet& support,
                                                 std::int64_t grid_size);

/// T*(0) = F(0) = 1 because every shift r satisfies F(r/q) = 0 and
/// 0 < r < q/2.
[[nodiscard]] bool verify_t_at_zero_shifts(const RationalCutoff& h);

}  // namespace vdc
