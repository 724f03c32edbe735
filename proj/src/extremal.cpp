#include "vdc/extremal.hpp"

#include <cmath>

#include "vdc/certify.hpp"
#include "vdc/kernels.hpp"

namespace vdc {

bool MembershipReport::member() const noexcept {
    return support_ok && std::abs(t_at_zero - 1.0) <= 1e-9 && certified_min >= -1e-9;
}

GammaSolution extremal_gamma(const RationalCutoff& h) {
    if (h.p() == 1) {
        GammaSolution g;
        g.p = 1;
        g.q = h.q();
        g.r0 = 0;
        g.gammas = {1.0 / static_cast<double>(h.q())};
        g.a_value = 1.0 / (static_cast<double>(h.q()) * g.gammas[0]);
        return g;
    }
    if (h.p() > 3) {
        throw Error(ErrorCode::UnsupportedCase,
                    "no explicit extremal construction for p = " + std::to_string(h.p()));
    }
    return solve_gamma(h);
}

CosPoly build_extremal(const RationalCutoff& h) {
    const auto gamma = extremal_gamma(h);
    const auto kernel = fejer(h.q());
    if (h.p() == 1) return kernel;

    std::vector<double> t(kernel.coeffs().begin(), kernel.coeffs().end());
    const double g0 = gamma.gammas[0];
    for (std::size_t nu = 0; nu < t.size(); ++nu) {
        t[nu] *= gamma(static_cast<std::int64_t>(nu)) / g0;
        if (std::abs(t[nu]) <= kSnapTolerance) t[nu] = 0.0;
    }
    return CosPoly(std::move(t));
}

double extremal_shifted_kernel_value(const GammaSolution& gamma, double x) {
    const double qd = static_cast<double>(gamma.q);
    double v = fejer_closed(gamma.q, x);
    for (std::size_t i = 0; i < gamma.shifts.size(); ++i) {
        const double r = static_cast<double>(gamma.shifts[i]) / qd;
        v += gamma.gammas[i + 1] / (2.0 * gamma.gammas[0]) *
             (fejer_closed(gamma.q, x + r) + fejer_closed(gamma.q, x - r));
    }
    return v;
}

MembershipReport verify_membership(const CosPoly& poly, const SupportSet& support,
                                   std::int64_t grid_size) {
    MembershipReport rep;
    rep.grid_size = grid_size;
    rep.support_ok = true;
    const auto t = poly.coeffs();
    for (std::size_t k = 1; k < t.size(); ++k) {
        if (std::abs(t[k]) > kSnapTolerance && !support.contains(static_cast<std::int64_t>(k))) {
            rep.support_ok = false;
        }
    }
    rep.t_at_zero = poly.value_at_zero();
    rep.t0 = poly.constant_term();
    const auto cert = lipschitz_certify(poly, grid_size);
    rep.certified_min = cert.certified_min;
    rep.lipschitz_bound = cert.lipschitz_bound;
    return rep;
}

bool verify_t_at_zero_shifts(const RationalCutoff& h) {
    const auto gamma = extremal_gamma(h);
    const double half = static_cast<double>(h.q()) / 2.0;
    for (auto r : gamma.shifts) {
        if (!(r > 0 && static_cast<double>(r) < half)) return false;
        const double at_shift =
            fejer_closed(h.q(), static_cast<double>(r) / static_cast<double>(h.q()));
        if (at_shift > 1e-18) return false;
    }
    return std::abs(build_extremal(h).value_at_zero() - 1.0) <= 1e-10;
}

}  // namespace vdc
