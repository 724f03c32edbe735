#include "vdc/kernels.hpp"

#include <cmath>
#include <numbers>

namespace vdc {

namespace {

void require_order(std::int64_t q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "Fejer kernel order must be >= 2");
}

}  // namespace

CosPoly fejer(std::int64_t q) {
    require_order(q);
    const double qd = static_cast<double>(q);
    std::vector<double> t(static_cast<std::size_t>(q));
    t[0] = 1.0 / qd;
    for (std::int64_t nu = 1; nu < q; ++nu) {
        t[static_cast<std::size_t>(nu)] = 2.0 * static_cast<double>(q - nu) / (qd * qd);
    }
    return CosPoly(std::move(t));
}

double fejer_closed(std::int64_t q, double x) {
    require_order(q);
    constexpr double pi = std::numbers::pi;
    const double qd = static_cast<double>(q);
    const double xr = x - std::round(x);
    const double den = std::sin(pi * xr);
    double ratio;
    if (std::abs(den) < 1e-9) {
        // Removable singularity: sin(pi q u)/(q sin(pi u)) -> 1 as u -> 0.
        ratio = xr == 0.0 ? 1.0 : std::sin(pi * qd * xr) / (pi * qd * xr);
    } else {
        ratio = std::sin(pi * qd * xr) / (qd * den);
    }
    return ratio * ratio;
}

}  // namespace vdc
