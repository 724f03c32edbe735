#pragma once

#include <cstdint>

#include "vdc/core.hpp"

namespace vdc {

/// Fejer kernel F_q with t_0 = 1/q and t_nu = (2/q)(1 - nu/q), nu = 1..q-1.
[[nodiscard]] CosPoly fejer(std::int64_t q);

/// (sin(pi q x) / (q sin(pi x)))^2, equal to 1 at integer x.
[[nodiscard]] double fejer_closed(std::int64_t q, double x);

}  // namespace vdc
