#pragma once

#include <cstddef>
#include <cstdint>

#include "vdc/core.hpp"

namespace vdc {

/// Sound lower bound for min_x T(x).
struct Certificate {
    double certified_min = 0.0;    // T(x) >= certified_min for every real x
    double sampled_min = 0.0;      // smallest value actually evaluated
    double lipschitz_bound = 0.0;  // B1 = 2 pi sum k |t_k| >= sup |T'|
    double curvature_bound = 0.0;  // B2 = (2 pi)^2 sum k^2 |t_k| >= sup |T''|
    std::int64_t grid = 0;
    std::size_t refined_cells = 0;
};

/// Certifies the minimum of T over the grid x_j = j / 2M, j = 0..M, of
/// [0, 1/2] (enough by evenness and periodicity).
///
/// Each cell [a, b] of width w gets the better of two lower bounds:
///   Lipschitz:  (T(a) + T(b)) / 2 - B1 w / 2
///   Taylor:     min(T(a), T(b), T(a) + T'(a) w/2 - B2 w^2/8,
///                   T(b) - T'(b) w/2 - B2 w^2/8)
/// Cells whose bound falls below the smallest sampled value are bisected
/// until the bound closes in on it (depth-limited). Plain Lipschitz alone
/// gives min_j T(x_j) - B1 / 4M, which cannot certify polynomials that touch
/// zero. A floating-point evaluation allowance is subtracted at the end.
/// Throws InvalidGrid when M < 2 degree(T).
[[nodiscard]] Certificate lipschitz_certify(const CosPoly& poly, std::int64_t grid);

}  // namespace vdc
