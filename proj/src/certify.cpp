#include "vdc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace vdc {

namespace {

constexpr int kMaxDepth = 40;
constexpr std::size_t kMaxRefinements = 2'000'000;

struct Sample {
    double x;
    double value;
    double slope;
};

struct Cell {
    Sample left;
    Sample right;
    int depth;
};

}  // namespace

Certificate lipschitz_certify(const CosPoly& poly, std::int64_t grid) {
    const auto deg = static_cast<std::int64_t>(poly.degree());
    if (grid < 1 || grid < 2 * deg) {
        throw Error(ErrorCode::InvalidGrid, "certificate grid " + std::to_string(grid) +
                                                " is below 2 deg(T) = " + std::to_string(2 * deg));
    }

    constexpr double two_pi = 2.0 * std::numbers::pi;
    Certificate cert;
    cert.grid = grid;
    double abs_sum = 0.0;
    const auto t = poly.coeffs();
    for (std::size_t k = 1; k < t.size(); ++k) {
        const double kd = static_cast<double>(k);
        abs_sum += std::abs(t[k]);
        cert.lipschitz_bound += kd * std::abs(t[k]);
        cert.curvature_bound += kd * kd * std::abs(t[k]);
    }
    cert.lipschitz_bound *= two_pi;
    cert.curvature_bound *= two_pi * two_pi;
    const double b1 = cert.lipschitz_bound;
    const double b2 = cert.curvature_bound;
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() *
                            static_cast<double>(deg + 1) * abs_sum;
    const double refine_tol = 1e-12 * std::max(1.0, std::abs(t[0]) + abs_sum);

    auto sample = [&](double x) { return Sample{x, poly(x), poly.derivative(x)}; };

    const double denom = 2.0 * static_cast<double>(grid);
    std::vector<Sample> nodes;
    nodes.reserve(static_cast<std::size_t>(grid) + 1);
    for (std::int64_t j = 0; j <= grid; ++j) nodes.push_back(sample(static_cast<double>(j) / denom));
    cert.sampled_min = std::numeric_limits<double>::infinity();
    for (const auto& s : nodes) cert.sampled_min = std::min(cert.sampled_min, s.value);

    auto cell_bound = [&](const Sample& a, const Sample& b) {
        const double w = b.x - a.x;
        const double lipschitz = 0.5 * (a.value + b.value) - 0.5 * b1 * w;
        const double q = b2 * w * w / 8.0;
        const double taylor = std::min({a.value, b.value, a.value + 0.5 * a.slope * w - q,
                                        b.value - 0.5 * b.slope * w - q});
        return std::max(lipschitz, taylor);
    };

    double certified = std::numeric_limits<double>::infinity();
    std::vector<Cell> stack;
    for (std::size_t j = nodes.size() - 1; j-- > 0;) stack.push_back({nodes[j], nodes[j + 1], 0});
    while (!stack.empty()) {
        const Cell cell = stack.back();
        stack.pop_back();
        const double bound = cell_bound(cell.left, cell.right);
        const bool refine = bound < cert.sampled_min - refine_tol && cell.depth < kMaxDepth &&
                            cert.refined_cells < kMaxRefinements;
        if (!refine) {
            certified = std::min(certified, bound);
            continue;
        }
        ++cert.refined_cells;
        const Sample mid = sample(0.5 * (cell.left.x + cell.right.x));
        cert.sampled_min = std::min(cert.sampled_min, mid.value);
        stack.push_back({mid, cell.right, cell.depth + 1});
        stack.push_back({cell.left, mid, cell.depth + 1});
    }
    cert.certified_min = certified - rounding;
    return cert;
}

}  // namespace vdc
