#include "vdc/delta_lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vdc {

namespace {

// cos(2 pi k j / (2M)) with the argument reduced exactly in integers.
double grid_cos(std::int64_t k, std::int64_t j, std::int64_t grid) {
    const std::int64_t period = 2 * grid;
    const std::int64_t r = (k % period) * (j % period) % period;
    return std::cos(std::numbers::pi * static_cast<double>(r) / static_cast<double>(grid));
}

constexpr double kGridFeasTol = 1e-12;

}  // namespace

LPResult delta_grid_lp(const SupportSet& support, std::int64_t grid, std::size_t max_iters) {
    if (!support.is_finite()) {
        throw Error(ErrorCode::InvalidArgument, "delta_grid_lp needs a finite support set");
    }
    if (support.empty()) throw Error(ErrorCode::InvalidArgument, "support set is empty");
    const auto ks = support.elements();
    if (grid < 2 * ks.back()) {
        throw Error(ErrorCode::InvalidGrid, "grid size " + std::to_string(grid) +
                                                " is below 2 max(K) = " +
                                                std::to_string(2 * ks.back()));
    }

    const std::size_t nv = ks.size() + 1;
    const auto npts = static_cast<std::size_t>(grid) + 1;
    std::vector<std::vector<double>> rows(npts, std::vector<double>(nv));
    for (std::size_t j = 0; j < npts; ++j) {
        rows[j][0] = 1.0;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            rows[j][i + 1] = grid_cos(ks[i], static_cast<std::int64_t>(j), grid);
        }
    }

    // Constraint generation: solve on a subset of the grid, then add the
    // deepest point of every run of violated grid points until none is left.
    // The result is the optimum of the full grid LP; solving small LPs keeps
    // the tableau well conditioned where one pass over thousands of nearly
    // parallel rows would not be.
    std::vector<bool> active(npts, false);
    const auto stride = std::max<std::int64_t>(1, grid / (8 * ks.back()));
    for (std::int64_t j = 0; j <= grid; j += stride) active[static_cast<std::size_t>(j)] = true;
    active.back() = true;

    std::size_t total_iters = 0;
    LPResult result;
    while (true) {
        std::vector<double> c(nv, 0.0);
        c[0] = 1.0;
        LPProblem prob(std::move(c), VarBound::Free);
        prob.add_row(std::vector<double>(nv, 1.0), Relation::Equal, 1.0);
        for (std::size_t j = 0; j < npts; ++j) {
            if (active[j]) prob.add_row(rows[j], Relation::GreaterEqual, 0.0);
        }
        result = simplex_solve(prob, max_iters - std::min(max_iters, total_iters));
        total_iters += result.iterations;
        if (!result.optimal()) break;

        std::vector<double> vals(npts);
        for (std::size_t j = 0; j < npts; ++j) {
            double v = 0.0;
            for (std::size_t i = 0; i < nv; ++i) v += rows[j][i] * result.solution[i];
            vals[j] = v;
        }
        bool added = false;
        double worst = 0.0;
        for (std::size_t j = 0; j < npts;) {
            if (vals[j] >= -kGridFeasTol) {
                worst = std::max(worst, -vals[j]);
                ++j;
                continue;
            }
            std::size_t deepest = j;
            for (; j < npts && vals[j] < -kGridFeasTol; ++j) {
                if (vals[j] < vals[deepest]) deepest = j;
            }
            if (!active[deepest]) {
                active[deepest] = true;
                added = true;
            }
            worst = std::max(worst, -vals[deepest]);
        }
        result.max_violation = std::max(result.max_violation, worst);
        if (!added) break;
    }
    result.iterations = total_iters;
    return result;
}

CosPoly delta_polynomial(const SupportSet& support, const LPResult& result) {
    const auto ks = support.elements();
    if (result.solution.size() != ks.size() + 1) {
        throw Error(ErrorCode::InvalidArgument, "solution does not match the support set");
    }
    std::vector<double> t(static_cast<std::size_t>(ks.empty() ? 0 : ks.back()) + 1, 0.0);
    t[0] = result.solution[0];
    for (std::size_t i = 0; i < ks.size(); ++i) t[static_cast<std::size_t>(ks[i])] = result.solution[i + 1];
    return CosPoly(std::move(t));
}

SupportSet periodic_truncation(const RationalCutoff& h, std::int64_t periods) {
    if (periods < 0) throw Error(ErrorCode::InvalidArgument, "periods must be >= 0");
    return truncate_support(SupportSet::periodic_block(h), h.q() * periods + (h.q() - h.p()));
}

LPResult delta_periodic_lp(const RationalCutoff& h, std::int64_t periods, std::int64_t grid) {
    return delta_grid_lp(periodic_truncation(h, periods), grid);
}

LPResult turan_relaxed_lp(const RationalCutoff& h, std::int64_t degree, std::int64_t grid,
                          double eps) {
    if (degree < h.q()) throw Error(ErrorCode::InvalidArgument, "degree N must be >= q");
    if (grid < 1) throw Error(ErrorCode::InvalidGrid, "grid size must be >= 1");
    if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");

    const auto nv = static_cast<std::size_t>(degree) + 1;
    std::vector<double> c(nv, 0.0);
    c[0] = -1.0;
    LPProblem prob(std::move(c), VarBound::NonNegative);
    prob.add_row(std::vector<double>(nv, 1.0), Relation::Equal, 1.0);
    const double lo = h.value();
    for (std::int64_t j = 0; j <= grid; ++j) {
        const double x = lo + (0.5 - lo) * static_cast<double>(j) / static_cast<double>(grid);
        std::vector<double> row(nv);
        for (std::size_t n = 0; n < nv; ++n) {
            row[n] = std::cos(2.0 * std::numbers::pi * static_cast<double>(n) * x);
        }
        prob.add_row(row, Relation::LessEqual, eps);
        prob.add_row(std::move(row), Relation::GreaterEqual, -eps);
    }
    auto result = simplex_solve(prob);
    if (result.status == LPStatus::Infeasible) {
        throw Error(ErrorCode::EpsTooSmall,
                    "no nonnegative cosine series of degree " + std::to_string(degree) +
                        " stays within eps of zero on the grid");
    }
    result.value = -result.value;
    return result;
}

}  // namespace vdc
