#include "vdc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vdc/core.hpp"

namespace vdc {

const char* lp_status_name(LPStatus status) noexcept {
    switch (status) {
        case LPStatus::Optimal: return "Optimal";
        case LPStatus::Infeasible: return "Infeasible";
        case LPStatus::Unbounded: return "Unbounded";
        case LPStatus::IterationLimit: return "IterationLimit";
    }
    return "Unknown";
}

void LPProblem::validate() const {
    const auto n = objective.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "LP has no variables");
    if (bounds.size() != n) throw Error(ErrorCode::InvalidArgument, "LP bounds size mismatch");
    for (double c : objective) {
        if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite objective entry");
    }
    for (const auto& row : rows) {
        if (row.coeffs.size() != n) {
            throw Error(ErrorCode::InvalidArgument, "LP row has wrong number of coefficients");
        }
        if (!std::isfinite(row.rhs)) throw Error(ErrorCode::InvalidArgument, "non-finite rhs");
        for (double a : row.coeffs) {
            if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "non-finite LP entry");
        }
    }
}

namespace {

constexpr double kEps = 1e-9;
constexpr int kArtificial = -1;
constexpr std::size_t kDegenerateRunLimit = 1000;

// Dictionary form of  max c.x  s.t.  A x <= b, x >= 0.
//
// Row i (i < m) reads  sum_j D[i][j] x_{N[j]} + x_{B[i]} = D[i][n+1].
// Row m holds the phase-2 objective, row m+1 the phase-1 objective; in both
// the rhs column is the current objective value. Column n is the artificial
// variable of phase 1. Labels: 0..n-1 structural, n..n+m-1 slacks, -1 the
// artificial variable.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n)
        : m_(m), n_(n), w_(n + 2), d_((m + 2) * (n + 2), 0.0), basis_(m), nonbasis_(n + 1) {
        for (std::size_t i = 0; i < m; ++i) basis_[i] = static_cast<int>(n + i);
        for (std::size_t j = 0; j < n; ++j) nonbasis_[j] = static_cast<int>(j);
        nonbasis_[n] = kArtificial;
    }

    double& at(std::size_t i, std::size_t j) { return d_[i * w_ + j]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return d_[i * w_ + j]; }

    [[nodiscard]] std::size_t rhs_col() const { return n_ + 1; }

    void pivot(std::size_t r, std::size_t s) {
        double* row_r = &d_[r * w_];
        const double inv = 1.0 / row_r[s];
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            double* row_i = &d_[i * w_];
            if (row_i[s] == 0.0) continue;
            const double f = row_i[s] * inv;
            for (std::size_t j = 0; j < w_; ++j) row_i[j] -= row_r[j] * f;
            row_i[s] = -f;
        }
        for (std::size_t j = 0; j < w_; ++j) {
            if (j != s) row_r[j] *= inv;
        }
        row_r[s] = inv;
        std::swap(basis_[r], nonbasis_[s]);
        ++iterations_;
    }

    enum class Outcome { Optimal, Unbounded, IterationLimit };

    // Entering column: most negative reduced cost, ties to the smallest label.
    // After kDegenerateRunLimit consecutive zero-length steps the entering
    // rule switches to Bland's (smallest label with negative reduced cost)
    // until the objective moves again, which rules out cycling. Bland's rule
    // alone is too unstable on the grid LPs: it keeps picking columns whose
    // reduced cost is rounding noise.
    // Leaving row: minimum ratio; near-ties go to the largest pivot element,
    // then to the smallest basic label.
    Outcome run(std::size_t obj_row, bool allow_artificial, std::size_t max_iters) {
        const std::size_t rc = rhs_col();
        std::size_t degenerate_run = 0;
        while (true) {
            const bool bland = degenerate_run >= kDegenerateRunLimit;
            std::size_t s = w_;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (!allow_artificial && nonbasis_[j] == kArtificial) continue;
                const double d = at(obj_row, j);
                if (d >= -kEps) continue;
                if (s == w_) {
                    s = j;
                } else if (bland ? nonbasis_[j] < nonbasis_[s]
                                 : d < at(obj_row, s) || (d == at(obj_row, s) && nonbasis_[j] < nonbasis_[s])) {
                    s = j;
                }
            }
            if (s == w_) return Outcome::Optimal;

            std::size_t r = m_;
            double best = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                const double a = at(i, s);
                if (a <= kEps) continue;
                const double ratio = std::max(0.0, at(i, rc)) / a;
                if (r == m_) {
                    r = i;
                    best = ratio;
                    continue;
                }
                const double tie = 1e-12 * (1.0 + std::abs(best));
                const double ar = at(r, s);
                if (ratio < best - tie ||
                    (ratio <= best + tie && (a > ar || (a == ar && basis_[i] < basis_[r])))) {
                    r = i;
                    best = std::min(best, ratio);
                }
            }
            if (r == m_) return Outcome::Unbounded;
            if (iterations_ >= max_iters) return Outcome::IterationLimit;
            degenerate_run = best <= kEps ? degenerate_run + 1 : 0;
            pivot(r, s);
        }
    }

    [[nodiscard]] std::size_t iterations() const { return iterations_; }
    [[nodiscard]] int basis(std::size_t i) const { return basis_[i]; }
    [[nodiscard]] int nonbasis(std::size_t j) const { return nonbasis_[j]; }

    [[nodiscard]] std::vector<double> primal() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) {
                x[static_cast<std::size_t>(basis_[i])] = at(i, rhs_col());
            }
        }
        return x;
    }

private:
    std::size_t m_;
    std::size_t n_;
    std::size_t w_;
    std::vector<double> d_;
    std::vector<int> basis_;
    std::vector<int> nonbasis_;
    std::size_t iterations_ = 0;
};

double max_violation(const LPProblem& prob, const std::vector<double>& x) {
    double worst = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (prob.bounds[j] == VarBound::NonNegative) worst = std::max(worst, -x[j]);
    }
    for (const auto& row : prob.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
        const double diff = lhs - row.rhs;
        switch (row.relation) {
            case Relation::LessEqual: worst = std::max(worst, diff); break;
            case Relation::GreaterEqual: worst = std::max(worst, -diff); break;
            case Relation::Equal: worst = std::max(worst, std::abs(diff)); break;
        }
    }
    return worst;
}

}  // namespace

LPResult simplex_solve(const LPProblem& prob, std::size_t max_iters) {
    prob.validate();

    // Column layout of the standard form: each original variable maps to a
    // positive part, free variables get an extra negative part.
    const std::size_t n_orig = prob.num_vars();
    std::vector<std::size_t> pos_col(n_orig);
    std::vector<std::size_t> neg_col(n_orig, SIZE_MAX);
    std::size_t n = 0;
    for (std::size_t j = 0; j < n_orig; ++j) {
        pos_col[j] = n++;
        if (prob.bounds[j] == VarBound::Free) neg_col[j] = n++;
    }

    std::size_t m = 0;
    for (const auto& row : prob.rows) m += row.relation == Relation::Equal ? 2 : 1;

    Tableau t(m, n);
    std::size_t i = 0;
    auto emit = [&](const LPConstraint& row, double sign) {
        for (std::size_t j = 0; j < n_orig; ++j) {
            const double a = sign * row.coeffs[j];
            t.at(i, pos_col[j]) = a;
            if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -a;
        }
        t.at(i, n) = -1.0;
        t.at(i, n + 1) = sign * row.rhs;
        ++i;
    };
    for (const auto& row : prob.rows) {
        switch (row.relation) {
            case Relation::LessEqual: emit(row, 1.0); break;
            case Relation::GreaterEqual: emit(row, -1.0); break;
            case Relation::Equal:
                emit(row, 1.0);
                emit(row, -1.0);
                break;
        }
    }
    // Phase-2 objective: maximize -c.x.
    for (std::size_t j = 0; j < n_orig; ++j) {
        t.at(m, pos_col[j]) = prob.objective[j];
        if (neg_col[j] != SIZE_MAX) t.at(m, neg_col[j]) = -prob.objective[j];
    }
    // Phase-1 objective: maximize -x_art.
    t.at(m + 1, n) = 1.0;

    LPResult result;
    auto finish = [&](LPStatus status) {
        result.status = status;
        result.iterations = t.iterations();
        const auto x = t.primal();
        result.solution.assign(n_orig, 0.0);
        for (std::size_t j = 0; j < n_orig; ++j) {
            result.solution[j] = x[pos_col[j]] - (neg_col[j] != SIZE_MAX ? x[neg_col[j]] : 0.0);
        }
        result.value = 0.0;
        for (std::size_t j = 0; j < n_orig; ++j) result.value += prob.objective[j] * result.solution[j];
        result.max_violation = max_violation(prob, result.solution);
        return result;
    };

    std::size_t most_negative = m;
    for (std::size_t r = 0; r < m; ++r) {
        if (t.at(r, n + 1) < -kEps &&
            (most_negative == m || t.at(r, n + 1) < t.at(most_negative, n + 1))) {
            most_negative = r;
        }
    }
    if (most_negative != m) {
        t.pivot(most_negative, n);
        const auto phase1 = t.run(m + 1, true, max_iters);
        if (phase1 == Tableau::Outcome::IterationLimit) return finish(LPStatus::IterationLimit);
        if (t.at(m + 1, n + 1) < -1e-8) return finish(LPStatus::Infeasible);
        // Drive a degenerate artificial variable out of the basis.
        for (std::size_t r = 0; r < m; ++r) {
            if (t.basis(r) != kArtificial) continue;
            std::size_t s = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (std::abs(t.at(r, j)) > std::abs(t.at(r, s))) s = j;
            }
            // An all-zero row is redundant; the artificial stays basic at zero.
            if (std::abs(t.at(r, s)) > 1e-12) t.pivot(r, s);
        }
    }

    switch (t.run(m, false, max_iters)) {
        case Tableau::Outcome::Optimal: return finish(LPStatus::Optimal);
        case Tableau::Outcome::Unbounded: return finish(LPStatus::Unbounded);
        case Tableau::Outcome::IterationLimit: return finish(LPStatus::IterationLimit);
    }
    return finish(LPStatus::IterationLimit);
}

}  // namespace vdc
