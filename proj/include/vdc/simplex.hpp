#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vdc {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class VarBound { NonNegative, Free };

struct LPConstraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

/// minimize objective . x subject to the rows and per-variable bounds.
struct LPProblem {
    std::vector<double> objective;
    std::vector<VarBound> bounds;
    std::vector<LPConstraint> rows;

    explicit LPProblem(std::vector<double> c, VarBound bound = VarBound::NonNegative)
        : objective(std::move(c)), bounds(objective.size(), bound) {}

    LPProblem& add_row(std::vector<double> coeffs, Relation rel, double rhs) {
        rows.push_back({std::move(coeffs), rel, rhs});
        return *this;
    }

    [[nodiscard]] std::size_t num_vars() const noexcept { return objective.size(); }

    /// Throws InvalidArgument on inconsistent dimensions or non-finite data.
    void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

[[nodiscard]] const char* lp_status_name(LPStatus status) noexcept;

struct LPResult {
    LPStatus status = LPStatus::IterationLimit;
    double value = 0.0;             // objective . solution
    std::vector<double> solution;   // original (unsplit) variables
    std::size_t iterations = 0;     // pivots over both phases
    double max_violation = 0.0;     // largest constraint/bound violation of `solution`

    [[nodiscard]] bool optimal() const noexcept { return status == LPStatus::Optimal; }
};

inline constexpr std::size_t kDefaultMaxIters = 200000;

/// Two-phase dense simplex on a dictionary tableau. Pivoting uses the most
/// negative reduced cost and falls back to Bland's rule during long runs of
/// degenerate steps, so cycling cannot occur. All ties are broken by a fixed
/// order, so pivot sequences are reproducible. Free variables are split into a
/// difference of nonnegative parts; equalities become a pair of inequalities.
[[nodiscard]] LPResult simplex_solve(const LPProblem& problem,
                                     std::size_t max_iters = kDefaultMaxIters);

}  // namespace vdc
