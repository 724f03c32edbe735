#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdc/core.hpp"

namespace vdc {

/// Additive slack for comparisons between grid-LP values of different sets.
inline constexpr double kPropertyTolerance = 2e-3;

/// Result of one property check, serialized as
/// {"check":..., "inputs":{...}, "values":[...], "pass":bool}.
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<double> values;
    bool pass = false;
};

struct PairingResult {
    double lhs = 0.0;  // T_0
    double rhs = 0.0;  // sum_n a_n T(n/q)
    double a0 = 0.0;
};

/// Pairing of T (supported in K_{p,q}) with f (a_n >= 0, f(0) = 1,
/// f(k/q) = 0 for k in K_{p,q}, k <= deg T):
///   T_0 = sum_k T_k f(k/q) = sum_n a_n T(n/q).
/// Throws PreconditionViolated when T or f do not qualify.
[[nodiscard]] PairingResult pairing_check(const CosPoly& poly, const CosPoly& f,
                                          const RationalCutoff& h);

/// Grid-LP optimum for a finite set; throws SolverFailure if not optimal.
[[nodiscard]] double grid_delta(const SupportSet& support, std::int64_t grid);

/// delta(K1) >= delta(K2) for K1 subset of K2 on a common grid. Throws NotASubset.
[[nodiscard]] CheckReport check_monotonicity(const SupportSet& sub, const SupportSet& super,
                                             std::int64_t grid);

/// delta(K) against delta(mK), the latter on an m-times finer grid.
[[nodiscard]] CheckReport check_dilation(const SupportSet& support, std::int64_t factor,
                                         std::int64_t grid);

/// K^(m) = {k in K : m | k}.
[[nodiscard]] SupportSet multiples_of(const SupportSet& support, std::int64_t m);

/// If K^(m) is empty: delta(K) >= 1/m. Otherwise delta(K^(m)) <= m delta(K).
[[nodiscard]] CheckReport check_divisibility_bound(const SupportSet& support, std::int64_t m,
                                                   std::int64_t grid);

/// delta(K1) delta(K2) <= delta(K1 u K2).
[[nodiscard]] CheckReport check_supermultiplicative(const SupportSet& a, const SupportSet& b,
                                                    std::int64_t grid);

/// Largest bound 1/m over moduli m >= 2 with K^(m) empty; 0 if none found up
/// to `max_modulus`. Works for finite and periodic sets.
[[nodiscard]] double residue_lower_bound(const SupportSet& support, std::int64_t max_modulus);

struct VdcVerdict {
    enum class Kind { NotVanDerCorput, Inconclusive };

    Kind kind = Kind::Inconclusive;
    double bound = 0.0;
    std::string source;

    /// "NotVanDerCorput(<bound>)" or "Inconclusive".
    [[nodiscard]] std::string label() const;
};

/// A positive lower bound on delta(K) rules K out as a van der Corput set.
/// There is no positive verdict: delta(K) = 0 is never decided numerically.
[[nodiscard]] VdcVerdict vdc_verdict(const SupportSet& support, std::optional<double> lower_bound,
                                     std::string source = {});

/// Collects the best available lower bound (residue classes, the closed form
/// for canonical periodic blocks, the grid LP for finite sets) and returns
/// the verdict.
[[nodiscard]] VdcVerdict assess_vdc(const SupportSet& support, std::int64_t grid);

}  // namespace vdc
