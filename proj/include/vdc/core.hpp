#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vdc {

enum class ErrorCode {
    NotCoprime,
    OutOfRange,
    EmptyTruncation,
    UnsupportedCase,
    SingularSystem,
    NonPositiveGamma,
    InvalidGrid,
    EpsTooSmall,
    PreconditionViolated,
    NotASubset,
    InvalidArgument,
    ParseError,
    SolverFailure,
};

[[nodiscard]] const char* error_code_name(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Rational cutoff h = p/q with gcd(p, q) = 1 and 1 <= p, 2p <= q.
class RationalCutoff {
public:
    [[nodiscard]] std::int64_t p() const noexcept { return p_; }
    [[nodiscard]] std::int64_t q() const noexcept { return q_; }
    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(p_) / static_cast<double>(q_);
    }

    friend bool operator==(const RationalCutoff&, const RationalCutoff&) = default;

private:
    friend RationalCutoff make_cutoff(std::int64_t p, std::int64_t q);
    RationalCutoff(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

    std::int64_t p_;
    std::int64_t q_;
};

/// Throws Error{NotCoprime} or Error{OutOfRange}.
[[nodiscard]] RationalCutoff make_cutoff(std::int64_t p, std::int64_t q);

/// Set of allowed cosine frequencies, either an explicit finite list or the
/// q-periodic set { q*nu + k : nu >= 0, k in base }.
class SupportSet {
public:
    struct Finite {
        std::vector<std::int64_t> elements;  // strictly increasing, >= 1
    };
    struct Periodic {
        std::int64_t q;
        std::vector<std::int64_t> base;  // strictly increasing, in [1, q-1]
    };

    /// Sorts and deduplicates; rejects elements < 1.
    [[nodiscard]] static SupportSet finite(std::vector<std::int64_t> elements);
    [[nodiscard]] static SupportSet periodic(std::int64_t q, std::vector<std::int64_t> base);

    /// K^0_{p,q} = {p, ..., q-p} as a finite set.
    [[nodiscard]] static SupportSet block(const RationalCutoff& h);
    /// K_{p,q} = q Z_+ + {p, ..., q-p}.
    [[nodiscard]] static SupportSet periodic_block(const RationalCutoff& h);

    [[nodiscard]] bool is_finite() const noexcept {
        return std::holds_alternative<Finite>(repr_);
    }
    [[nodiscard]] bool is_periodic() const noexcept { return !is_finite(); }

    /// Elements of a finite set; throws InvalidArgument for periodic sets.
    [[nodiscard]] std::span<const std::int64_t> elements() const;
    [[nodiscard]] const Periodic& periodic_repr() const;

    [[nodiscard]] bool contains(std::int64_t k) const;
    [[nodiscard]] bool empty() const noexcept;
    /// Largest element of a finite set (0 when empty).
    [[nodiscard]] std::int64_t max_element() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SupportSet& a, const SupportSet& b);

private:
    explicit SupportSet(std::variant<Finite, Periodic> repr) : repr_(std::move(repr)) {}

    std::variant<Finite, Periodic> repr_;
};

bool operator==(const SupportSet::Finite& a, const SupportSet::Finite& b);
bool operator==(const SupportSet::Periodic& a, const SupportSet::Periodic& b);

/// { k in K : k <= max_freq } as a finite set. Throws EmptyTruncation.
[[nodiscard]] SupportSet truncate_support(const SupportSet& set, std::int64_t max_freq);

/// { m*k : k in K }.
[[nodiscard]] SupportSet dilate_support(const SupportSet& set, std::int64_t factor);

/// True iff every element of `subset` (all <= max_freq) lies in `superset`.
[[nodiscard]] bool is_subset(const SupportSet& subset, const SupportSet& superset,
                             std::int64_t max_freq);

/// Even 1-periodic cosine polynomial t_0 + sum_k t_k cos(2 pi k x).
class CosPoly {
public:
    CosPoly() : coeffs_{0.0} {}
    explicit CosPoly(std::vector<double> coeffs);

    /// Storage degree H (coeffs().size() - 1).
    [[nodiscard]] std::size_t storage_degree() const noexcept { return coeffs_.size() - 1; }
    /// Largest k with t_k != 0; 0 for constants.
    [[nodiscard]] std::size_t degree() const noexcept;

    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }
    [[nodiscard]] double constant_term() const noexcept { return coeffs_[0]; }

    /// T(0) = sum of all coefficients.
    [[nodiscard]] double value_at_zero() const noexcept;

    [[nodiscard]] double operator()(double x) const noexcept;
    /// T'(x).
    [[nodiscard]] double derivative(double x) const noexcept;

    /// Indices k >= 1 with t_k != 0.
    [[nodiscard]] std::vector<std::int64_t> support() const;

    friend bool operator==(const CosPoly&, const CosPoly&) = default;

private:
    std::vector<double> coeffs_;
};

[[nodiscard]] double eval_cospoly(const CosPoly& poly, double x) noexcept;

}  // namespace vdc
