#include "vdc/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace vdc {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyTruncation: return "EmptyTruncation";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::NonPositiveGamma: return "NonPositiveGamma";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::EpsTooSmall: return "EpsTooSmall";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotASubset: return "NotASubset";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SolverFailure: return "SolverFailure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

RationalCutoff make_cutoff(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 2) {
        throw Error(ErrorCode::OutOfRange,
                    "cutoff needs p >= 1 and q >= 2, got p=" + std::to_string(p) +
                        ", q=" + std::to_string(q));
    }
    if (std::gcd(p, q) != 1) {
        throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                                               ") = " + std::to_string(std::gcd(p, q)));
    }
    if (2 * p > q) {
        throw Error(ErrorCode::OutOfRange,
                    "cutoff needs 2p <= q, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
    }
    return RationalCutoff(p, q);
}

// ---------------------------------------------------------------------------
// SupportSet

namespace {

std::vector<std::int64_t> normalized(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool operator==(const SupportSet::Finite& a, const SupportSet::Finite& b) {
    return a.elements == b.elements;
}

bool operator==(const SupportSet::Periodic& a, const SupportSet::Periodic& b) {
    return a.q == b.q && a.base == b.base;
}

bool operator==(const SupportSet& a, const SupportSet& b) { return a.repr_ == b.repr_; }

SupportSet SupportSet::finite(std::vector<std::int64_t> elements) {
    auto sorted = normalized(std::move(elements));
    if (!sorted.empty() && sorted.front() < 1) {
        throw Error(ErrorCode::InvalidArgument, "support elements must be positive integers");
    }
    return SupportSet(Finite{std::move(sorted)});
}

SupportSet SupportSet::periodic(std::int64_t q, std::vector<std::int64_t> base) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "period must be >= 2");
    auto sorted = normalized(std::move(base));
    if (sorted.empty()) throw Error(ErrorCode::InvalidArgument, "periodic base must be nonempty");
    if (sorted.front() < 1 || sorted.back() > q - 1) {
        throw Error(ErrorCode::InvalidArgument, "periodic base elements must lie in [1, q-1]");
    }
    return SupportSet(Periodic{q, std::move(sorted)});
}

SupportSet SupportSet::block(const RationalCutoff& h) {
    std::vector<std::int64_t> k(static_cast<std::size_t>(h.q() - 2 * h.p() + 1));
    std::iota(k.begin(), k.end(), h.p());
    return finite(std::move(k));
}

SupportSet SupportSet::periodic_block(const RationalCutoff& h) {
    const auto k0 = block(h);
    return periodic(h.q(), std::vector<std::int64_t>(k0.elements().begin(), k0.elements().end()));
}

std::span<const std::int64_t> SupportSet::elements() const {
    if (const auto* f = std::get_if<Finite>(&repr_)) return f->elements;
    throw Error(ErrorCode::InvalidArgument, "periodic support set has no finite element list");
}

const SupportSet::Periodic& SupportSet::periodic_repr() const {
    if (const auto* p = std::get_if<Periodic>(&repr_)) return *p;
    throw Error(ErrorCode::InvalidArgument, "support set is not periodic");
}

bool SupportSet::contains(std::int64_t k) const {
    if (k < 1) return false;
    if (const auto* f = std::get_if<Finite>(&repr_)) {
        return std::binary_search(f->elements.begin(), f->elements.end(), k);
    }
    const auto& p = std::get<Periodic>(repr_);
    return std::binary_search(p.base.begin(), p.base.end(), k % p.q);
}

bool SupportSet::empty() const noexcept {
    if (const auto* f = std::get_if<Finite>(&repr_)) return f->elements.empty();
    return false;
}

std::int64_t SupportSet::max_element() const {
    const auto e = elements();
    return e.empty() ? 0 : e.back();
}

std::string SupportSet::to_string() const {
    std::ostringstream os;
    auto join = [&os](std::span<const std::int64_t> v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << '}';
    };
    if (const auto* f = std::get_if<Finite>(&repr_)) {
        join(f->elements);
    } else {
        const auto& p = std::get<Periodic>(repr_);
        os << p.q << "Z+ + ";
        join(p.base);
    }
    return os.str();
}

SupportSet truncate_support(const SupportSet& set, std::int64_t max_freq) {
    if (max_freq < 1) throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 1");
    std::vector<std::int64_t> out;
    if (set.is_finite()) {
        for (auto k : set.elements()) {
            if (k <= max_freq) out.push_back(k);
        }
    } else {
        const auto& p = set.periodic_repr();
        for (std::int64_t start = 0; start + p.base.front() <= max_freq; start += p.q) {
            for (auto k : p.base) {
                if (start + k <= max_freq) out.push_back(start + k);
            }
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::EmptyTruncation,
                    "no element of " + set.to_string() + " is <= " + std::to_string(max_freq));
    }
    return SupportSet::finite(std::move(out));
}

SupportSet dilate_support(const SupportSet& set, std::int64_t factor) {
    if (factor < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be >= 1");
    std::vector<std::int64_t> out(set.elements().begin(), set.elements().end());
    for (auto& k : out) k *= factor;
    return SupportSet::finite(std::move(out));
}

bool is_subset(const SupportSet& subset, const SupportSet& superset, std::int64_t max_freq) {
    const auto elems = subset.elements();
    if (!elems.empty() && elems.back() > max_freq) {
        throw Error(ErrorCode::InvalidArgument, "subset has elements above the truncation degree");
    }
    return std::all_of(elems.begin(), elems.end(),
                       [&](std::int64_t k) { return superset.contains(k); });
}

// ---------------------------------------------------------------------------
// CosPoly

CosPoly::CosPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (double c : coeffs_) {
        if (!std::isfinite(c)) {
            throw Error(ErrorCode::InvalidArgument, "cosine coefficients must be finite");
        }
    }
}

std::size_t CosPoly::degree() const noexcept {
    for (std::size_t k = coeffs_.size() - 1; k > 0; --k) {
        if (coeffs_[k] != 0.0) return k;
    }
    return 0;
}

double CosPoly::value_at_zero() const noexcept {
    double s = 0.0;
    for (double c : coeffs_) s += c;
    return s;
}

// The argument is reduced to [-1/2, 1/2] first so that T(x + n) and T(x)
// go through identical arithmetic.
double CosPoly::operator()(double x) const noexcept {
    const double xr = x - std::round(x);
    const double w = 2.0 * std::numbers::pi * xr;
    double s = coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0.0) s += coeffs_[k] * std::cos(w * static_cast<double>(k));
    }
    return s;
}

double CosPoly::derivative(double x) const noexcept {
    const double xr = x - std::round(x);
    const double w = 2.0 * std::numbers::pi * xr;
    double s = 0.0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        const double kd = static_cast<double>(k);
        if (coeffs_[k] != 0.0) s -= kd * coeffs_[k] * std::sin(w * kd);
    }
    return 2.0 * std::numbers::pi * s;
}

std::vector<std::int64_t> CosPoly::support() const {
    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0.0) out.push_back(static_cast<std::int64_t>(k));
    }
    return out;
}

double eval_cospoly(const CosPoly& poly, double x) noexcept { return poly(x); }

}  // namespace vdc
