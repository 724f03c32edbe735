#include "vdc/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vdc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResidualTol = 1e-10;
constexpr double kMinGamma = 1e-12;

double cos_ratio(std::int64_t num, std::int64_t q) {
    return std::cos(2.0 * kPi * static_cast<double>(num) / static_cast<double>(q));
}

std::string pq(const RationalCutoff& h) {
    return "p=" + std::to_string(h.p()) + ", q=" + std::to_string(h.q());
}

}  // namespace

double GammaSolution::operator()(std::int64_t nu) const {
    double s = gammas.at(0);
    for (std::size_t i = 0; i < shifts.size(); ++i) s += gammas.at(i + 1) * cos_ratio(shifts[i] * nu, q);
    return s;
}

double turan_value_p1(std::int64_t q) { return 1.0 / static_cast<double>(q); }

double turan_value_p2(std::int64_t q) {
    const double c = std::cos(kPi / static_cast<double>(q));
    return (1.0 + c) / (static_cast<double>(q) * c);
}

double turan_value_p3(std::int64_t q) {
    const std::int64_t r0 = q / 3;
    const double c1 = cos_ratio(r0, q);
    const double c2 = cos_ratio(r0 + 1, q);
    return (1.0 + (1.0 - 2.0 * (c1 + c2)) / (1.0 + 2.0 * c1 * c2)) / static_cast<double>(q);
}

double turan_value_half_step(std::int64_t p) {
    const double c = std::cos(kPi / static_cast<double>(2 * p + 1));
    return c / (1.0 + c);
}

bool has_turan_value(const RationalCutoff& h) noexcept {
    const auto p = h.p();
    const auto q = h.q();
    return p == 1 || (p == 2 && q % 2 == 1) || (p == 3 && q % 3 != 0) || q == 2 * p + 1;
}

double turan_value(const RationalCutoff& h) {
    const auto p = h.p();
    const auto q = h.q();
    // Coprimality already forces q odd for p = 2 and 3 | q impossible for p = 3;
    // the explicit tests mirror the branch statements.
    if (p == 1) return turan_value_p1(q);
    if (p == 2 && q % 2 == 1) return turan_value_p2(q);
    if (p == 3 && q % 3 != 0) return turan_value_p3(q);
    if (q == 2 * p + 1) return turan_value_half_step(p);
    throw Error(ErrorCode::UnsupportedCase, "no closed form for A(p/q) with " + pq(h));
}

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    if (a.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix/rhs size mismatch");
    const auto orig_a = a;
    const auto orig_b = b;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        }
        if (std::abs(a[piv * n + col]) < 1e-14) {
            throw Error(ErrorCode::SingularSystem, "zero pivot in column " + std::to_string(col));
        }
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }

    double residual = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double s = -orig_b[r];
        for (std::size_t c = 0; c < n; ++c) s += orig_a[r * n + c] * x[c];
        residual = std::max(residual, std::abs(s));
    }
    if (!(residual <= kResidualTol)) {
        throw Error(ErrorCode::SingularSystem,
                    "linear solve residual " + std::to_string(residual) + " exceeds tolerance");
    }
    return x;
}

GammaSolution solve_gamma(const RationalCutoff& h) {
    const auto p = h.p();
    const auto q = h.q();
    GammaSolution sol;
    sol.p = p;
    sol.q = q;
    if (p == 3 && q % 3 != 0) {
        sol.r0 = q / 3;
        sol.shifts = {sol.r0, sol.r0 + 1};
    } else if (p == 2 && q % 2 == 1) {
        sol.r0 = (q - 1) / 2;
        sol.shifts = {sol.r0};
    } else {
        throw Error(ErrorCode::UnsupportedCase, "Gamma system is defined for p in {2, 3}; got " + pq(h));
    }

    // Row j encodes Gamma(j) = [j == 0] for j = 0..p-1.
    const auto n = static_cast<std::size_t>(p);
    std::vector<double> m(n * n);
    std::vector<double> rhs(n, 0.0);
    rhs[0] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        m[j * n] = 1.0;
        for (std::size_t i = 0; i < sol.shifts.size(); ++i) {
            m[j * n + i + 1] = cos_ratio(sol.shifts[i] * static_cast<std::int64_t>(j), q);
        }
    }
    sol.gammas = solve_dense(std::move(m), std::move(rhs));

    for (std::size_t i = 0; i < sol.gammas.size(); ++i) {
        if (!(sol.gammas[i] > kMinGamma)) {
            throw Error(ErrorCode::NonPositiveGamma,
                        "gamma_" + std::to_string(i) + " = " + std::to_string(sol.gammas[i]) +
                            " for " + pq(h));
        }
    }
    sol.a_value = 1.0 / (static_cast<double>(q) * sol.gammas[0]);
    return sol;
}

}  // namespace vdc
