#include "vdc/properties.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <sstream>

#include "vdc/closed_forms.hpp"
#include "vdc/delta_lp.hpp"
#include "vdc/extremal.hpp"

namespace vdc {

namespace {

constexpr double kExactTol = 1e-9;

std::string str(std::int64_t v) { return std::to_string(v); }

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
    std::vector<std::int64_t> out(a.elements().begin(), a.elements().end());
    out.insert(out.end(), b.elements().begin(), b.elements().end());
    return SupportSet::finite(std::move(out));
}

}  // namespace

PairingResult pairing_check(const CosPoly& poly, const CosPoly& f, const RationalCutoff& h) {
    const auto periodic = SupportSet::periodic_block(h);
    const auto t = poly.coeffs();
    for (std::size_t k = 1; k < t.size(); ++k) {
        if (std::abs(t[k]) > kSnapTolerance && !periodic.contains(static_cast<std::int64_t>(k))) {
            throw Error(ErrorCode::PreconditionViolated,
                        "T has frequency " + std::to_string(k) + " outside " + periodic.to_string());
        }
    }
    const auto a = f.coeffs();
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] < -1e-15) {
            throw Error(ErrorCode::PreconditionViolated,
                        "f has a negative coefficient at n = " + std::to_string(n));
        }
    }
    if (std::abs(f.value_at_zero() - 1.0) > kExactTol) {
        throw Error(ErrorCode::PreconditionViolated, "f(0) != 1");
    }
    const double qd = static_cast<double>(h.q());
    const auto deg = static_cast<std::int64_t>(poly.degree());
    for (std::int64_t k = 1; k <= deg; ++k) {
        if (!periodic.contains(k)) continue;
        if (std::abs(f(static_cast<double>(k) / qd)) > kExactTol) {
            throw Error(ErrorCode::PreconditionViolated,
                        "f does not vanish at k/q for k = " + std::to_string(k));
        }
    }

    PairingResult out;
    out.lhs = poly.constant_term();
    out.a0 = f.constant_term();
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] != 0.0) out.rhs += a[n] * poly(static_cast<double>(n) / qd);
    }
    return out;
}

double grid_delta(const SupportSet& support, std::int64_t grid) {
    const auto res = delta_grid_lp(support, grid);
    if (!res.optimal()) {
        throw Error(ErrorCode::SolverFailure, std::string("grid LP for ") + support.to_string() +
                                                  " ended with status " +
                                                  lp_status_name(res.status));
    }
    return res.value;
}

CheckReport check_monotonicity(const SupportSet& sub, const SupportSet& super, std::int64_t grid) {
    if (!is_subset(sub, super, sub.max_element())) {
        throw Error(ErrorCode::NotASubset, sub.to_string() + " is not contained in " + super.to_string());
    }
    CheckReport rep{"mono", {{"K1", sub.to_string()}, {"K2", super.to_string()}, {"grid", str(grid)}}, {}, false};
    const double v1 = grid_delta(sub, grid);
    const double v2 = grid_delta(super, grid);
    rep.values = {v1, v2};
    rep.pass = v1 >= v2 - kExactTol;
    return rep;
}

CheckReport check_dilation(const SupportSet& support, std::int64_t factor, std::int64_t grid) {
    CheckReport rep{"dilate", {{"K", support.to_string()}, {"factor", str(factor)}, {"grid", str(grid)}}, {}, false};
    const double v1 = grid_delta(support, grid);
    const double v2 = factor == 1 ? v1 : grid_delta(dilate_support(support, factor), factor * grid);
    rep.values = {v1, v2};
    rep.pass = std::abs(v1 - v2) <= kPropertyTolerance;
    return rep;
}

SupportSet multiples_of(const SupportSet& support, std::int64_t m) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
    std::vector<std::int64_t> out;
    std::copy_if(support.elements().begin(), support.elements().end(), std::back_inserter(out),
                 [m](std::int64_t k) { return k % m == 0; });
    return SupportSet::finite(std::move(out));
}

CheckReport check_divisibility_bound(const SupportSet& support, std::int64_t m, std::int64_t grid) {
    CheckReport rep{"divis", {{"K", support.to_string()}, {"m", str(m)}, {"grid", str(grid)}}, {}, false};
    const auto multiples = multiples_of(support, m);
    const double v = grid_delta(support, grid);
    if (multiples.empty()) {
        rep.values = {v, 1.0 / static_cast<double>(m)};
        rep.pass = v >= 1.0 / static_cast<double>(m) - kPropertyTolerance;
    } else {
        const double vm = grid_delta(multiples, grid);
        rep.values = {vm, v};
        rep.pass = vm <= static_cast<double>(m) * v + kPropertyTolerance;
    }
    return rep;
}

CheckReport check_supermultiplicative(const SupportSet& a, const SupportSet& b, std::int64_t grid) {
    CheckReport rep{"super", {{"K1", a.to_string()}, {"K2", b.to_string()}, {"grid", str(grid)}}, {}, false};
    const double va = grid_delta(a, grid);
    const double vb = grid_delta(b, grid);
    const double vu = grid_delta(set_union(a, b), grid);
    rep.values = {va, vb, vu};
    rep.pass = va * vb <= vu + kPropertyTolerance;
    return rep;
}

double residue_lower_bound(const SupportSet& support, std::int64_t max_modulus) {
    for (std::int64_t m = 2; m <= max_modulus; ++m) {
        bool empty = true;
        if (support.is_finite()) {
            for (auto k : support.elements()) {
                if (k % m == 0) {
                    empty = false;
                    break;
                }
            }
        } else {
            // q nu + k is divisible by m for some nu >= 0 iff gcd(q, m) | k.
            const auto& per = support.periodic_repr();
            const auto g = std::gcd(per.q, m);
            for (auto k : per.base) {
                if (k % g == 0) {
                    empty = false;
                    break;
                }
            }
        }
        if (empty) return 1.0 / static_cast<double>(m);
    }
    return 0.0;
}

std::string VdcVerdict::label() const {
    if (kind == Kind::Inconclusive) return "Inconclusive";
    std::ostringstream os;
    os.precision(6);
    os << "NotVanDerCorput(" << bound << ")";
    return os.str();
}

VdcVerdict vdc_verdict(const SupportSet& support, std::optional<double> lower_bound,
                       std::string source) {
    (void)support;
    VdcVerdict v;
    if (lower_bound && *lower_bound > 0.0) {
        v.kind = VdcVerdict::Kind::NotVanDerCorput;
        v.bound = *lower_bound;
        v.source = std::move(source);
    }
    return v;
}

VdcVerdict assess_vdc(const SupportSet& support, std::int64_t grid) {
    double best = 0.0;
    std::string source;
    auto offer = [&](double bound, const char* from) {
        if (bound > best) {
            best = bound;
            source = from;
        }
    };

    if (support.is_finite()) {
        if (support.empty()) throw Error(ErrorCode::InvalidArgument, "support set is empty");
        offer(residue_lower_bound(support, support.max_element() + 1), "residue");
        offer(grid_delta(support, grid), "grid-lp");
    } else {
        const auto& per = support.periodic_repr();
        offer(residue_lower_bound(support, per.q), "residue");
        // K_{p,q} with a known closed form has delta = A(p/q).
        const auto p = per.base.front();
        if (2 * p <= per.q && std::gcd(p, per.q) == 1) {
            const auto h = make_cutoff(p, per.q);
            if (support == SupportSet::periodic_block(h) && has_turan_value(h)) {
                offer(turan_value(h), "closed-form");
            }
        }
    }
    return vdc_verdict(support, best > 0.0 ? std::optional<double>(best) : std::nullopt, source);
}

}  // namespace vdc
