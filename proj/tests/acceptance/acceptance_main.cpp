// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "vdc/closed_forms.hpp"
#include "vdc/delta_lp.hpp"
#include "vdc/extremal.hpp"
#include "vdc/kernels.hpp"
#include "vdc/properties.hpp"

using namespace vdc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<RationalCutoff> admissible(std::int64_t qmax) {
    std::vector<RationalCutoff> out;
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t q = 2 * p; q <= qmax; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto h = make_cutoff(p, q);
            if (has_turan_value(h)) out.push_back(h);
        }
    }
    return out;
}

SupportSet range_set(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (auto k = lo; k <= hi; ++k) v.push_back(k);
    return SupportSet::finite(v);
}

Outcome closed_form_cross_check() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t q = 2; q <= 50; ++q) {
        const double a = turan_value(make_cutoff(1, q));
        const double ref = 1.0 / static_cast<double>(q);
        o.require(std::abs(a - ref) <= 1e-15 * ref, fmt("p=1 q=%lld: %.17g", static_cast<long long>(q), a));
    }
    int checked = 0;
    auto against_gamma = [&](std::int64_t p, std::int64_t q) {
        const auto h = make_cutoff(p, q);
        const auto g = solve_gamma(h);
        const double a = turan_value(h);
        const double ref = 1.0 / (static_cast<double>(q) * g.gammas[0]);
        o.require(std::abs(a - ref) <= 1e-12,
                  fmt("p=%lld q=%lld: %.17g vs %.17g", static_cast<long long>(p), static_cast<long long>(q), a, ref));
        ++checked;
    };
    // (2, 3) lies outside 2p <= q, so the odd range starts at 5.
    for (std::int64_t q = 5; q <= 51; q += 2) against_gamma(2, q);
    for (std::int64_t q = 7; q <= 50; ++q) {
        if (q % 3 != 0) against_gamma(3, q);
    }
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, fmt("took %.3f s", dt));
    if (o.pass) o.detail = fmt("49 p=1 cases, %d gamma cases, %.4f s", checked, dt);
    return o;
}

Outcome example_full_block() {
    Outcome o;
    std::string vals;
    for (std::int64_t q : {2, 3, 4, 5, 8}) {
        const auto res = delta_grid_lp(range_set(1, q - 1), 2048);
        const double ref = 1.0 / static_cast<double>(q);
        o.require(res.optimal() && std::abs(res.value - ref) <= 2e-3,
                  fmt("q=%lld: %.10g", static_cast<long long>(q), res.value));
        vals += fmt(" q=%lld:%.6f", static_cast<long long>(q), res.value);
    }
    if (o.pass) o.detail = vals.substr(1);
    return o;
}

Outcome example_two_three() {
    Outcome o;
    const auto res = delta_grid_lp(SupportSet::finite({2, 3}), 2048);
    const double c = std::cos(std::numbers::pi / 5);
    o.require(res.optimal() && std::abs(res.value - 0.44721) <= 2e-3, fmt("value %.10g", res.value));
    o.require(std::abs(res.value - c / (1 + c)) <= 2e-3, fmt("closed form %.10g", c / (1 + c)));
    if (o.pass) o.detail = fmt("value %.8f", res.value);
    return o;
}

Outcome extremal_membership() {
    Outcome o;
    int count = 0;
    double worst_min = 1e300;
    for (const auto& h : admissible(30)) {
        const auto t = build_extremal(h);
        const auto rep = verify_membership(t, SupportSet::block(h), 4096);
        const auto tag = fmt("(%lld,%lld)", static_cast<long long>(h.p()), static_cast<long long>(h.q()));
        o.require(rep.member(), tag + " not a member");
        o.require(rep.certified_min >= -1e-9, tag + fmt(" certified_min %.3g", rep.certified_min));
        o.require(std::abs(rep.t_at_zero - 1.0) <= 1e-10, tag + fmt(" T(0) %.17g", rep.t_at_zero));
        o.require(std::abs(t.constant_term() - turan_value(h)) <= 1e-12, tag + " t0 differs from A");
        worst_min = std::min(worst_min, rep.certified_min);
        ++count;
    }
    if (o.pass) o.detail = fmt("%d cases, smallest certified min %.3g", count, worst_min);
    return o;
}

Outcome sandwich() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::int64_t, std::int64_t>> cases = {
        {1, 3}, {1, 5}, {2, 5}, {2, 7}, {3, 7}, {3, 10}, {3, 11}};
    for (const auto& [p, q] : cases) {
        const auto h = make_cutoff(p, q);
        const double a = turan_value(h);
        const double top = build_extremal(h).constant_term();
        double prev = 1e300;
        for (std::int64_t periods : {0, 1, 2}) {
            const auto res = delta_periodic_lp(h, periods, 4096);
            const auto tag = fmt("(%lld,%lld) periods=%lld", static_cast<long long>(p), static_cast<long long>(q),
                                 static_cast<long long>(periods));
            o.require(res.optimal(), tag + " not optimal");
            o.require(res.value <= prev + 1e-12, tag + fmt(" increased to %.12g", res.value));
            o.require(res.value >= a - 2e-3 && res.value <= top + 1e-9, tag + fmt(" value %.12g", res.value));
            prev = res.value;
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, fmt("took %.1f s", dt));
    if (o.pass) o.detail = fmt("%zu cutoffs x 3 truncations, %.2f s", cases.size(), dt);
    return o;
}

Outcome fejer_identity() {
    Outcome o;
    double worst = 0.0;
    double worst_zero = 0.0;
    for (std::int64_t q = 2; q <= 64; ++q) {
        const auto f = fejer(q);
        for (int j = 0; j <= 4000; ++j) {
            const double x = j / 8000.0;
            // Direct closed form, evaluated here rather than through the library.
            const double s = std::sin(std::numbers::pi * x);
            const double closed =
                j == 0 ? 1.0 : std::pow(std::sin(std::numbers::pi * static_cast<double>(q) * x) / (q * s), 2);
            worst = std::max(worst, std::abs(f(x) - closed));
        }
        for (std::int64_t nu = 1; nu < q; ++nu) {
            worst_zero = std::max(worst_zero, std::abs(fejer_closed(q, static_cast<double>(nu) / q)));
        }
    }
    o.require(worst <= 1e-10, fmt("max deviation %.3g", worst));
    o.require(worst_zero <= 1e-18, fmt("max |F(nu/q)| %.3g", worst_zero));
    if (o.pass) o.detail = fmt("max deviation %.3g, max |F(nu/q)| %.3g", worst, worst_zero);
    return o;
}

SupportSet squares_plus_one(std::int64_t n) {
    std::vector<std::int64_t> v;
    for (std::int64_t k = 1; k <= n; ++k) v.push_back(k * k + 1);
    return SupportSet::finite(v);
}

SupportSet primes_below(std::int64_t n) {
    std::vector<std::int64_t> v;
    for (std::int64_t k = 2; k < n; ++k) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= k; ++d) prime = prime && k % d != 0;
        if (prime) v.push_back(k);
    }
    return SupportSet::finite(v);
}

Outcome property_examples() {
    Outcome o;
    auto f = [](std::initializer_list<std::int64_t> v) { return SupportSet::finite(std::vector<std::int64_t>(v)); };
    const double ex2 = 0.44721;

    auto mono = check_monotonicity(f({2, 3}), f({1, 2, 3}), 1024);
    o.require(mono.pass && std::abs(mono.values[0] - ex2) <= 2e-3 && mono.values[1] < mono.values[0],
              "mono {2,3} in {1,2,3}");
    auto same = check_monotonicity(f({2, 5}), f({2, 5}), 1024);
    o.require(same.pass && same.values[0] == same.values[1], "mono K in K");
    o.require(check_monotonicity(f({3}), f({2, 3}), 1024).pass, "mono {3} in {2,3}");

    auto dil = check_dilation(f({2, 3}), 3, 1024);
    o.require(dil.pass && std::abs(dil.values[0] - ex2) <= 2e-3 && std::abs(dil.values[1] - ex2) <= 2e-3,
              "dilate {2,3} by 3");
    auto dil1 = check_dilation(f({1}), 5, 1024);
    o.require(dil1.pass && std::abs(dil1.values[0] - 0.5) <= 2e-3 && std::abs(dil1.values[1] - 0.5) <= 2e-3,
              "dilate {1} by 5");
    auto dil_id = check_dilation(f({2, 3}), 1, 1024);
    o.require(dil_id.values[0] == dil_id.values[1], "dilate by 1");

    auto div = check_divisibility_bound(f({1, 2, 4, 5}), 3, 1024);
    o.require(div.pass && div.values[0] >= 1.0 / 3.0 - 2e-3, "divis {1,2,4,5} m=3");
    auto q_prefix = check_divisibility_bound(squares_plus_one(15), 3, 2048);
    o.require(q_prefix.pass && q_prefix.values[0] >= 1.0 / 3.0 - 2e-3,
              fmt("divis Q-prefix: %.8g", q_prefix.values[0]));
    const auto primes = primes_below(100);
    auto p_prefix = check_divisibility_bound(primes, 4, 2048);
    o.require(p_prefix.pass && p_prefix.values[0] >= 0.25 - 2e-3, fmt("divis P-prefix: %.8g", p_prefix.values[0]));
    o.require(check_divisibility_bound(f({6, 9}), 3, 1024).pass, "divis {6,9} m=3");

    auto sup = check_supermultiplicative(f({1}), f({2}), 1024);
    o.require(sup.pass && std::abs(sup.values[2] - 1.0 / 3.0) <= 2e-3, "super {1},{2}");
    o.require(check_supermultiplicative(f({2, 3}), f({2, 3}), 1024).pass, "super K,K");
    o.require(check_supermultiplicative(f({2, 3}), f({1}), 1024).pass, "super {2,3},{1}");

    const auto v23 = assess_vdc(f({2, 3}), 2048);
    o.require(v23.kind == VdcVerdict::Kind::NotVanDerCorput && std::abs(v23.bound - ex2) <= 2e-3, "vdc {2,3}");
    const auto vq = assess_vdc(squares_plus_one(15), 2048);
    o.require(vq.kind == VdcVerdict::Kind::NotVanDerCorput && vq.bound >= 1.0 / 3.0 - 2e-3, "vdc Q-prefix");
    for (std::int64_t q : {3, 5, 7}) {
        const auto vk = assess_vdc(SupportSet::periodic_block(make_cutoff(1, q)), 2048);
        o.require(vk.kind == VdcVerdict::Kind::NotVanDerCorput && std::abs(vk.bound - 1.0 / q) <= 1e-12,
                  fmt("vdc K_{1,%lld}", static_cast<long long>(q)));
    }
    if (o.pass) {
        o.detail = fmt("delta(Q-prefix) >= %.6f, delta(P-prefix) >= %.6f", q_prefix.values[0], p_prefix.values[0]);
    }
    return o;
}

Outcome pairing_identity() {
    Outcome o;
    double worst = 0.0;
    int count = 0;
    for (const auto& h : admissible(30)) {
        const auto r = pairing_check(build_extremal(h), fejer(h.q()), h);
        const auto tag = fmt("(%lld,%lld)", static_cast<long long>(h.p()), static_cast<long long>(h.q()));
        o.require(std::abs(r.lhs - r.rhs) <= 1e-9, tag + fmt(" |lhs-rhs| %.3g", std::abs(r.lhs - r.rhs)));
        o.require(r.a0 <= r.lhs + 1e-9, tag + " a0 > T0");
        worst = std::max(worst, std::abs(r.lhs - r.rhs));
        ++count;
    }
    if (o.pass) o.detail = fmt("%d cases, max |lhs-rhs| %.3g", count, worst);
    return o;
}

Outcome turan_estimator() {
    Outcome o;
    struct Case {
        std::int64_t p, q, degree;
    };
    std::string vals;
    for (const auto& c : {Case{1, 3, 60}, Case{2, 5, 80}}) {
        const auto h = make_cutoff(c.p, c.q);
        const auto tag = fmt("(%lld/%lld)", static_cast<long long>(c.p), static_cast<long long>(c.q));
        const auto res = turan_relaxed_lp(h, c.degree, 512, 1e-3);
        o.require(res.optimal(), tag + " not optimal");
        o.require(std::abs(res.value - turan_value(h)) <= 5e-3,
                  tag + fmt(" %.8g vs %.8g", res.value, turan_value(h)));
        double prev = -1.0;
        for (double eps : {5e-4, 1e-3, 2e-3, 5e-3, 1e-2}) {
            const auto r = turan_relaxed_lp(h, c.degree, 512, eps);
            o.require(r.optimal() && r.value >= prev - 1e-12, tag + fmt(" not monotone at eps=%g", eps));
            prev = r.value;
        }
        vals += fmt(" %s %.6f", tag.c_str(), res.value);
    }
    if (o.pass) o.detail = vals.substr(1);
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"turan", "--p", "3", "--q", "10", "--format", "json"},
        {"turan", "--p", "2", "--q", "9", "--format", "json"},
        {"delta", "--set", "2,3", "--grid", "2048", "--format", "json"},
        {"delta", "--pq", "2,7", "--periods", "1", "--grid", "1024", "--certify", "--format", "json"},
        {"extremal", "--p", "3", "--q", "11", "--format", "json"},
        {"table", "--p", "3", "--qmin", "7", "--qmax", "20", "--with-lp", "--grid", "512", "--format", "json"},
        {"check", "--property", "mono", "--k1", "2,3", "--k2", "1,2,3", "--grid", "1024", "--format", "json"},
        {"check", "--property", "dilate", "--set", "2,3", "--factor", "3", "--grid", "512", "--format", "json"},
        {"check", "--property", "divis", "--set", "6,9", "--factor", "3", "--grid", "512", "--format", "json"},
        {"check", "--property", "super", "--k1", "1", "--k2", "2", "--grid", "512", "--format", "json"},
        {"check", "--property", "pairing", "--pq", "3,10", "--format", "json"},
        {"check", "--property", "vdc", "--set", "2,3", "--format", "json"},
    };
    for (auto cmd : commands) {
        cmd.insert(cmd.begin(), "vdc");
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(cmd, out, err);
            o.require(code == 0, cmd[1] + " exited with " + std::to_string(code) + ": " + err.str());
            if (rep == 0) {
                first = out.str();
                o.require(!first.empty(), cmd[1] + " printed nothing");
            } else {
                o.require(out.str() == first, cmd[1] + " output differs between runs");
            }
        }
    }
    if (o.pass) o.detail = fmt("%zu commands run twice", commands.size());
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form A(p/q) against 1/(q g0)", closed_form_cross_check},
        {"delta({1..q-1}) = 1/q on the grid", example_full_block},
        {"delta({2,3}) = 0.44721", example_two_three},
        {"extremal polynomials are certified members", extremal_membership},
        {"periodic truncations sandwich A(p/q)", sandwich},
        {"Fejer coefficient and closed forms agree", fejer_identity},
        {"property checks and verdict examples", property_examples},
        {"pairing identity", pairing_identity},
        {"Turan estimator agrees with closed forms", turan_estimator},
        {"JSON output is deterministic", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, fn] = criteria[i];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
