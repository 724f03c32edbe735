#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "vdc/closed_forms.hpp"
#include "vdc/delta_lp.hpp"
#include "vdc/extremal.hpp"

using namespace vdc;

namespace {

constexpr double kPi = std::numbers::pi;

double value_of(const SupportSet& k, std::int64_t grid) {
    const auto res = delta_grid_lp(k, grid);
    REQUIRE(res.optimal());
    CHECK(res.max_violation <= 1e-8);
    return res.value;
}

}  // namespace

TEST_CASE("single frequency: calculus oracle gives 1/2") {
    // min T0 with T0 + T1 = 1 and T0 + T1 cos(2 pi x) >= 0: the constraint at
    // x = 1/2 forces T0 >= T1, so T0 = T1 = 1/2. The grid contains x = 1/2.
    for (std::int64_t grid : {2, 16, 1024}) {
        const auto res = delta_grid_lp(SupportSet::finite({1}), grid);
        REQUIRE(res.optimal());
        CHECK(std::abs(res.value - 0.5) <= 1e-12);
        CHECK(std::abs(res.solution[1] - 0.5) <= 1e-12);
    }
}

TEST_CASE("known delta values") {
    CHECK(std::abs(value_of(SupportSet::finite({1, 2, 3, 4}), 2048) - 0.2) <= 2e-3);
    const double c5 = std::cos(kPi / 5);
    CHECK(std::abs(value_of(SupportSet::finite({2, 3}), 2048) - c5 / (1 + c5)) <= 2e-3);
}

TEST_CASE("solution rebuilds a polynomial with T(0) = 1") {
    const auto k = SupportSet::finite({2, 3});
    const auto res = delta_grid_lp(k, 512);
    const auto poly = delta_polynomial(k, res);
    CHECK(poly.storage_degree() == 3);
    CHECK(poly[1] == 0.0);
    CHECK(std::abs(poly.value_at_zero() - 1.0) <= 1e-9);
    CHECK(poly.constant_term() == res.value);
    for (int j = 0; j <= 1024; ++j) CHECK(poly(j / 1024.0) >= -1e-9);
}

TEST_CASE("grid relaxation is monotone in M on nested grids") {
    const auto k = SupportSet::finite({2, 3});
    const double v256 = value_of(k, 256);
    const double v1024 = value_of(k, 1024);
    const double v4096 = value_of(k, 4096);
    CHECK(v256 <= v1024 + 1e-9);
    CHECK(v1024 <= v4096 + 1e-9);
}

TEST_CASE("grid LP never exceeds a verified member") {
    for (auto [p, q] : {std::pair{1, 5}, {2, 7}, {3, 10}}) {
        const auto h = make_cutoff(p, q);
        const auto t0 = build_extremal(h).constant_term();
        CHECK(value_of(SupportSet::block(h), 1024) <= t0 + 1e-9);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((void)delta_grid_lp(SupportSet::finite({}), 64), Error);
    try {
        (void)delta_grid_lp(SupportSet::finite({10}), 19);
        FAIL("expected InvalidGrid");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidGrid);
    }
    CHECK_THROWS_AS((void)delta_grid_lp(SupportSet::periodic(3, {1, 2}), 64), Error);
}

TEST_CASE("periodic truncation") {
    const auto s = periodic_truncation(make_cutoff(3, 7), 2);
    CHECK(std::vector<std::int64_t>(s.elements().begin(), s.elements().end()) ==
          std::vector<std::int64_t>{3, 4, 10, 11, 17, 18});
    CHECK(periodic_truncation(make_cutoff(1, 3), 0).elements().size() == 2);
}

TEST_CASE("delta_periodic_lp examples") {
    const auto r13 = delta_periodic_lp(make_cutoff(1, 3), 0, 1024);
    REQUIRE(r13.optimal());
    CHECK(std::abs(r13.value - 1.0 / 3.0) <= 2e-3);

    const auto r12 = delta_periodic_lp(make_cutoff(1, 2), 3, 1024);
    REQUIRE(r12.optimal());
    CHECK(std::abs(r12.value - 0.5) <= 2e-3);

    const double c7 = std::cos(kPi / 7);
    const auto r37 = delta_periodic_lp(make_cutoff(3, 7), 2, 4096);
    REQUIRE(r37.optimal());
    CHECK(r37.value >= c7 / (1 + c7) - 2e-3);
}

TEST_CASE("more periods can only lower the value") {
    const auto h = make_cutoff(2, 5);
    double prev = 2.0;
    for (std::int64_t periods = 0; periods <= 3; ++periods) {
        const auto res = delta_periodic_lp(h, periods, 1024);
        REQUIRE(res.optimal());
        CHECK(res.value <= prev + 1e-9);
        CHECK(res.value >= turan_value(h) - 2e-3);
        prev = res.value;
    }
}

TEST_CASE("Turan estimator") {
    const auto r13 = turan_relaxed_lp(make_cutoff(1, 3), 60, 512, 1e-3);
    REQUIRE(r13.optimal());
    CHECK(std::abs(r13.value - 1.0 / 3.0) <= 5e-3);
    CHECK(r13.solution.size() == 61);
    for (double a : r13.solution) CHECK(a >= -1e-12);

    const auto r25 = turan_relaxed_lp(make_cutoff(2, 5), 80, 512, 1e-3);
    REQUIRE(r25.optimal());
    CHECK(std::abs(r25.value - turan_value(make_cutoff(2, 5))) <= 5e-3);

    double prev = -1.0;
    for (double eps : {1e-4, 1e-3, 1e-2, 1e-1}) {
        const auto r = turan_relaxed_lp(make_cutoff(1, 3), 30, 256, eps);
        REQUIRE(r.optimal());
        CHECK(r.value >= prev - 1e-9);
        prev = r.value;
    }
    CHECK_THROWS_AS((void)turan_relaxed_lp(make_cutoff(1, 3), 2, 256, 1e-3), Error);
    CHECK_THROWS_AS((void)turan_relaxed_lp(make_cutoff(1, 3), 30, 256, 0.0), Error);
}

TEST_CASE("solver is deterministic") {
    const auto k = SupportSet::finite({2, 3, 5});
    const auto a = delta_grid_lp(k, 512);
    const auto b = delta_grid_lp(k, 512);
    CHECK(a.iterations == b.iterations);
    CHECK(a.solution == b.solution);
}

TEST_CASE("fine grids match an independent LP solver") {
    // Optimal values of the same grid LPs from HiGHS (dual simplex).
    struct Ref {
        std::int64_t q, grid;
        double value;
    };
    for (const auto& r : {Ref{11, 1024, 0.185653116015}, Ref{11, 4096, 0.185655895367},
                          Ref{29, 4096, 0.0691682794095}, Ref{19, 4096, 0.105990615943}}) {
        std::vector<std::int64_t> ks;
        for (std::int64_t k = 2; k <= r.q - 2; ++k) ks.push_back(k);
        const auto res = delta_grid_lp(SupportSet::finite(ks), r.grid);
        REQUIRE(res.optimal());
        CHECK(std::abs(res.value - r.value) <= 1e-11);
        CHECK(res.max_violation <= 1e-8);
    }

    const auto t = turan_relaxed_lp(make_cutoff(2, 5), 80, 512, 1e-3);
    CHECK(std::abs(t.value - 0.4477663819) <= 1e-9);
}
