#include <doctest.h>

#include <map>

#include "finfree/oracles.hpp"
#include "support/test_rng.hpp"

using namespace finfree;
using namespace finfree::oracles;

TEST_CASE("Gauss-Legendre panel rule integrates polynomials exactly") {
    // 21-point rule is exact through degree 41
    for (int k : {0, 1, 5, 17, 33, 41}) {
        const double got = panel_rule().integrate([&](double x) { return std::pow(x, k); }, 0, 1);
        CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
}

TEST_CASE("adaptive integration reaches the requested tolerance") {
    const auto r = integrate_adaptive([](double x) { return std::exp(-x * x / 2); }, -8.0, 8.0, 1e-12);
    CHECK(r.value == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-11));
    CHECK(r.est_error <= 1e-10 * r.value);
    CHECK(r.panels >= 2);

    // peaked integrand: the panels localize around the spike
    const auto s = integrate_adaptive([](double x) { return std::exp(-100.0 * (x - 3.0) * (x - 3.0)); },
                                      0.0, 50.0, 1e-10);
    CHECK(s.value == doctest::Approx(std::sqrt(M_PI) / 10.0).epsilon(1e-8));
}

TEST_CASE("Laplace quadrature against closed forms") {
    // x + lambda at s = 1, scale 1: 1 + lambda
    const double lam = 1.75;
    Vec<double> r1(1);
    r1[0] = -lam;
    const auto p1 = from_roots<double>(r1);
    CHECK(quad_laplace(p1, 1.0, 1).value == doctest::Approx(1.0 + lam).epsilon(1e-9));

    // x^N: N!/(Ns)^{N+1}
    const int n = 6;
    const auto mono = from_roots<double>(Vec<double>::Zero(n));
    const double s = 0.7;
    const double expect = to_double(from_bigint<Rational>(factorial_exact(n))) /
                          std::pow(n * s, n + 1);
    CHECK(quad_laplace(mono, s, n).value == doctest::Approx(expect).epsilon(1e-8));

    CHECK_THROWS_AS(quad_laplace(p1, -1.0, 1), std::domain_error);
}

TEST_CASE("set partition enumeration") {
    // counts match Bell numbers
    const std::int64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 1; n <= 10; ++n) {
        std::int64_t count = 0;
        for_each_set_partition(n, [&](const auto&, int) { ++count; });
        CHECK(count == bell[n]);
        CHECK(bell_number(n) == bell[n]);
    }

    // weight multiset for n = 3: {1, -1, -1, -1, 2}
    std::map<std::int64_t, int> weights;
    for_each_set_partition(3, [&](const auto&, int blocks) { ++weights[mobius_to_top(blocks)]; });
    CHECK(weights[1] == 1);
    CHECK(weights[-1] == 3);
    CHECK(weights[2] == 1);

    // Moebius weights over any interval with n >= 2 sum to zero
    for (int n = 2; n <= 9; ++n) {
        std::int64_t total = 0;
        for_each_set_partition(n, [&](const auto&, int blocks) { total += mobius_to_top(blocks); });
        CHECK(total == 0);
    }

    // block sizes always partition n
    for_each_set_partition(5, [&](const auto& sizes, int blocks) {
        int total = 0;
        for (int b = 0; b < blocks; ++b) total += sizes[b];
        CHECK(total == 5);
    });

    CHECK_THROWS_AS(for_each_set_partition(13, [](const auto&, int) {}), std::invalid_argument);
}

TEST_CASE("finite differences") {
    // exact on quadratics
    const auto quad = [](double x) { return 3 * x * x - 2 * x + 1; };
    CHECK(finite_diff(quad, 1.7, 0.5) == doctest::Approx(3 * 2 * 1.7 - 2).epsilon(1e-14));

    // O(h^2): shrinking h by 10 divides the error by ~100
    const auto f = [](double x) { return std::exp(2 * x); };
    const double d = 2 * std::exp(2 * 0.4);
    const double e3 = std::abs(finite_diff(f, 0.4, 1e-3) - d);
    const double e4 = std::abs(finite_diff(f, 0.4, 1e-4) - d);
    CHECK(e3 / e4 == doctest::Approx(100.0).epsilon(0.5));
}

TEST_CASE("factorial bound certificate") {
    // N = 1: e <= e^{1/12} sqrt(2 pi), a thin but true margin
    const auto c1 = stirling_bound_check(1);
    CHECK(c1.holds);
    CHECK(c1.value == doctest::Approx(1.0));  // log(1! e / 1) = 1
    CHECK(std::exp(c1.upper) == doctest::Approx(std::exp(1.0 / 12) * std::sqrt(2 * M_PI)).epsilon(1e-12));

    // N = 10 reference values
    const auto c10 = stirling_bound_check(10);
    CHECK(c10.holds);
    CHECK(std::exp(c10.value) == doctest::Approx(0.79929639076194613).epsilon(1e-12));

    // margin shrinks like 1/(360 N^3) but stays positive
    double prev = kInf;
    for (int n : {10, 100, 1000}) {
        const auto c = stirling_bound_check(n);
        CHECK(c.holds);
        const double margin = c.upper - c.value;
        CHECK(margin > 0);
        CHECK(margin < prev);
        CHECK(margin == doctest::Approx(1.0 / (360.0 * n) / n / n).epsilon(0.01));
        prev = margin;
    }
}
