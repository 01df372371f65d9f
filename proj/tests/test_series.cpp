#include <doctest.h>

#include "finfree/series.hpp"
#include "support/test_rng.hpp"

using namespace finfree;

namespace {

TruncatedSeries<Rational> series(std::initializer_list<Rational> xs) {
    TruncatedSeries<Rational> f = zero_series<Rational>(static_cast<int>(xs.size()) - 1);
    int i = 0;
    for (const auto& x : xs) f[i++] = x;
    return f;
}

}  // namespace

TEST_CASE("product modulo truncation") {
    const auto f = series({1, 1});                   // 1 + s
    const auto g = mul(f, f, 1);                     // mod s^2
    CHECK(g[0] == Rational(1));
    CHECK(g[1] == Rational(2));
    const auto h = mul(f, f, 3);                     // full square, zero-padded
    CHECK(h[2] == Rational(1));
    CHECK(h[3] == Rational(0));
}

TEST_CASE("log series of (1 + a s)") {
    const Rational a(3, 2);
    TruncatedSeries<Rational> f = zero_series<Rational>(6);
    f[0] = Rational(1);
    f[1] = a;
    const auto b = log_series(f);
    Rational pw = a;
    for (int n = 1; n <= 6; ++n) {
        const Rational expect = ((n % 2 == 1) ? pw : -pw) / Rational(n);
        CHECK(b[n] == expect);
        pw *= a;
    }
    CHECK_THROWS_AS(log_series(series({2, 1})), std::invalid_argument);
}

TEST_CASE("log of a product is the sum of logs") {
    testing::TestRng rng(7);
    for (int it = 0; it < 20; ++it) {
        const int m = rng.uniform_int(2, 7);
        TruncatedSeries<Rational> f = zero_series<Rational>(m), g = zero_series<Rational>(m);
        f[0] = g[0] = Rational(1);
        for (int k = 1; k <= m; ++k) {
            f[k] = rng.rational(-3, 3);
            g[k] = rng.rational(-3, 3);
        }
        const auto lhs = log_series(mul(f, g, m));
        const auto lf = log_series(f), lg = log_series(g);
        for (int k = 0; k <= m; ++k) CHECK(lhs[k] == lf[k] + lg[k]);
    }
}

TEST_CASE("reciprocal inverts") {
    testing::TestRng rng(13);
    for (int it = 0; it < 20; ++it) {
        const int m = rng.uniform_int(1, 7);
        TruncatedSeries<Rational> f = zero_series<Rational>(m);
        f[0] = rng.rational(1, 4);
        for (int k = 1; k <= m; ++k) f[k] = rng.rational(-3, 3);
        const auto one = mul(f, reciprocal(f), m);
        CHECK(one[0] == Rational(1));
        for (int k = 1; k <= m; ++k) CHECK(one[k] == Rational(0));
    }
    CHECK_THROWS_AS(reciprocal(series({0, 1})), std::invalid_argument);
}

TEST_CASE("derivative and Horner evaluation") {
    const auto f = series({2, -3, Rational(1, 2), 4});
    const auto d = derivative(f);
    CHECK(d.order() == 2);
    CHECK(d[0] == Rational(-3));
    CHECK(d[1] == Rational(1));
    CHECK(d[2] == Rational(12));

    const Rational u(5, 3);
    CHECK(eval_poly(f, u) == Rational(2) - 3 * u + u * u / 2 + 4 * u * u * u);
}
