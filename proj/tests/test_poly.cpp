#include <doctest.h>

#include "finfree/poly.hpp"
#include "support/test_rng.hpp"

using namespace finfree;

namespace {

Vec<Rational> rvec(std::initializer_list<Rational> xs) {
    Vec<Rational> v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v[i++] = x;
    return v;
}

Vec<double> dvec(std::initializer_list<double> xs) {
    Vec<double> v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("from_roots: normalized coefficients") {
    const auto p = from_roots<Rational>(rvec({-1, -2}));
    CHECK(p.degree == 2);
    CHECK(p.etilde[0] == Rational(1));
    CHECK(p.etilde[1] == Rational(-3, 2));
    CHECK(p.etilde[2] == Rational(2));

    // all-equal roots: etilde_k = root^k
    const Rational lam(7, 3);
    Vec<Rational> rep(5);
    for (int i = 0; i < 5; ++i) rep[i] = -lam;
    const auto q = from_roots<Rational>(rep);
    Rational pw(1);
    for (int k = 0; k <= 5; ++k) {
        CHECK(q.etilde[k] == pw);
        pw *= -lam;
    }

    // zero roots
    const auto z = from_roots<Rational>(rvec({0, 0, 0}));
    for (int k = 1; k <= 3; ++k) CHECK(z.etilde[k] == Rational(0));

    CHECK_THROWS_AS(from_roots<Rational>(Vec<Rational>(0)), std::invalid_argument);
}

TEST_CASE("from_etilde: validation and equivalence") {
    const auto p = from_etilde<Rational>(rvec({1, Rational(-3, 2), 2}));
    CHECK(!p.has_roots());
    // equals (x+1)(x+2)
    for (const Rational x : {Rational(0), Rational(1), Rational(-3), Rational(5, 2)})
        CHECK(eval(p, x) == (x + 1) * (x + 2));

    CHECK_THROWS_AS(from_etilde<Rational>(rvec({1})), std::invalid_argument);
    CHECK_THROWS_AS(from_etilde<Rational>(rvec({2, 1})), std::invalid_argument);

    // N=1: (1, a) is x - a
    const Rational a(5, 4);
    const auto lin = from_etilde<Rational>(rvec({1, a}));
    CHECK(eval(lin, a) == Rational(0));
}

TEST_CASE("eval: coefficient form against root products") {
    const auto p = from_roots<Rational>(rvec({-1, -2}));
    CHECK(eval(p, Rational(0)) == Rational(2));
    CHECK(eval(p, Rational(1)) == Rational(6));

    const Rational a(3, 7);
    Vec<Rational> rep(6);
    for (int i = 0; i < 6; ++i) rep[i] = a;
    CHECK(eval(from_roots<Rational>(rep), a) == Rational(0));

    testing::TestRng rng(11);
    for (int it = 0; it < 40; ++it) {
        const int n = rng.uniform_int(1, 8);
        const auto q = from_roots<Rational>(rng.rational_roots(n));
        const Rational x = rng.rational(-5, 5);
        CHECK(eval(q, x) == eval_from_roots(q, x));
    }
}

TEST_CASE("derivative coefficients") {
    const auto p = from_roots<Rational>(rvec({-1, -2}));
    const auto d = derivative_coeffs(p);  // 2x + 3
    REQUIRE(d.size() == 2);
    CHECK(d[0] == Rational(3));
    CHECK(d[1] == Rational(2));

    // (x-a)^N and x^N
    const Rational a(1, 2);
    Vec<Rational> rep(4);
    for (int i = 0; i < 4; ++i) rep[i] = a;
    const auto q = from_roots<Rational>(rep);
    const auto dq = derivative_coeffs(q);  // 4 (x-a)^3
    const auto cube = monomial_coeffs(from_roots<Rational>(rvec({a, a, a})));
    for (int j = 0; j < 4; ++j) CHECK(dq[j] == Rational(4) * cube[j]);

    const auto mono = from_roots<Rational>(rvec({0, 0, 0}));
    const auto dm = derivative_coeffs(mono);  // 3x^2
    CHECK(dm[0] == Rational(0));
    CHECK(dm[1] == Rational(0));
    CHECK(dm[2] == Rational(3));
}

TEST_CASE("shift: substitution identity") {
    const auto p = from_roots<Rational>(rvec({-1, -2}));
    const auto q = shift(p, Rational(1));  // p(x-1) = x(x+1)
    const auto expect = from_roots<Rational>(rvec({0, -1}));
    for (int k = 0; k <= 2; ++k) CHECK(q.etilde[k] == expect.etilde[k]);
    REQUIRE(q.has_roots());
    CHECK((*q.roots)[0] == Rational(-1));
    CHECK((*q.roots)[1] == Rational(0));

    testing::TestRng rng(23);
    for (int it = 0; it < 25; ++it) {
        const int n = rng.uniform_int(1, 7);
        const auto r = from_roots<Rational>(rng.rational_roots(n));
        const Rational a = rng.rational(-3, 3);
        const auto same = shift(r, Rational(0));
        for (int k = 0; k <= n; ++k) CHECK(same.etilde[k] == r.etilde[k]);
        const auto back = shift(shift(r, a), -a);
        for (int k = 0; k <= n; ++k) CHECK(back.etilde[k] == r.etilde[k]);
        // q(x) = p(x-a) pointwise
        const Rational x = rng.rational(-4, 4);
        CHECK(eval(shift(r, a), x) == eval(r, x - a));
    }
}

TEST_CASE("round trip roots -> etilde -> monomial expansion is exact") {
    testing::TestRng rng(37);
    for (int it = 0; it < 30; ++it) {
        const int n = rng.uniform_int(1, 9);
        const auto roots = rng.rational_roots(n);
        const auto p = from_roots<Rational>(roots);
        // expand the product independently
        Vec<Rational> c = Vec<Rational>::Zero(n + 1);
        c[0] = Rational(1);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k >= 1; --k) c[k] = (k <= j ? c[k] : Rational(0)) - roots[j] * c[k - 1];
        // c holds coefficients in descending power order: c[k] multiplies x^{n-k}
        const auto m = monomial_coeffs(p);
        for (int k = 0; k <= n; ++k) CHECK(m[n - k] == c[k]);
    }
}

TEST_CASE("sign alternation for negative-rooted polynomials") {
    testing::TestRng rng(41);
    for (int it = 0; it < 25; ++it) {
        const int n = rng.uniform_int(1, 9);
        const auto p = from_roots<Rational>(rng.negative_rational_roots(n));
        Rational sign(1);
        for (int k = 0; k <= n; ++k) {
            CHECK(sign * p.etilde[k] > Rational(0));
            sign = -sign;
        }
    }
}

TEST_CASE("double backend tracks the exact backend") {
    testing::TestRng rng(53);
    for (int it = 0; it < 20; ++it) {
        const int n = rng.uniform_int(1, 12);
        const auto roots = rng.rational_roots(n);
        const auto p = from_roots<Rational>(roots);
        const auto pd = from_roots<double>(to_double_vec(roots));
        for (int k = 0; k <= n; ++k) {
            const double exact = to_double(p.etilde[k]);
            CHECK(std::abs(pd.etilde[k] - exact) <=
                  1e-12 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("empirical distribution") {
    const auto p = from_roots<double>(dvec({-2.5, -1.0, -4.0}));
    const auto d = empirical(p);
    CHECK(d.atoms.size() == 3);
    CHECK(d.atoms[0] == -4.0);
    CHECK(d.atoms[2] == -1.0);
    CHECK(d.weight() == doctest::Approx(1.0 / 3));

    const auto c = from_etilde<double>(dvec({1, -1.5, 2}));
    CHECK_THROWS_AS(empirical(c), std::invalid_argument);
}
