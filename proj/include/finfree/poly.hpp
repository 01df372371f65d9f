// Monic polynomials in normalized-coefficient form.
//
// A degree-N monic polynomial is stored through its normalized elementary
// symmetric coefficients etilde_k = e_k(roots) / binom(N, k), so that
//
//   p(x) = sum_k x^{N-k} (-1)^k binom(N,k) etilde_k.
//
// Roots are optional: constructing from roots keeps them (sorted), while
// coefficient-only polynomials (e.g. convolution outputs) carry none.
// Operations that need roots reject coefficient-only inputs instead of
// root-finding.

#ifndef FINFREE_POLY_HPP
#define FINFREE_POLY_HPP

#include <optional>
#include <vector>

#include "finfree/scalar.hpp"

namespace finfree {

template <typename Scalar>
struct MonicPoly {
    int degree = 0;                    // N >= 1
    Vec<Scalar> etilde;                // length N+1, etilde[0] == 1
    std::optional<Vec<Scalar>> roots;  // ascending; p(x) = prod_i (x - roots[i])

    bool has_roots() const { return roots.has_value(); }
};

namespace detail {

// Elementary symmetric polynomials e_0..e_N of the given values by
// incremental product expansion. The double backend accumulates in long
// double; the rational backend is exact.
template <typename Scalar>
std::vector<Scalar> elementary_symmetric(const Vec<Scalar>& vals) {
    const int n = static_cast<int>(vals.size());
    if constexpr (std::is_same_v<Scalar, double>) {
        std::vector<long double> e(n + 1, 0.0L);
        e[0] = 1.0L;
        for (int j = 0; j < n; ++j) {
            const long double r = vals[j];
            for (int k = std::min(j + 1, n); k >= 1; --k) e[k] += r * e[k - 1];
        }
        std::vector<Scalar> out(n + 1);
        for (int k = 0; k <= n; ++k) out[k] = static_cast<double>(e[k]);
        return out;
    } else {
        std::vector<Scalar> e(n + 1, Scalar(0));
        e[0] = Scalar(1);
        for (int j = 0; j < n; ++j) {
            const Scalar& r = vals[j];
            for (int k = std::min(j + 1, n); k >= 1; --k) e[k] += r * e[k - 1];
        }
        return e;
    }
}

template <typename Scalar>
void check_degree_cap(int n) {
    if (is_exact_v<Scalar> && n > kExactDegreeCap)
        throw std::invalid_argument("rational backend capped at degree " +
                                    std::to_string(kExactDegreeCap));
}

}  // namespace detail

template <typename Scalar>
MonicPoly<Scalar> from_roots(Vec<Scalar> roots) {
    const int n = static_cast<int>(roots.size());
    if (n < 1) throw std::invalid_argument("from_roots: need at least one root");
    detail::check_degree_cap<Scalar>(n);
    std::sort(roots.data(), roots.data() + n);

    const std::vector<Scalar> e = detail::elementary_symmetric<Scalar>(roots);
    MonicPoly<Scalar> p;
    p.degree = n;
    p.etilde = Vec<Scalar>(n + 1);
    for (int k = 0; k <= n; ++k) p.etilde[k] = e[k] / binomial<Scalar>(n, k);
    p.roots = std::move(roots);
    return p;
}

template <typename Scalar>
MonicPoly<Scalar> from_etilde(Vec<Scalar> etilde) {
    if (etilde.size() < 2)
        throw std::invalid_argument("from_etilde: degree must be at least 1");
    if (!(etilde[0] == Scalar(1)))
        throw std::invalid_argument("from_etilde: leading normalized coefficient must be 1");
    const int n = static_cast<int>(etilde.size()) - 1;
    detail::check_degree_cap<Scalar>(n);
    MonicPoly<Scalar> p;
    p.degree = n;
    p.etilde = std::move(etilde);
    return p;
}

// Coefficients of p in the monomial basis, ascending powers (c[j] is the
// coefficient of x^j, c[N] == 1).
template <typename Scalar>
Vec<Scalar> monomial_coeffs(const MonicPoly<Scalar>& p) {
    const int n = p.degree;
    Vec<Scalar> c(n + 1);
    Scalar sign(1);
    for (int k = 0; k <= n; ++k) {
        c[n - k] = sign * binomial<Scalar>(n, k) * p.etilde[k];
        sign = -sign;
    }
    return c;
}

template <typename Scalar>
Scalar eval(const MonicPoly<Scalar>& p, const Scalar& x) {
    const Vec<Scalar> c = monomial_coeffs(p);
    Scalar acc = c[p.degree];
    for (int j = p.degree - 1; j >= 0; --j) acc = acc * x + c[j];
    return acc;
}

template <typename Scalar>
Scalar eval_from_roots(const MonicPoly<Scalar>& p, const Scalar& x) {
    if (!p.has_roots()) throw std::invalid_argument("eval_from_roots: polynomial has no stored roots");
    Scalar acc(1);
    for (Eigen::Index i = 0; i < p.roots->size(); ++i) acc *= x - (*p.roots)[i];
    return acc;
}

// Coefficients of p', ascending powers (length N).
template <typename Scalar>
Vec<Scalar> derivative_coeffs(const MonicPoly<Scalar>& p) {
    const Vec<Scalar> c = monomial_coeffs(p);
    Vec<Scalar> d(p.degree);
    for (int j = 0; j < p.degree; ++j) d[j] = Scalar(j + 1) * c[j + 1];
    return d;
}

// q with q(x) = p(x - a); roots shift by +a. Implemented as a Taylor shift
// on monomial coefficients, independent of the convolution identity it is
// used to cross-check.
template <typename Scalar>
MonicPoly<Scalar> shift(const MonicPoly<Scalar>& p, const Scalar& a) {
    const int n = p.degree;
    const Vec<Scalar> c = monomial_coeffs(p);
    const Scalar t = -a;

    Vec<Scalar> shifted = Vec<Scalar>::Zero(n + 1);
    for (int j = 0; j <= n; ++j) {
        // c_j (x + t)^j distributed over powers m <= j
        Scalar term = c[j];
        for (int m = j; m >= 0; --m) {
            shifted[m] += term * binomial<Scalar>(j, m);
            term *= t;
        }
    }

    MonicPoly<Scalar> q;
    q.degree = n;
    q.etilde = Vec<Scalar>(n + 1);
    Scalar sign(1);
    for (int k = 0; k <= n; ++k) {
        q.etilde[k] = sign * shifted[n - k] / binomial<Scalar>(n, k);
        sign = -sign;
    }
    if (p.has_roots()) {
        Vec<Scalar> r = *p.roots;
        for (Eigen::Index i = 0; i < r.size(); ++i) r[i] += a;
        q.roots = std::move(r);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Empirical root distribution
// ---------------------------------------------------------------------------

// Uniform probability measure on the N roots; atoms sorted ascending, each
// carrying weight 1/N.
struct EmpiricalDistribution {
    Eigen::VectorXd atoms;
    double weight() const { return 1.0 / static_cast<double>(atoms.size()); }
};

template <typename Scalar>
EmpiricalDistribution empirical(const MonicPoly<Scalar>& p) {
    if (!p.has_roots()) throw std::invalid_argument("empirical: polynomial has no stored roots");
    EmpiricalDistribution d;
    d.atoms = to_double_vec(*p.roots);
    std::sort(d.atoms.data(), d.atoms.data() + d.atoms.size());
    return d;
}

// ---------------------------------------------------------------------------
// Root predicates and conversions
// ---------------------------------------------------------------------------

template <typename Scalar>
void require_roots(const MonicPoly<Scalar>& p, const char* who) {
    if (!p.has_roots())
        throw std::invalid_argument(std::string(who) + ": requires a polynomial with stored roots");
}

template <typename Scalar>
void require_negative_roots(const MonicPoly<Scalar>& p, const char* who) {
    require_roots(p, who);
    for (Eigen::Index i = 0; i < p.roots->size(); ++i)
        if (!((*p.roots)[i] < Scalar(0)))
            throw std::domain_error(std::string(who) + ": nonnegative root detected");
}

inline MonicPoly<double> to_double_poly(const MonicPoly<Rational>& p) {
    MonicPoly<double> q;
    q.degree = p.degree;
    q.etilde = to_double_vec(p.etilde);
    if (p.has_roots()) q.roots = to_double_vec(*p.roots);
    return q;
}

}  // namespace finfree

#endif  // FINFREE_POLY_HPP
