// The finite Fourier-side transforms of a monic polynomial:
//
//   fff(p)        the exponential generating polynomial
//                 sum_k (-1)^k etilde_k s^k / k!   (degree N, constant 1),
//   finite_r      R^{(N)}(s) = -fff'(Ns)/fff(Ns),
//   cumulants     kappa_1..kappa_N, by formal log series or by set-partition
//                 Moebius sums (two independent routes),
//   laplace_fff_identity
//                 fff(p)(s) versus s^{N+1}/N! times the closed-form Laplace
//                 transform of p.
//
// The double backend evaluates the positive series of negative-rooted
// polynomials in the log domain (terms exp(log etilde_k - lgamma(k+1)
// + k log u)), which stays finite where naive Horner would overflow.

#ifndef FINFREE_TRANSFORMS_HPP
#define FINFREE_TRANSFORMS_HPP

#include "finfree/partitions.hpp"
#include "finfree/poly.hpp"
#include "finfree/series.hpp"

namespace finfree {

template <typename Scalar>
TruncatedSeries<Scalar> fff(const MonicPoly<Scalar>& p) {
    const int n = p.degree;
    TruncatedSeries<Scalar> f = zero_series<Scalar>(n);
    Scalar sign(1);
    for (int k = 0; k <= n; ++k) {
        f[k] = sign * p.etilde[k] / factorial<Scalar>(k);
        sign = -sign;
    }
    return f;
}

// Applies the constant-coefficient differential operator fff(p)(d/dx) to
// x^N; returns ascending monomial coefficients. Equals p identically.
template <typename Scalar>
Vec<Scalar> apply_fff_operator(const MonicPoly<Scalar>& p) {
    const int n = p.degree;
    const TruncatedSeries<Scalar> f = fff(p);
    Vec<Scalar> out = Vec<Scalar>::Zero(n + 1);
    // (d/dx)^k x^N = N!/(N-k)! x^{N-k}
    Scalar falling(1);
    for (int k = 0; k <= n; ++k) {
        out[n - k] = f[k] * falling;
        falling *= Scalar(n - k);
    }
    return out;
}

namespace detail {

// log |etilde_k| and signs for the double backend.
struct LogTerms {
    Eigen::ArrayXd logmag;  // log|(-1)^k etilde_k| - lgamma(k+1)
    Eigen::ArrayXi sign;    // sign of (-1)^k etilde_k in {-1,0,1}
    bool all_nonneg = true;
};

inline LogTerms fff_log_terms(const MonicPoly<double>& p) {
    const int n = p.degree;
    LogTerms t;
    t.logmag.resize(n + 1);
    t.sign.resize(n + 1);
    double parity = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double c = parity * p.etilde[k];
        t.sign[k] = (c > 0) - (c < 0);
        t.logmag[k] = (c == 0.0) ? -std::numeric_limits<double>::infinity()
                                 : std::log(std::abs(c)) - std::lgamma(k + 1.0);
        if (c < 0) t.all_nonneg = false;
        parity = -parity;
    }
    return t;
}

}  // namespace detail

// log fff(p)(u) for negative-rooted p (all series coefficients nonnegative).
inline double log_fff(const MonicPoly<double>& p, double u) {
    if (u < 0) throw std::domain_error("log_fff: argument must be nonnegative");
    const detail::LogTerms t = detail::fff_log_terms(p);
    if (!t.all_nonneg)
        throw std::domain_error("log_fff: series has negative coefficients (nonnegative root?)");
    if (u == 0.0) return 0.0;
    const double lu = std::log(u);
    Eigen::ArrayXd terms(t.logmag.size());
    for (Eigen::Index k = 0; k < t.logmag.size(); ++k) terms[k] = t.logmag[k] + double(k) * lu;
    return logsumexp(terms);
}

// R^{(N)}(s) = -fff'(Ns) / fff(Ns). Exact in the rational backend.
template <typename Scalar>
Scalar finite_r(const MonicPoly<Scalar>& p, const Scalar& s) {
    const TruncatedSeries<Scalar> f = fff(p);
    const Scalar u = Scalar(p.degree) * s;
    const Scalar value = eval_poly(f, u);
    if (value == Scalar(0)) throw std::domain_error("finite_r: fff vanishes at Ns (pole)");
    return -eval_poly(derivative(f), u) / value;
}

// Double overload: log-domain evaluation for positive series; sign-aware
// compensated summation otherwise, with pole detection.
inline double finite_r(const MonicPoly<double>& p, double s) {
    const int n = p.degree;
    const double u = n * s;
    const detail::LogTerms t = detail::fff_log_terms(p);

    if (u == 0.0) return p.etilde[1];  // -a_1 = etilde_1, the root mean

    if (t.all_nonneg && u > 0) {
        const double lu = std::log(u);
        Eigen::ArrayXd num(n), den(n + 1);
        for (int k = 0; k <= n; ++k) den[k] = t.logmag[k] + k * lu;
        for (int k = 1; k <= n; ++k) num[k - 1] = t.logmag[k] + std::log(double(k)) + (k - 1) * lu;
        return -std::exp(logsumexp(num) - logsumexp(den));
    }

    // mixed signs: sum scaled terms directly
    const double lu = std::log(std::abs(u));
    NeumaierSum val, der;
    double maxmag = 0.0;
    for (int k = 0; k <= n; ++k) {
        if (t.sign[k] == 0) continue;
        const double lm = t.logmag[k] + k * lu;
        if (lm > 700.0) throw std::overflow_error("finite_r: series term out of double range");
        const double upow_sign = (u < 0 && (k % 2 != 0)) ? -1.0 : 1.0;
        const double term = t.sign[k] * upow_sign * std::exp(lm);
        maxmag = std::max(maxmag, std::abs(term));
        val.add(term);
        if (k >= 1) der.add(term * k / u);
    }
    const double value = val.value();
    if (std::abs(value) <= 1e-13 * maxmag)
        throw std::domain_error("finite_r: fff vanishes at Ns (pole)");
    return -der.value() / value;
}

// Power series of R^{(N)} in s up to the given order, computed by series
// division (independent of the log-series recurrence).
template <typename Scalar>
TruncatedSeries<Scalar> finite_r_series(const MonicPoly<Scalar>& p, int order) {
    const TruncatedSeries<Scalar> f = truncated(fff(p), order + 1);
    TruncatedSeries<Scalar> w = mul(derivative(f), reciprocal(truncated(f, order)), order);
    // W(u) = -fff'/fff; R(s) = W(Ns)
    TruncatedSeries<Scalar> r = zero_series<Scalar>(order);
    Scalar scale(1);
    for (int k = 0; k <= order; ++k) {
        r[k] = -w[k] * scale;
        scale *= Scalar(p.degree);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Finite free cumulants
// ---------------------------------------------------------------------------

template <typename Scalar>
struct CumulantVector {
    Vec<Scalar> kappa;  // kappa_1..kappa_n
    int source_degree = 0;

    int count() const { return static_cast<int>(kappa.size()); }
};

// kappa_n = -n N^{n-1} b_n where b = log fff(p).
template <typename Scalar>
CumulantVector<Scalar> finite_cumulants_logseries(const MonicPoly<Scalar>& p) {
    const int n = p.degree;
    const TruncatedSeries<Scalar> b = log_series(fff(p));
    CumulantVector<Scalar> out{Vec<Scalar>(n), n};
    if constexpr (is_exact_v<Scalar>) {
        Scalar scale(1);  // N^{k-1}
        for (int k = 1; k <= n; ++k) {
            out.kappa[k - 1] = -Scalar(k) * scale * b[k];
            scale *= Scalar(n);
        }
    } else {
        // guard against overflow of N^{k-1} for large degrees
        const double logn = std::log(double(n));
        for (int k = 1; k <= n; ++k) {
            const double bk = b[k];
            if (bk == 0.0) {
                out.kappa[k - 1] = 0.0;
                continue;
            }
            const double lm = std::log(std::abs(bk)) + std::log(double(k)) + (k - 1) * logn;
            out.kappa[k - 1] = -std::copysign(std::exp(lm), bk);
        }
    }
    return out;
}

// Moebius route over the set-partition lattice:
//   c_n = sum_{pi} prod_{B in pi} etilde_{|B|} * mu(pi, top),
//   kappa_n = (-N)^{n-1} / (n-1)! * c_n.
// Capped at n = 12; exists to cross-check the log-series route.
template <typename Scalar>
CumulantVector<Scalar> finite_cumulants_mobius(const MonicPoly<Scalar>& p, int max_n) {
    if (max_n < 1 || max_n > p.degree)
        throw std::invalid_argument("finite_cumulants_mobius: max_n out of range");
    if (max_n > oracles::kPartitionCap)
        throw std::invalid_argument("finite_cumulants_mobius: max_n exceeds partition cap");

    CumulantVector<Scalar> out{Vec<Scalar>(max_n), p.degree};
    for (int n = 1; n <= max_n; ++n) {
        Scalar c(0);
        oracles::for_each_set_partition(n, [&](const auto& sizes, int blocks) {
            Scalar prod = from_bigint<Scalar>(BigInt(oracles::mobius_to_top(blocks)));
            for (int b = 0; b < blocks; ++b) prod *= p.etilde[sizes[b]];
            c += prod;
        });
        // (-N)^{n-1}/(n-1)!
        Scalar scale(1);
        for (int j = 1; j < n; ++j) scale *= Scalar(-p.degree) / Scalar(j);
        out.kappa[n - 1] = scale * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Laplace identity
// ---------------------------------------------------------------------------

// Left: fff(p)(s). Right: s^{N+1}/N! * L{p}(s) with the Laplace transform
// assembled from monomial pieces L{x^m}(s) = m!/s^{m+1}. The two sides are
// equal identically; they are computed along different routes.
template <typename Scalar>
std::pair<Scalar, Scalar> laplace_fff_identity(const MonicPoly<Scalar>& p, const Scalar& s) {
    if (!(s > Scalar(0))) throw std::domain_error("laplace_fff_identity: s must be positive");
    const int n = p.degree;
    if (!is_exact_v<Scalar> && n > 150)
        throw std::overflow_error("laplace_fff_identity: double backend capped at degree 150");

    const Scalar lhs = eval_poly(fff(p), s);

    const Vec<Scalar> c = monomial_coeffs(p);
    Scalar laplace(0);
    Scalar spow = s;  // s^{m+1}
    for (int m = 0; m <= n; ++m) {
        laplace += c[m] * factorial<Scalar>(m) / spow;
        spow *= s;
    }
    Scalar snp1(1);
    for (int j = 0; j <= n; ++j) snp1 *= s;
    const Scalar rhs = snp1 * laplace / factorial<Scalar>(n);
    return {lhs, rhs};
}

}  // namespace finfree

#endif  // FINFREE_TRANSFORMS_HPP
