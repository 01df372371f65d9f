// Finite free additive convolution of equal-degree monic polynomials,
//
//   etilde_k(p [+] q) = sum_i binom(k,i) etilde_i(p) etilde_{k-i}(q),
//
// together with the multiplicativity check of the fff transform and the
// superadditivity gap of the finite R-transform with its closed-form
// correction term.

#ifndef FINFREE_CONVOLUTION_HPP
#define FINFREE_CONVOLUTION_HPP

#include "finfree/transforms.hpp"

namespace finfree {

template <typename Scalar>
MonicPoly<Scalar> boxplus(const MonicPoly<Scalar>& p, const MonicPoly<Scalar>& q) {
    if (p.degree != q.degree)
        throw std::invalid_argument("boxplus: degree mismatch (" + std::to_string(p.degree) +
                                    " vs " + std::to_string(q.degree) + ")");
    const int n = p.degree;
    Vec<Scalar> et(n + 1);
    std::vector<BigInt> row{BigInt(1)};  // Pascal row for binom(k, .)
    for (int k = 0; k <= n; ++k) {
        Scalar acc(0);
        for (int i = 0; i <= k; ++i)
            acc += from_bigint<Scalar>(row[i]) * p.etilde[i] * q.etilde[k - i];
        et[k] = acc;
        // advance row k -> k+1
        row.push_back(BigInt(1));
        for (int i = k; i >= 1; --i) row[i] += row[i - 1];
    }
    MonicPoly<Scalar> r;
    r.degree = n;
    r.etilde = std::move(et);
    return r;  // coefficient-only: root extraction is out of scope
}

// True iff fff(p [+] q) equals fff(p) * fff(q) modulo s^{N+1}. Exact
// comparison in the rational backend, 1e-12 relative in double.
template <typename Scalar>
bool fff_linearization_check(const MonicPoly<Scalar>& p, const MonicPoly<Scalar>& q) {
    const MonicPoly<Scalar> r = boxplus(p, q);
    const TruncatedSeries<Scalar> lhs = fff(r);
    const TruncatedSeries<Scalar> rhs = mul(fff(p), fff(q), p.degree);
    for (int k = 0; k <= p.degree; ++k) {
        if constexpr (is_exact_v<Scalar>) {
            if (!(lhs[k] == rhs[k])) return false;
        } else {
            const double scale = std::max({1.0, std::abs(lhs[k]), std::abs(rhs[k])});
            if (std::abs(lhs[k] - rhs[k]) > 1e-12 * scale) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Superadditivity of the finite R-transform
// ---------------------------------------------------------------------------

// For negative-rooted p, q and s > 0:
//   gap = R_{p[+]q}(s) - R_p(s) - R_q(s) = g'(Ns) / (1 - g(Ns)) >= 0,
// where g = (fff(p) fff(q) - fff(p[+]q)) / (fff(p) fff(q)).
template <typename Scalar>
struct SuperadditivityReport {
    Scalar s;
    Scalar lhs;         // R of the convolution
    Scalar rhs_sum;     // R_p + R_q
    Scalar gap;         // lhs - rhs_sum
    Scalar correction;  // g'(Ns)/(1 - g(Ns))
};

namespace detail {

// Full binomial convolution D_k = sum_i binom(k,i) |etilde_i(p)| |etilde_j(q)|
// of the sign-stripped coefficient sequences, k = 0..2N. For negative-rooted
// inputs these are the (positive) coefficients c_k (k <= N) of fff(p[+]q) and
// d_k (k > N) of fff(p)fff(q) - fff(p[+]q), both in the "x^k/k!" convention.
template <typename Scalar>
std::vector<Scalar> boxplus_abs_coeffs(const MonicPoly<Scalar>& p, const MonicPoly<Scalar>& q) {
    const int n = p.degree;
    std::vector<Scalar> pk(n + 1), qk(n + 1);
    Scalar sign(1);
    for (int k = 0; k <= n; ++k) {
        pk[k] = sign * p.etilde[k];
        qk[k] = sign * q.etilde[k];
        sign = -sign;
    }
    std::vector<Scalar> d(2 * n + 1, Scalar(0));
    std::vector<BigInt> row{BigInt(1)};
    for (int k = 0; k <= 2 * n; ++k) {
        for (int i = std::max(0, k - n); i <= std::min(k, n); ++i)
            d[k] += from_bigint<Scalar>(row[i]) * pk[i] * qk[k - i];
        row.push_back(BigInt(1));
        for (int i = k; i >= 1; --i) row[i] += row[i - 1];
    }
    return d;
}

}  // namespace detail

// Exact route (rational backend): polynomial algebra on fff transforms.
inline SuperadditivityReport<Rational> superadditivity_report(const MonicPoly<Rational>& p,
                                                              const MonicPoly<Rational>& q,
                                                              const Rational& s) {
    require_negative_roots(p, "superadditivity_report");
    require_negative_roots(q, "superadditivity_report");
    if (!(s > Rational(0))) throw std::domain_error("superadditivity_report: s must be positive");
    if (p.degree != q.degree) throw std::invalid_argument("superadditivity_report: degree mismatch");

    const int n = p.degree;
    const MonicPoly<Rational> r = boxplus(p, q);
    const TruncatedSeries<Rational> fp = fff(p), fq = fff(q), fr = fff(r);
    const TruncatedSeries<Rational> prod = mul(truncated(fp, 2 * n), truncated(fq, 2 * n), 2 * n);

    TruncatedSeries<Rational> f = zero_series<Rational>(2 * n);
    for (int k = 0; k <= 2 * n; ++k) f[k] = prod[k] - (k <= n ? fr[k] : Rational(0));
    for (int k = 0; k <= n; ++k)
        if (!(f[k] == Rational(0)))
            throw std::logic_error("superadditivity_report: low-order terms failed to cancel");

    const Rational u = Rational(n) * s;
    const Rational fu = eval_poly(f, u);
    const Rational ru = eval_poly(fr, u);
    const Rational pq = eval_poly(prod, u);
    const Rational one_minus_g = ru / pq;
    if (!(one_minus_g > Rational(0) && one_minus_g < Rational(1)))
        throw std::logic_error("superadditivity_report: 1 - g(Ns) escaped (0,1)");

    // g' = (f' r - f r') / (pq)^2
    const Rational fpu = eval_poly(derivative(f), u);
    const Rational rpu = eval_poly(derivative(fr), u);
    const Rational gprime = (fpu * ru - fu * rpu) / (pq * pq);

    SuperadditivityReport<Rational> rep;
    rep.s = s;
    rep.lhs = finite_r(r, s);
    rep.rhs_sum = finite_r(p, s) + finite_r(q, s);
    rep.gap = rep.lhs - rep.rhs_sum;
    rep.correction = gprime / one_minus_g;
    return rep;
}

// Float route: every ingredient is a positive sum, assembled in the log
// domain, so the report stays finite for large N where the series values
// overflow.
inline SuperadditivityReport<double> superadditivity_report(const MonicPoly<double>& p,
                                                            const MonicPoly<double>& q, double s) {
    require_negative_roots(p, "superadditivity_report");
    require_negative_roots(q, "superadditivity_report");
    if (!(s > 0)) throw std::domain_error("superadditivity_report: s must be positive");
    if (p.degree != q.degree) throw std::invalid_argument("superadditivity_report: degree mismatch");

    const int n = p.degree;
    const std::vector<double> D = detail::boxplus_abs_coeffs(p, q);
    const double u = n * s;
    const double lu = std::log(u);

    const auto term = [&](int k) { return std::log(D[k]) - std::lgamma(k + 1.0) + k * lu; };

    Eigen::ArrayXd r_terms(n + 1), fr_cross(static_cast<int>(n) * (n + 1));
    for (int k = 0; k <= n; ++k) r_terms[k] = term(k);

    const MonicPoly<double> r = boxplus(p, q);
    const double log_pq = log_fff(p, u) + log_fff(q, u);
    const double log_r = logsumexp(r_terms);

    // f' r - f r' = sum_{k>N, l<=N} d_k c_l (k-l) u^{k+l-1} / (k! l!), all positive
    int idx = 0;
    for (int k = n + 1; k <= 2 * n; ++k)
        for (int l = 0; l <= n; ++l)
            fr_cross[idx++] = std::log(D[k]) + std::log(D[l]) + std::log(double(k - l)) -
                              std::lgamma(k + 1.0) - std::lgamma(l + 1.0) + (k + l - 1) * lu;
    const double log_num = logsumexp(fr_cross);

    const double log_one_minus_g = log_r - log_pq;
    if (!(log_one_minus_g < 0))
        throw std::logic_error("superadditivity_report: 1 - g(Ns) escaped (0,1)");

    SuperadditivityReport<double> rep;
    rep.s = s;
    rep.lhs = finite_r(r, s);
    rep.rhs_sum = finite_r(p, s) + finite_r(q, s);
    rep.gap = rep.lhs - rep.rhs_sum;
    rep.correction = std::exp(log_num - log_pq - log_r);
    return rep;
}

}  // namespace finfree

#endif  // FINFREE_CONVOLUTION_HPP
