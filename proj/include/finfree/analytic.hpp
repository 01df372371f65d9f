// Analytic machinery for negative-rooted monic polynomials: Cauchy
// transform, logarithmic potential, the saddle point x_s solving
// G_p(x_s) = s, Legendre-dual values of the scaled log-Laplace transform,
// the tilted density exponent psi_s, the comparison kernel T_p, and
// certificates for the quantitative bounds relating the finite R-transform
// to the Voiculescu R-transform of the empirical root distribution.
//
// Everything here works over the roots: operations reject coefficient-only
// polynomials rather than attempting root-finding.

#ifndef FINFREE_ANALYTIC_HPP
#define FINFREE_ANALYTIC_HPP

#include "finfree/certificate.hpp"
#include "finfree/quadrature.hpp"
#include "finfree/transforms.hpp"

namespace finfree {

// Per-(p, s) bundle: root magnitudes lambda_i = -root_i > 0, the saddle
// x_s with G_p(x_s) = s, the curvature sigma2 = -G_p'(x_s), and
// alpha = G_p(0). Valid for s in (0, alpha). Immutable once built.
struct TiltContext {
    Eigen::VectorXd lambda;  // ascending, all positive
    int degree = 0;
    double s = 0.0;
    double x_s = 0.0;
    double sigma2 = 0.0;
    double alpha = 0.0;
    double h_xs = 0.0;  // log_potential at x_s
};

namespace detail {

inline Eigen::VectorXd lambdas_of(const MonicPoly<double>& p, const char* who) {
    require_negative_roots(p, who);
    Eigen::VectorXd lam(p.roots->size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = -(*p.roots)[i];
    std::sort(lam.data(), lam.data() + lam.size());
    return lam;
}

inline double cauchy_of(const Eigen::VectorXd& lam, double x) {
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < lam.size(); ++i) acc.add(1.0 / (x + lam[i]));
    return acc.value() / static_cast<double>(lam.size());
}

inline double potential_of(const Eigen::VectorXd& lam, double x) {
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < lam.size(); ++i) acc.add(std::log(x + lam[i]));
    return acc.value() / static_cast<double>(lam.size());
}

inline double curvature_of(const Eigen::VectorXd& lam, double x) {
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const double d = x + lam[i];
        acc.add(1.0 / (d * d));
    }
    return acc.value() / static_cast<double>(lam.size());
}

}  // namespace detail

// G_p(x) = (1/N) sum_i 1/(x + lambda_i), evaluated from the roots.
inline double cauchy_transform(const MonicPoly<double>& p, double x) {
    if (x < 0) throw std::domain_error("cauchy_transform: x must be nonnegative");
    return detail::cauchy_of(detail::lambdas_of(p, "cauchy_transform"), x);
}

// H_p(x) = (1/N) sum_i log(x + lambda_i).
inline double log_potential(const MonicPoly<double>& p, double x) {
    if (x < 0) throw std::domain_error("log_potential: x must be nonnegative");
    return detail::potential_of(detail::lambdas_of(p, "log_potential"), x);
}

// Solves G_p(x_s) = s on (0, infinity). G_p is strictly decreasing with
// G_p(0) = alpha, so the solution exists iff 0 < s < alpha. The harmonic
// bounds 1/(x+lambda_max) <= G_p(x) <= 1/(x+lambda_min) bracket x_s in
// [1/s - lambda_max, 1/s - lambda_min]; bisection narrows the bracket and
// Newton (with G' in closed form) polishes to 1e-13 relative.
inline TiltContext saddle(const MonicPoly<double>& p, double s) {
    TiltContext ctx;
    ctx.lambda = detail::lambdas_of(p, "saddle");
    ctx.degree = p.degree;
    ctx.alpha = detail::cauchy_of(ctx.lambda, 0.0);
    ctx.s = s;
    if (!(s > 0.0 && s < ctx.alpha))
        throw std::domain_error("saddle: s must lie in (0, alpha) with alpha = " +
                                format_number(ctx.alpha));

    double lo = std::max(0.0, 1.0 / s - ctx.lambda[ctx.lambda.size() - 1]);
    double hi = 1.0 / s - ctx.lambda[0];
    for (int it = 0; it < 60 && (hi - lo) > 1e-6 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (detail::cauchy_of(ctx.lambda, mid) > s ? lo : hi) = mid;
    }

    double x = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
        const double g = detail::cauchy_of(ctx.lambda, x) - s;
        const double gp = -detail::curvature_of(ctx.lambda, x);
        const double step = g / gp;
        x -= step;
        if (x < lo || x > hi) x = 0.5 * (lo + hi);  // keep inside the bracket
        if (std::abs(step) <= 1e-13 * std::max(std::abs(x), 1e-300)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("saddle: Newton refinement failed to converge");

    ctx.x_s = x;
    ctx.sigma2 = detail::curvature_of(ctx.lambda, x);
    ctx.h_xs = detail::potential_of(ctx.lambda, x);
    if (std::abs(detail::cauchy_of(ctx.lambda, x) - s) > 1e-12 * s)
        throw std::runtime_error("saddle: residual exceeds tolerance");
    return ctx;
}

// Voiculescu R-transform of the empirical root distribution: x_s - 1/s.
inline double voiculescu_r(const TiltContext& ctx) { return ctx.x_s - 1.0 / ctx.s; }

// Limit value of the scaled log-Laplace transform: the Legendre-dual
// -H*(s) = -s x_s + H(x_s).
inline double limit_log_laplace(const TiltContext& ctx) {
    return -ctx.s * ctx.x_s + ctx.h_xs;
}

// Finite-N value (1/N) log Laplace{p}(Ns), through the closed form
// (1/N) [log N! + log fff(p)(Ns) - (N+1) log(Ns)].
inline double finite_log_laplace(const MonicPoly<double>& p, double s) {
    require_negative_roots(p, "finite_log_laplace");
    if (!(s > 0)) throw std::domain_error("finite_log_laplace: s must be positive");
    const int n = p.degree;
    const double u = n * s;
    return (std::lgamma(n + 1.0) + log_fff(p, u) - (n + 1) * std::log(u)) / n;
}

// psi_s(x) = -s (x - x_s) + H(x) - H(x_s); concave, zero at x_s.
inline double tilt_log_density(const TiltContext& ctx, double x) {
    if (x < 0) throw std::domain_error("tilt_log_density: x must be nonnegative");
    return -ctx.s * (x - ctx.x_s) + detail::potential_of(ctx.lambda, x) - ctx.h_xs;
}

// T_p(x) = (1/N) sum_i lambda_i / ((x + lambda_i)(x_s + lambda_i)):
// decreasing from T_p(0) = s to 0, and the slope of x G_p(x) relative to
// the saddle: x G_p(x) - x_s s = T_p(x) (x - x_s).
inline double comparison_kernel(const TiltContext& ctx, double x) {
    if (x < 0) throw std::domain_error("comparison_kernel: x must be nonnegative");
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < ctx.lambda.size(); ++i) {
        const double l = ctx.lambda[i];
        acc.add(l / ((x + l) * (ctx.x_s + l)));
    }
    return acc.value() / static_cast<double>(ctx.lambda.size());
}

// ---------------------------------------------------------------------------
// R-transform via the tilted expectation
// ---------------------------------------------------------------------------

// R^{(N)}(s) from the exponentially tilted moments of p:
//   R = [integral x p'(x) e^{-Nsx} dx] / [N s integral p(x) e^{-Nsx} dx] - 1/s,
// with the integrals expanded into monomial Laplace transforms
// m!/(Ns)^{m+1}. Algebraically equal to finite_r, computed along a
// different route.
template <typename Scalar>
Scalar tilted_r(const MonicPoly<Scalar>& p, const Scalar& s) {
    require_negative_roots(p, "tilted_r");
    if (!(s > Scalar(0))) throw std::domain_error("tilted_r: s must be positive");
    const int n = p.degree;
    const Vec<Scalar> c = monomial_coeffs(p);
    const Scalar u = Scalar(n) * s;

    if constexpr (is_exact_v<Scalar>) {
        Scalar num(0), den(0);
        Scalar upow = u;  // u^{j+1}
        for (int j = 0; j <= n; ++j) {
            const Scalar piece = c[j] * factorial<Scalar>(j) / upow;
            den += piece;
            num += Scalar(j) * piece;
            upow *= u;
        }
        return num / (Scalar(n) * s * den) - Scalar(1) / s;
    } else {
        // all c_j > 0 for negative-rooted p: log-domain sums
        const double lu = std::log(to_double(u));
        Eigen::ArrayXd den_terms(n + 1), num_terms(n);
        for (int j = 0; j <= n; ++j) {
            const double lt = std::log(to_double(c[j])) + std::lgamma(j + 1.0) - (j + 1) * lu;
            den_terms[j] = lt;
            if (j >= 1) num_terms[j - 1] = lt + std::log(double(j));
        }
        const double expectation = std::exp(logsumexp(num_terms) - logsumexp(den_terms));
        return expectation / (double(n) * to_double(s)) - 1.0 / to_double(s);
    }
}

inline double tilted_r(const TiltContext& ctx) {
    Vec<double> roots(ctx.lambda.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i) roots[i] = -ctx.lambda[i];
    return tilted_r(from_roots<double>(roots), ctx.s);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

// Quadrature of integral_0^infty e^{N psi_s} dx. The integrand is unimodal
// with peak value 1 at x_s; the truncation point doubles until the
// exponent drops 45 e-folds below the peak.
inline oracles::QuadratureResult tilt_integral(const TiltContext& ctx, double rel_tol = 1e-12) {
    const int n = ctx.degree;
    const auto exponent = [&](double x) { return n * tilt_log_density(ctx, x); };
    const auto integrand = [&](double x) { return std::exp(exponent(x)); };

    double x_max = ctx.x_s + std::max(1.0, 10.0 / std::sqrt(n * ctx.sigma2));
    int doublings = 0;
    while (exponent(x_max) > -45.0) {
        x_max *= 2.0;
        if (++doublings > 12)
            throw std::runtime_error("tilt_integral: truncation point failed to converge");
    }
    return oracles::integrate_adaptive(integrand, 0.0, x_max, rel_tol);
}

// Gaussian sandwich for the tilt integral:
//   sqrt(pi / (2 N sigma^2)) <= integral <= p(x_s)^{1/N} e^{1/(12N)} sqrt(2 pi / N).
inline BoundCertificate certify_integral_sandwich(const TiltContext& ctx) {
    const int n = ctx.degree;
    const double value = tilt_integral(ctx).value;
    const double lower = std::sqrt(M_PI / (2.0 * n * ctx.sigma2));
    const double upper =
        std::exp(ctx.h_xs + 1.0 / (12.0 * n) + 0.5 * std::log(2.0 * M_PI / n));
    return make_certificate("integral-sandwich", lower, value, upper);
}

// Two-sided comparison of the finite and limiting R-transforms:
//   -alpha / (s N x_s sigma^2) <= R^{(N)}(s) - (x_s - 1/s) <= 1 / (N x_s sigma^2).
inline BoundCertificate certify_r_gap(const MonicPoly<double>& p, const TiltContext& ctx) {
    const double value = finite_r(p, ctx.s) - voiculescu_r(ctx);
    const double denom = ctx.degree * ctx.x_s * ctx.sigma2;
    return make_certificate("r-gap", -ctx.alpha / (ctx.s * denom), value, 1.0 / denom);
}

// Evaluation grid on [0, span] that never lands exactly on x_s.
inline Eigen::VectorXd default_kernel_grid(const TiltContext& ctx, int points = 48) {
    const double span = std::max(4.0 * ctx.x_s, ctx.x_s + 8.0 / std::sqrt(ctx.degree * ctx.sigma2));
    Eigen::VectorXd g(points);
    const double step = span / (points - 1);
    for (int i = 0; i < points; ++i) {
        double x = i * step;
        if (std::abs(x - ctx.x_s) < 1e-9 * std::max(1.0, ctx.x_s)) x += 0.37 * step;
        g[i] = x;
    }
    return g;
}

// Pointwise kernel inequalities on a grid:
//   -psi'(x) <= sigma^2 (x - x_s) <= -(x / x_s) psi'(x),
// plus monotonicity and range of T_p (0 <= T_p <= s, decreasing,
// T_p(0) = s). The certificate value is the worst inequality margin.
inline BoundCertificate certify_kernel_bounds(const TiltContext& ctx,
                                              const Eigen::VectorXd& grid) {
    double worst = kInf;
    bool aux_ok = true;
    double prev_t = kInf;
    const double tol = 1e-11 * std::max(1.0, ctx.s);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double psi_prime = detail::cauchy_of(ctx.lambda, x) - ctx.s;
        const double mid = ctx.sigma2 * (x - ctx.x_s);
        worst = std::min(worst, mid + psi_prime);                          // left inequality
        worst = std::min(worst, -(x / ctx.x_s) * psi_prime - mid);         // right inequality
        const double t = comparison_kernel(ctx, x);
        if (t < -tol || t > ctx.s + tol) aux_ok = false;                   // range
        if (t > prev_t + tol) aux_ok = false;                              // monotone decreasing
        if (x == 0.0 && std::abs(t - ctx.s) > 1e-12 * ctx.s) aux_ok = false;
        prev_t = t;
    }
    BoundCertificate c = make_certificate("kernel-bounds", 0.0, worst, kInf);
    c.holds = c.holds && aux_ok;
    return c;
}

inline BoundCertificate certify_kernel_bounds(const TiltContext& ctx) {
    return certify_kernel_bounds(ctx, default_kernel_grid(ctx));
}

}  // namespace finfree

#endif  // FINFREE_ANALYTIC_HPP
