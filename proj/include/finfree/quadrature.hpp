// Adaptive Gauss-Legendre quadrature for smooth decaying integrands.
//
// Nodes and weights come from the Golub-Welsch eigendecomposition of the
// Jacobi matrix. Panels are bisected until the two-level estimate agrees.
// This is oracle code: it shares no formulas with the closed-form paths it
// is used to check.

#ifndef FINFREE_QUADRATURE_HPP
#define FINFREE_QUADRATURE_HPP

#include <functional>

#include "finfree/poly.hpp"

namespace finfree::oracles {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    int panels = 0;
};

class GaussLegendre {
  public:
    explicit GaussLegendre(int order) : nodes_(order), weights_(order) {
        Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
        for (int k = 1; k < order; ++k) {
            const double beta = k / std::sqrt(4.0 * k * k - 1.0);
            jacobi(k, k - 1) = beta;
            jacobi(k - 1, k) = beta;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
        nodes_ = es.eigenvalues();
        for (int k = 0; k < order; ++k) {
            const double v0 = es.eigenvectors()(0, k);
            weights_[k] = 2.0 * v0 * v0;
        }
    }

    template <typename F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        NeumaierSum acc;
        for (int k = 0; k < nodes_.size(); ++k)
            acc.add(weights_[k] * f(mid + half * nodes_[k]));
        return half * acc.value();
    }

  private:
    Eigen::VectorXd nodes_;
    Eigen::VectorXd weights_;
};

inline const GaussLegendre& panel_rule() {
    static const GaussLegendre rule(21);
    return rule;
}

namespace detail {

// A few levels are always forced so that features the single-panel scan
// missed still get sampled.
inline constexpr int kMinDepth = 4;

template <typename F>
void refine(const F& f, double a, double b, double coarse, double tol_abs, int depth,
            QuadratureResult& out) {
    const double mid = 0.5 * (a + b);
    const double left = panel_rule().integrate(f, a, mid);
    const double right = panel_rule().integrate(f, mid, b);
    const double diff = std::abs(left + right - coarse);
    if ((diff <= tol_abs && depth >= kMinDepth) || depth >= 28) {
        out.value += left + right;
        out.est_error += diff;
        out.panels += 2;
        return;
    }
    refine(f, a, mid, left, 0.5 * tol_abs, depth + 1, out);
    refine(f, mid, b, right, 0.5 * tol_abs, depth + 1, out);
}

}  // namespace detail

// Integrates f over [a, b] to the requested relative tolerance. The scale
// for the absolute tolerance starts from a single-panel estimate and is
// re-derived from the refined value until the error estimate conforms.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol) {
    const double coarse = panel_rule().integrate(f, a, b);
    double scale = std::max(std::abs(coarse), 1e-300);
    QuadratureResult out;
    for (int pass = 0; pass < 5; ++pass) {
        out = QuadratureResult{};
        detail::refine(f, a, b, coarse, rel_tol * scale, 0, out);
        if (out.est_error <= rel_tol * std::max(std::abs(out.value), 1e-300)) break;
        scale = std::min(0.1 * scale, std::abs(out.value));
    }
    return out;
}

// Integral over [0, infinity) of p(x) e^{-n_scale s x}; the upper truncation
// point doubles until the integrand has decayed 45 e-folds below its peak.
// The integral converges for any real-rooted p since the exponential wins.
inline QuadratureResult quad_laplace(const MonicPoly<double>& p, double s, int n_scale) {
    require_roots(p, "quad_laplace");
    if (!(s > 0)) throw std::domain_error("quad_laplace: s must be positive");
    const double sigma = n_scale * s;

    const auto integrand = [&](double x) { return eval_from_roots(p, x) * std::exp(-sigma * x); };
    const auto log_integrand = [&](double x) {
        double lp = 0.0;
        for (Eigen::Index i = 0; i < p.roots->size(); ++i)
            lp += std::log(std::abs(x - (*p.roots)[i]));
        return lp - sigma * x;
    };

    // the peak of the integrand sits between 0 and about N/sigma
    double x_max = std::max(1.0, 2.0 * p.degree / sigma);
    double log_peak = log_integrand(0.0);
    for (double frac : {0.25, 0.5, 1.0})
        log_peak = std::max(log_peak, log_integrand(frac * p.degree / sigma));
    int doublings = 0;
    while (log_integrand(x_max) > log_peak - 45.0) {
        x_max *= 2.0;
        if (++doublings > 12)
            throw std::runtime_error("quad_laplace: truncation point failed to converge");
    }

    QuadratureResult r = integrate_adaptive(integrand, 0.0, x_max, 1e-10);
    if (r.est_error > 1e-8 * std::abs(r.value))
        throw std::runtime_error("quad_laplace: requested accuracy not reached");
    return r;
}

}  // namespace finfree::oracles

#endif  // FINFREE_QUADRATURE_HPP
