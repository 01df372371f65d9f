// Truncated formal power series: coefficients a_0..a_M with all arithmetic
// taken modulo s^{M+1}.

#ifndef FINFREE_SERIES_HPP
#define FINFREE_SERIES_HPP

#include "finfree/scalar.hpp"

namespace finfree {

template <typename Scalar>
struct TruncatedSeries {
    Vec<Scalar> coeffs;  // a_0..a_M

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Scalar& operator[](int k) const { return coeffs[k]; }
    Scalar& operator[](int k) { return coeffs[k]; }
};

template <typename Scalar>
TruncatedSeries<Scalar> zero_series(int order) {
    return {Vec<Scalar>::Zero(order + 1)};
}

// Truncate (or zero-extend) to the given order.
template <typename Scalar>
TruncatedSeries<Scalar> truncated(const TruncatedSeries<Scalar>& f, int order) {
    TruncatedSeries<Scalar> g = zero_series<Scalar>(order);
    const int m = std::min(order, f.order());
    for (int k = 0; k <= m; ++k) g[k] = f[k];
    return g;
}

template <typename Scalar>
TruncatedSeries<Scalar> mul(const TruncatedSeries<Scalar>& f, const TruncatedSeries<Scalar>& g,
                            int order) {
    TruncatedSeries<Scalar> h = zero_series<Scalar>(order);
    for (int i = 0; i <= std::min(order, f.order()); ++i) {
        if (f[i] == Scalar(0)) continue;
        const int jmax = std::min(order - i, g.order());
        for (int j = 0; j <= jmax; ++j) h[i + j] += f[i] * g[j];
    }
    return h;
}

// Formal derivative d/ds, one order lower.
template <typename Scalar>
TruncatedSeries<Scalar> derivative(const TruncatedSeries<Scalar>& f) {
    const int m = std::max(0, f.order() - 1);
    TruncatedSeries<Scalar> g = zero_series<Scalar>(m);
    for (int k = 1; k <= f.order(); ++k) g[k - 1] = Scalar(k) * f[k];
    return g;
}

// log f for f with a_0 = 1, via the derivative recurrence
//   n b_n = n a_n - sum_{j=1}^{n-1} j b_j a_{n-j}.
template <typename Scalar>
TruncatedSeries<Scalar> log_series(const TruncatedSeries<Scalar>& f) {
    if (!(f[0] == Scalar(1))) throw std::invalid_argument("log_series: constant term must be 1");
    const int m = f.order();
    TruncatedSeries<Scalar> b = zero_series<Scalar>(m);
    for (int n = 1; n <= m; ++n) {
        Scalar acc = Scalar(n) * f[n];
        for (int j = 1; j < n; ++j) acc -= Scalar(j) * b[j] * f[n - j];
        b[n] = acc / Scalar(n);
    }
    return b;
}

// 1/f for f with a_0 != 0.
template <typename Scalar>
TruncatedSeries<Scalar> reciprocal(const TruncatedSeries<Scalar>& f) {
    if (f[0] == Scalar(0)) throw std::invalid_argument("reciprocal: constant term must be nonzero");
    const int m = f.order();
    TruncatedSeries<Scalar> g = zero_series<Scalar>(m);
    g[0] = Scalar(1) / f[0];
    for (int n = 1; n <= m; ++n) {
        Scalar acc(0);
        for (int j = 1; j <= n; ++j) acc += f[j] * g[n - j];
        g[n] = -acc / f[0];
    }
    return g;
}

// Horner evaluation, treating the truncated series as a polynomial.
template <typename Scalar>
Scalar eval_poly(const TruncatedSeries<Scalar>& f, const Scalar& u) {
    Scalar acc = f[f.order()];
    for (int k = f.order() - 1; k >= 0; --k) acc = acc * u + f[k];
    return acc;
}

}  // namespace finfree

#endif  // FINFREE_SERIES_HPP
