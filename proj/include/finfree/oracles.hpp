// Independent brute-force references: quadrature, set-partition sums,
// finite differences and the Stirling-type factorial bound. Everything in
// this header exists to check a closed form computed elsewhere.

#ifndef FINFREE_ORACLES_HPP
#define FINFREE_ORACLES_HPP

#include "finfree/certificate.hpp"
#include "finfree/partitions.hpp"
#include "finfree/quadrature.hpp"

namespace finfree::oracles {

// Central difference; error O(h^2), exact on quadratics.
template <typename F>
double finite_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Certifies N! e^N / N^{N+1} <= e^{1/(12N)} sqrt(2 pi / N) in the log
// domain. The margin shrinks like 1/(360 N^3) (about 3e-12 at N = 1000),
// so log N! is accumulated in compensated long double instead of lgamma.
inline BoundCertificate stirling_bound_check(int n) {
    if (n < 1) throw std::invalid_argument("stirling_bound_check: N must be positive");
    long double log_fact = 0.0L, comp = 0.0L;
    for (int k = 2; k <= n; ++k) {
        const long double x = std::log(static_cast<long double>(k));
        const long double t = log_fact + x;
        comp += (std::fabs(log_fact) >= std::fabs(x)) ? (log_fact - t) + x : (x - t) + log_fact;
        log_fact = t;
    }
    log_fact += comp;

    const long double ln = std::log(static_cast<long double>(n));
    const long double log_lhs = log_fact + n - (n + 1) * ln;
    const long double log_rhs =
        1.0L / (12.0L * n) + 0.5L * (std::log(2.0L * 3.14159265358979323846264338328L) - ln);

    return make_certificate("stirling-factorial-bound",
                            -kInf,
                            static_cast<double>(log_lhs),
                            static_cast<double>(log_rhs));
}

}  // namespace finfree::oracles

#endif  // FINFREE_ORACLES_HPP
