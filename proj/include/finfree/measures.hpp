// Closed-form reference measures supported on the strictly negative axis:
// point mass, uniform, semicircle and finite atomic. Each provides its
// Cauchy transform, R-transform and quantile function, plus the midpoint
// quantile discretization producing the polynomial sequence whose
// empirical root distribution converges weakly to the measure.

#ifndef FINFREE_MEASURES_HPP
#define FINFREE_MEASURES_HPP

#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

struct ReferenceMeasure {
    enum class Kind { point, uniform, semicircle, atomic };
    Kind kind = Kind::point;

    double location = 0.0;            // point
    double a = 0.0, b = 0.0;          // uniform on [a, b]
    double center = 0.0, radius = 0.0;  // semicircle
    Eigen::VectorXd atoms;            // atomic, ascending
    Eigen::VectorXd weights;
};

inline ReferenceMeasure point_mass(double location) {
    if (!(location < 0)) throw std::invalid_argument("point_mass: support must be negative");
    ReferenceMeasure m;
    m.kind = ReferenceMeasure::Kind::point;
    m.location = location;
    return m;
}

inline ReferenceMeasure uniform_measure(double a, double b) {
    if (!(a < b && b < 0)) throw std::invalid_argument("uniform_measure: need a < b < 0");
    ReferenceMeasure m;
    m.kind = ReferenceMeasure::Kind::uniform;
    m.a = a;
    m.b = b;
    return m;
}

inline ReferenceMeasure semicircle_measure(double center, double radius) {
    if (!(radius > 0 && center + radius < 0))
        throw std::invalid_argument("semicircle_measure: support must stay negative");
    ReferenceMeasure m;
    m.kind = ReferenceMeasure::Kind::semicircle;
    m.center = center;
    m.radius = radius;
    return m;
}

inline ReferenceMeasure atomic_measure(Eigen::VectorXd atoms, Eigen::VectorXd weights) {
    if (atoms.size() < 1 || atoms.size() != weights.size())
        throw std::invalid_argument("atomic_measure: atoms/weights size mismatch");
    double total = 0.0;
    for (Eigen::Index i = 0; i < atoms.size(); ++i) {
        if (!(atoms[i] < 0)) throw std::invalid_argument("atomic_measure: support must be negative");
        if (!(weights[i] > 0)) throw std::invalid_argument("atomic_measure: weights must be positive");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("atomic_measure: weights must sum to 1");
    weights /= total;
    // sort by atom location
    std::vector<int> idx(atoms.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return atoms[i] < atoms[j]; });
    ReferenceMeasure m;
    m.kind = ReferenceMeasure::Kind::atomic;
    m.atoms.resize(atoms.size());
    m.weights.resize(atoms.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        m.atoms[i] = atoms[idx[i]];
        m.weights[i] = weights[idx[i]];
    }
    return m;
}

// [min, max] of the support.
inline std::pair<double, double> support_bounds(const ReferenceMeasure& m) {
    switch (m.kind) {
        case ReferenceMeasure::Kind::point: return {m.location, m.location};
        case ReferenceMeasure::Kind::uniform: return {m.a, m.b};
        case ReferenceMeasure::Kind::semicircle: return {m.center - m.radius, m.center + m.radius};
        case ReferenceMeasure::Kind::atomic: return {m.atoms[0], m.atoms[m.atoms.size() - 1]};
    }
    throw std::logic_error("support_bounds: unreachable");
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

// G_mu(x) = integral d mu(t) / (x - t), closed form per kind; x > 0.
inline double cauchy_transform(const ReferenceMeasure& m, double x) {
    if (x < 0) throw std::domain_error("cauchy_transform(measure): x must be nonnegative");
    switch (m.kind) {
        case ReferenceMeasure::Kind::point:
            return 1.0 / (x - m.location);
        case ReferenceMeasure::Kind::uniform:
            return std::log((x - m.a) / (x - m.b)) / (m.b - m.a);
        case ReferenceMeasure::Kind::semicircle: {
            // stable form of 2 (d - sqrt(d^2 - r^2)) / r^2 for d >> r
            const double d = x - m.center;
            return 2.0 / (d + std::sqrt(d * d - m.radius * m.radius));
        }
        case ReferenceMeasure::Kind::atomic: {
            NeumaierSum acc;
            for (Eigen::Index i = 0; i < m.atoms.size(); ++i)
                acc.add(m.weights[i] / (x - m.atoms[i]));
            return acc.value();
        }
    }
    throw std::logic_error("cauchy_transform: unreachable");
}

inline double alpha_of(const ReferenceMeasure& m) {
    switch (m.kind) {
        case ReferenceMeasure::Kind::point:
            return -1.0 / m.location;
        case ReferenceMeasure::Kind::uniform:
            return std::log(m.a / m.b) / (m.b - m.a);
        case ReferenceMeasure::Kind::semicircle: {
            const double d = -m.center;
            return 2.0 / (d + std::sqrt(d * d - m.radius * m.radius));
        }
        case ReferenceMeasure::Kind::atomic: {
            NeumaierSum acc;
            for (Eigen::Index i = 0; i < m.atoms.size(); ++i)
                acc.add(-m.weights[i] / m.atoms[i]);
            return acc.value();
        }
    }
    throw std::logic_error("alpha_of: unreachable");
}

// R_mu(s) = G_mu^{-1}(s) - 1/s for s in (0, alpha); closed form except the
// atomic kind, whose rational G is inverted numerically on (0, infinity).
inline double r_transform(const ReferenceMeasure& m, double s) {
    const double alpha = alpha_of(m);
    if (!(s > 0 && s < alpha))
        throw std::domain_error("r_transform: s must lie in (0, alpha) with alpha = " +
                                format_number(alpha));
    switch (m.kind) {
        case ReferenceMeasure::Kind::point:
            return m.location;
        case ReferenceMeasure::Kind::uniform: {
            const double e = std::exp(s * (m.b - m.a));
            return (e * m.b - m.a) / (e - 1.0) - 1.0 / s;
        }
        case ReferenceMeasure::Kind::semicircle:
            return m.center + 0.25 * m.radius * m.radius * s;
        case ReferenceMeasure::Kind::atomic: {
            // bisection on the strictly decreasing G over (0, inf)
            double lo = 0.0, hi = 1.0;
            while (cauchy_transform(m, hi) > s) hi *= 2.0;
            for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                (cauchy_transform(m, mid) > s ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi) - 1.0 / s;
        }
    }
    throw std::logic_error("r_transform: unreachable");
}

// ---------------------------------------------------------------------------
// Quantiles and discretization
// ---------------------------------------------------------------------------

namespace detail {

inline double semicircle_cdf(const ReferenceMeasure& m, double x) {
    const double u = std::clamp(x - m.center, -m.radius, m.radius);
    const double r2 = m.radius * m.radius;
    return (u * std::sqrt(std::max(0.0, r2 - u * u)) + r2 * std::asin(u / m.radius)) /
               (M_PI * r2) +
           0.5;
}

}  // namespace detail

// F^{-1}(t) for t in (0, 1).
inline double quantile(const ReferenceMeasure& m, double t) {
    if (!(t > 0 && t < 1)) throw std::domain_error("quantile: t must lie in (0,1)");
    switch (m.kind) {
        case ReferenceMeasure::Kind::point:
            return m.location;
        case ReferenceMeasure::Kind::uniform:
            return m.a + (m.b - m.a) * t;
        case ReferenceMeasure::Kind::semicircle: {
            double lo = m.center - m.radius, hi = m.center + m.radius;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                (detail::semicircle_cdf(m, mid) < t ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        case ReferenceMeasure::Kind::atomic: {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < m.atoms.size(); ++i) {
                acc += m.weights[i];
                if (t <= acc) return m.atoms[i];
            }
            return m.atoms[m.atoms.size() - 1];
        }
    }
    throw std::logic_error("quantile: unreachable");
}

// Degree-N discretization with roots at the midpoint quantiles
// F^{-1}((i - 1/2)/N); atomic measures get proportional multiplicities by
// largest-remainder rounding instead, so every atom keeps its exact weight
// balance.
inline MonicPoly<double> quantile_poly(const ReferenceMeasure& m, int n) {
    if (n < 1) throw std::invalid_argument("quantile_poly: N must be positive");
    Vec<double> roots(n);
    if (m.kind == ReferenceMeasure::Kind::atomic) {
        const Eigen::Index k = m.atoms.size();
        std::vector<int> mult(k, 0);
        std::vector<std::pair<double, int>> rem(k);
        int assigned = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
            const double exact = m.weights[i] * n;
            mult[i] = static_cast<int>(std::floor(exact));
            rem[i] = {exact - mult[i], static_cast<int>(i)};
            assigned += mult[i];
        }
        std::sort(rem.begin(), rem.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first > y.first;
            return x.second < y.second;  // deterministic tie-break
        });
        for (int j = 0; j < n - assigned; ++j) ++mult[rem[j].second];
        int pos = 0;
        for (Eigen::Index i = 0; i < k; ++i)
            for (int c = 0; c < mult[i]; ++c) roots[pos++] = m.atoms[i];
    } else {
        for (int i = 1; i <= n; ++i) roots[i - 1] = quantile(m, (i - 0.5) / n);
    }
    return from_roots<double>(std::move(roots));
}

// ---------------------------------------------------------------------------
// Measure spec strings
// ---------------------------------------------------------------------------

// Formats: point:-1.5 | uniform:-2:-1 | semicircle:-3:1 | atomic:-1@0.5,-2@0.5
inline ReferenceMeasure parse_measure(const std::string& spec) {
    const auto bad = [&]() {
        return std::invalid_argument("parse_measure: malformed spec '" + spec + "'");
    };
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    const auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            // a separator directly after another token boundary splits; the
            // leading '-' of a negative number never starts a new token
            auto pos = s.find(sep, start);
            if (pos == std::string::npos) {
                out.push_back(s.substr(start));
                break;
            }
            out.push_back(s.substr(start, pos - start));
            start = pos + 1;
        }
        return out;
    };

    const auto num = [&](const std::string& t) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(t, &pos);
            if (pos != t.size()) throw bad();
            return v;
        } catch (const std::logic_error&) {
            throw bad();
        }
    };

    if (kind == "point") {
        return point_mass(num(rest));
    } else if (kind == "uniform") {
        const auto parts = split(rest, ':');
        if (parts.size() != 2) throw bad();
        return uniform_measure(num(parts[0]), num(parts[1]));
    } else if (kind == "semicircle") {
        const auto parts = split(rest, ':');
        if (parts.size() != 2) throw bad();
        return semicircle_measure(num(parts[0]), num(parts[1]));
    } else if (kind == "atomic") {
        const auto entries = split(rest, ',');
        Eigen::VectorXd atoms(entries.size()), weights(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto at = entries[i].find('@');
            if (at == std::string::npos) throw bad();
            atoms[i] = num(entries[i].substr(0, at));
            weights[i] = num(entries[i].substr(at + 1));
        }
        return atomic_measure(atoms, weights);
    }
    throw bad();
}

}  // namespace finfree

#endif  // FINFREE_MEASURES_HPP
