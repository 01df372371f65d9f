// Scalar backends for the finfree library.
//
// Every core routine is templated on a scalar type with two supported
// backends: exact rationals (boost::multiprecision::cpp_rational, the
// authoritative backend for algebraic identities, N <= 200) and double
// (for large-N sweeps). Binomials and factorials are always computed in
// exact integer arithmetic and converted at the end.

#ifndef FINFREE_SCALAR_HPP
#define FINFREE_SCALAR_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace finfree {

// expression templates are disabled so that arithmetic results are always
// of the scalar type itself (required for scalar-generic code and Eigen)
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

// Rational backend guard: degrees above this are a usage error, not a
// capability of the exact backend.
inline constexpr int kExactDegreeCap = 200;

// ---------------------------------------------------------------------------
// Exact integer combinatorics
// ---------------------------------------------------------------------------

inline BigInt binomial_exact(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // divides exactly at every step
    }
    return c;
}

inline BigInt factorial_exact(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

template <typename Scalar>
Scalar from_bigint(const BigInt& v) {
    if constexpr (is_exact_v<Scalar>) {
        return Rational(v);
    } else {
        return v.template convert_to<double>();
    }
}

template <typename Scalar>
Scalar binomial(int n, int k) {
    return from_bigint<Scalar>(binomial_exact(n, k));
}

template <typename Scalar>
Scalar factorial(int n) {
    return from_bigint<Scalar>(factorial_exact(n));
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

template <typename Scalar>
Eigen::VectorXd to_double_vec(const Vec<Scalar>& v) {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing and formatting
// ---------------------------------------------------------------------------

// Accepts "n", "n/d", decimal ("-1.75") and scientific ("2.5e-3") forms,
// all converted exactly.
inline Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("parse_rational: empty token");

    if (auto slash = t.find('/'); slash != std::string::npos) {
        const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        BigInt n(num), d(den);
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(n, d);
    }

    bool neg = false;
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = (t[i++] == '-');

    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    long exponent = 0;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exponent = std::stol(t.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("parse_rational: malformed number '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: malformed number '" + text + "'");

    BigInt n(digits.empty() ? "0" : digits);
    if (neg) n = -n;
    long pow10 = exponent - frac_digits;
    BigInt scale = 1;
    for (long k = 0; k < std::abs(pow10); ++k) scale *= 10;
    return pow10 >= 0 ? Rational(n * scale) : Rational(n, scale);
}

template <typename Scalar>
Scalar parse_scalar(const std::string& text) {
    if constexpr (is_exact_v<Scalar>) {
        return parse_rational(text);
    } else {
        std::size_t pos = 0;
        // fractions are accepted in either backend
        if (auto slash = text.find('/'); slash != std::string::npos)
            return to_double(parse_rational(text));
        double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size())
            throw std::invalid_argument("parse_scalar: trailing junk in '" + text + "'");
        return v;
    }
}

// 17 significant digits: round-trips any double.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string format_number(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// Compensated summation and log-sum-exp
// ---------------------------------------------------------------------------

class NeumaierSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// log(sum exp(a_i)) over finite entries; -inf entries are allowed and ignored.
inline double logsumexp(const Eigen::Ref<const Eigen::ArrayXd>& a) {
    const double m = a.maxCoeff();
    if (!std::isfinite(m)) return m;
    NeumaierSum acc;
    for (Eigen::Index i = 0; i < a.size(); ++i) acc.add(std::exp(a[i] - m));
    return m + std::log(acc.value());
}

}  // namespace finfree

#endif  // FINFREE_SCALAR_HPP
