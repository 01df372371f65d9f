#ifndef FINFREE_CERTIFICATE_HPP
#define FINFREE_CERTIFICATE_HPP

#include <algorithm>
#include <limits>
#include <string>

namespace finfree {

// Result of checking lower <= value <= upper for one inequality (or a
// family of grid inequalities collapsed to worst case). One-sided
// checks use an infinite bound.
struct BoundCertificate {
    std::string name;
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    bool holds = false;
    double slack = 0.0;  // min(value - lower, upper - value)
};

inline BoundCertificate make_certificate(std::string name, double lower, double value,
                                         double upper) {
    BoundCertificate c;
    c.name = std::move(name);
    c.lower = lower;
    c.value = value;
    c.upper = upper;
    c.holds = (lower <= value) && (value <= upper);
    c.slack = std::min(value - lower, upper - value);
    return c;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace finfree

#endif  // FINFREE_CERTIFICATE_HPP
