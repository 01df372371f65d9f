// Deterministic generator for test instances (splitmix64). Not part of the
// library: the artifact itself has no randomness anywhere.

#ifndef FINFREE_TEST_RNG_HPP
#define FINFREE_TEST_RNG_HPP

#include <cstdint>

#include "finfree/poly.hpp"

namespace finfree::testing {

class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // random rational in (lo, hi) with denominator up to max_den
    Rational rational(int lo, int hi, int max_den = 8) {
        const int den = uniform_int(1, max_den);
        const int num = uniform_int(lo * den + 1, hi * den - 1);
        return Rational(num, den);
    }

    // strictly negative rational roots in (-max_mag, 0)
    Vec<Rational> negative_rational_roots(int n, int max_mag = 4) {
        Vec<Rational> r(n);
        for (int i = 0; i < n; ++i) r[i] = rational(-max_mag, 0);
        return r;
    }

    Vec<Rational> rational_roots(int n, int max_mag = 4) {
        Vec<Rational> r(n);
        for (int i = 0; i < n; ++i) r[i] = rational(-max_mag, max_mag);
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace finfree::testing

#endif  // FINFREE_TEST_RNG_HPP
