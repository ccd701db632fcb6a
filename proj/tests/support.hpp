#ifndef QGDEF_TESTS_SUPPORT_HPP
#define QGDEF_TESTS_SUPPORT_HPP

#include <cstdint>

#include <qgdef/rational.hpp>

namespace qgdef::testing {

// Deterministic PRNG so property tests reproduce across platforms.
class Rng {
    std::uint64_t state_;

public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    // Uniform in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long num_bound, long den_bound) {
        long n = range(-num_bound, num_bound);
        long d = range(1, den_bound);
        return Rational(n, d);
    }
};

} // namespace qgdef::testing

#endif
