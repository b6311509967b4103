#ifndef YB_HARNESS_RANDOM_HPP
#define YB_HARNESS_RANDOM_HPP

#include <yb/scalar.hpp>

#include <cstdint>
#include <random>

namespace yb::harness {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Independent generator for trial `index` of a run with `seed`; trials can be
/// evaluated in any order with identical results.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5EEDull)));
}

/// Bounds of the instance distributions.
inline constexpr long max_numerator = 100;
inline constexpr long max_denominator = 100;
inline constexpr double float_range = 10.0;

/// Random nonzero scalar: p/q with 1 <= |p| <= 100, 1 <= q <= 100 in exact
/// mode; uniform in [-10, 10] in float mode.
template <FieldScalar T>
T draw_scalar(std::mt19937_64& rng) {
    if constexpr (scalar_traits<T>::exact) {
        std::uniform_int_distribution<long> num(1, max_numerator);
        std::uniform_int_distribution<long> den(1, max_denominator);
        std::bernoulli_distribution neg(0.5);
        long p = num(rng);
        const long q = den(rng);
        if (neg(rng)) p = -p;
        return scalar<T>(p, q);
    } else {
        std::uniform_real_distribution<double> u(-float_range, float_range);
        double v = 0.0;
        while (v == 0.0) v = u(rng);
        return T(v, 0.0);
    }
}

}  // namespace yb::harness

#endif  // YB_HARNESS_RANDOM_HPP
