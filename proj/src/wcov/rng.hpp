#ifndef WCOV_RNG_HPP
#define WCOV_RNG_HPP

#include <cstdint>

namespace wcov {

// Deterministic splittable generator (splitmix64, algorithm tag "splitmix64/v1").
// Instances are reproducible across platforms: all arithmetic is on uint64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) {
        return std::uint64_t((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Bernoulli with probability p, quantized to multiples of 2^-53.
    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        std::uint64_t threshold = std::uint64_t(p * 9007199254740992.0);  // p * 2^53
        return (next() >> 11) < threshold;
    }

    // Independent child stream.
    Rng split() { return Rng(next() ^ 0xD1B54A32D192ED03ULL); }

private:
    std::uint64_t state_;
};

inline constexpr const char* kRngAlgorithm = "splitmix64/v1";

}  // namespace wcov

#endif
