#pragma once

#include <cstdint>

namespace voicefp {

// SplitMix64 (Steele/Lea/Vigna). All randomness in this project flows
// through this generator so corpora and training runs are reproducible
// bit-for-bit, including across language ports. No OS or wall-clock
// entropy anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in [0, n). Plain modulo; the bias is irrelevant at our scales
    // and the simple rule keeps cross-implementation behavior unambiguous.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Functional child-seed derivation: independent of draw order, so parallel
// generation of utterance i cannot perturb utterance j.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 r(seed ^ (salt * 0xD1B54A32D192ED03ull));
    return r.next();
}

} // namespace voicefp
