#pragma once

// Shared error taxonomy and deterministic randomness primitives.
//
// Every failure mode in the library derives from Error.  Two subfamilies
// matter for the CLI exit-code contract: InputError (bad parameters,
// unparseable files, invalid networks) and GuardError (an operation would
// exceed a hard resource guard, e.g. an exhaustive decoder search bound).

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace structcodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: parameters out of domain, malformed files, invalid graphs.
struct InputError : Error {
    using Error::Error;
};

// A hard resource guard would be exceeded (exhaustive search too large, ...).
struct GuardError : Error {
    using Error::Error;
};

struct DomainError : InputError {
    using InputError::InputError;
};
struct DimensionError : InputError {
    using InputError::InputError;
};
struct ConfigError : InputError {
    using InputError::InputError;
};
struct ParseError : InputError {
    using InputError::InputError;
};

using Rng = std::mt19937_64;

// SplitMix64 finalizer; maps (master seed, stream index) to a well-mixed
// per-stream seed.  This is the declared seed-splitting scheme: stream i of
// master seed s is seeded with split_seed(s, i), so independent trials never
// share generator state and any implementation of the same scheme reproduces
// the streams.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
    return Rng(split_seed(master, stream));
}

// Uniform double in [0, 1) with 53 random mantissa bits.  We roll our own
// samplers because the distributions in <random> are not bit-reproducible
// across standard library implementations, and output files must be.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

// Standard normal via Box-Muller (one value per call, stateless).
inline double sample_normal(Rng& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

inline double log2_safe(double x) { return std::log2(x); }

}  // namespace structcodes
