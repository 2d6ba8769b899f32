#pragma once

#include <cstdint>
#include <random>

namespace npcd {

// Deterministic random source. Every sampler is implemented directly on the
// raw mt19937_64 stream with a fixed algorithm (bounded rejection for
// integers, Box-Muller for normals, Marsaglia-Tsang for gamma, Knuth's
// product method for Poisson), so a seed pins the exact output sequence
// independently of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // unbiased uniform integer on [lo, hi]
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // standard normal via Box-Muller (two uniforms per draw, sine half discarded)
    double normal();

    // unit-scale gamma, shape >= 1 (Marsaglia-Tsang squeeze)
    double gamma(double shape);

    // Student t with df >= 2: Z / sqrt(chi2_df / df), chi2_df = 2 Gamma(df/2)
    double student_t(double df);

    // Knuth product-of-uniforms; suitable for the small means used here
    std::int64_t poisson(double mean);

    // splitmix64 finalizer; decorrelated per-stream seeds for parallel work
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 gen_;
};

}  // namespace npcd
