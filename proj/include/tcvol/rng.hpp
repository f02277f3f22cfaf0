#pragma once

#include <cstdint>
#include <random>

namespace tcvol {

// Avalanching mixer; spreads nearby seeds across the full 64-bit space.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

// Replicate r of a Monte Carlo run uses base_seed + r, so results do not
// depend on how replicates are scheduled across threads.
inline std::uint64_t replicate_seed(std::uint64_t base_seed, int replicate) {
    return base_seed + static_cast<std::uint64_t>(replicate);
}

// Standard symmetric beta-stable variate (characteristic function
// exp(-|u|^beta)) via the Chambers-Mallows-Stuck transform.
// Consumes exactly two uniforms from the engine, in a fixed order.
inline double sample_standard_stable(double beta, std::mt19937_64& eng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double u1 = unif(eng);
    const double u2 = unif(eng);
    const double v = 3.14159265358979323846 * (u1 - 0.5);
    double w = -std::log1p(-u2);
    if (w < 1e-300) w = 1e-300;
    if (beta == 1.0) return std::tan(v);
    const double bv = beta * v;
    return std::sin(bv) / std::pow(std::cos(v), 1.0 / beta) *
           std::pow(std::cos(v - bv) / w, (1.0 - beta) / beta);
}

}  // namespace tcvol
