#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so that every
// run draws the same cases; a failing case is reported through doctest INFO.

#include <cmath>
#include <cstdint>
#include <random>

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    double kappa() { return integer(0, 1) ? 1.0 : 0.5; }

    // Family parameter, spread over several decades.
    double lambda() { return log_uniform(0.05, 1e3); }

private:
    std::mt19937_64 rng_;
};

inline constexpr int kCases = 200;

} // namespace gen
