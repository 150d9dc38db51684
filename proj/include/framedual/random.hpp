#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "framedual/matrix.hpp"

namespace framedual {

/// Derives an independent stream seed from a base seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. The normal generator is a fixed Box-Muller
/// transform rather than std::normal_distribution, whose output sequence is
/// implementation-defined; identical seeds must reproduce identical draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

    /// Standard normal draw.
    double normal();

    std::vector<double> gaussian_vector(int n, double sigma = 1.0);
    Matrix gaussian_matrix(int rows, int cols, double sigma = 1.0);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace framedual
