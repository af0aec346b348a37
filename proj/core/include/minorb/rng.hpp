#pragma once

#include <cstdint>
#include <vector>

#include "minorb/matrix.hpp"

namespace minorb {

// splitmix64 (Steele/Lea/Vigna), fixed algorithm "splitmix64-v1".
// All randomized suites draw from this generator so that reports are
// byte-identical across platforms for a given seed. Bounded draws use
// plain modulo reduction: bias is irrelevant here, reproducibility is not.
class Rng {
  public:
    static constexpr const char* kAlgorithm = "splitmix64-v1";

    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi].
    long next_int(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next_u64() % span);
    }

    // Small integer scalar in [-bound, bound].
    Rat next_scalar(long bound = 5) { return Rat(next_int(-bound, bound)); }

    Rat next_nonzero_scalar(long bound = 5) {
        for (;;) {
            Rat q = next_scalar(bound);
            if (!is_zero(q)) return q;
        }
    }

    Mat next_matrix(int rows, int cols, long bound = 5) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = next_scalar(bound);
        return m;
    }

    Vec next_vector(int dim, long bound = 5) { return next_matrix(dim, 1, bound); }

  private:
    std::uint64_t state_;
};

}  // namespace minorb
