#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace drg {

// Deterministic 64-bit generator (splitmix64 core).  We avoid the standard
// <random> distributions because their output is implementation-defined;
// every sampled quantity in this project must be reproducible bit-for-bit
// from a seed alone, on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n) without modulo bias (Lemire reduction with
    // rejection).  n must be positive.
    std::uint64_t below(std::uint64_t n) {
        while (true) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= (0ULL - n) % n) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (next() & 1ULL) != 0; }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Derive an independent stream; used to hand each task its own seed.
    Rng split() { return Rng(next()); }

  private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = rng.below(i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace drg
