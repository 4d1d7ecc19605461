#pragma once

#include <cstdint>
#include <random>

namespace recolor {

// All randomized code in the library draws from this wrapper around
// std::mt19937_64. The engine's output sequence is fixed by the standard,
// so identical seeds give identical results on every platform. Bounded
// draws use plain rejection-free modulo reduction; the slight bias is
// irrelevant for instance generation and keeps the mapping reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform-ish integer in [lo, hi], inclusive. Requires lo <= hi.
    int next_int(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool next_bool(double p) {
        // 53-bit mantissa draw in [0,1).
        double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return x < p;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace recolor
