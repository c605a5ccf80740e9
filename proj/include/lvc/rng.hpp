#pragma once

#include <cstdint>

namespace lvc {

/// Counter-based splittable generator (splitmix64 finalizer over a keyed
/// counter). Each sweep run gets its own substream keyed by (seed, stream),
/// so draws are reproducible under any execution order or worker count.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed ^ 0x9E3779B97F4A7C15ull) + stream)), counter_(0) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

    /// uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// uniform on the open interval (lo, hi); endpoints are redrawn
    double uniform_open(double lo, double hi) {
        for (;;) {
            const double x = lo + (hi - lo) * next_double();
            if (x > lo && x < hi) return x;
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace lvc
