#pragma once

#include <cstdint>
#include <cmath>

namespace ranklab {

// Self-contained seedable generator: xoshiro-free, standard-library-free so
// every stream is reproducible byte-for-byte across compilers. splitmix64 is
// both the state mixer and the seed deriver; statistical quality is ample for
// Monte-Carlo work (no cryptographic requirement).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; never returns 0 (safe under log()).
    double uniform01_open_low() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; one value per call, pair cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double lognormal() { return std::exp(normal()); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Deterministic stream splitting: derive an independent child seed from a
// parent seed and a stream index (trial number, epoch, layer, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng mix(seed ^ (0xA0761D6478BD642Full * (stream + 1)));
    mix.next_u64();
    return mix.next_u64();
}

// In-place Fisher-Yates shuffle of indices [0, n); self-contained so shuffles
// are identical across standard-library implementations.
template <typename Vec>
void shuffle_indices(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        auto tmp = v[i - 1];
        v[i - 1] = v[j];
        v[j] = tmp;
    }
}

} // namespace ranklab
