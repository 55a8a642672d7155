#ifndef ECOFLOW_RNG_HPP
#define ECOFLOW_RNG_HPP

#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

namespace ecoflow {

// Seeded random stream used by every stochastic operation in the library.
//
// The generator is std::mt19937_64 (fully specified by the standard), and all
// variate mappings below are written out explicitly instead of going through
// std::uniform_real_distribution / std::normal_distribution, whose outputs
// differ between standard-library implementations. A fixed 64-bit seed
// therefore reproduces the same stream on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, n). Modulo mapping; the bias for n << 2^64 is
    // far below anything observable at our sample sizes.
    std::uint64_t uniform_index(std::uint64_t n) {
        return gen_() % n;
    }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ecoflow

#endif  // ECOFLOW_RNG_HPP
