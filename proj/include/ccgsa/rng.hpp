#ifndef CCGSA_RNG_HPP
#define CCGSA_RNG_HPP

#include <cstdint>
#include <random>

namespace ccgsa {

/// Seeded uniform random stream. Draws are reproducible across platforms:
/// the engine is the standard-mandated mt19937_64 and doubles are built
/// directly from the high 53 bits, so no library-dependent distribution
/// code is involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        if (forced_) return forced_value_;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at the sizes used here.
    std::uint64_t integer(std::uint64_t n) { return gen_() % n; }

    /// Stream that returns `value` from every uniform() call. Test hook for
    /// pinning the stochastic factors of a step to a known constant.
    static Rng forced(double value) {
        Rng r(0);
        r.forced_ = true;
        r.forced_value_ = value;
        return r;
    }

private:
    std::mt19937_64 gen_;
    bool forced_ = false;
    double forced_value_ = 0.0;
};

} // namespace ccgsa

#endif
