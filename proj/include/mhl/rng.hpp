#ifndef MHL_RNG_HPP
#define MHL_RNG_HPP

#include <cstdint>
#include <random>

namespace mhl {

// Seeded generator with hand-rolled bounded draws so that runs are
// reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // derive an independent stream (for parallel trials)
    Rng split() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 eng_;
};

} // namespace mhl

#endif
