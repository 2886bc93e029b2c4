#ifndef WEYLFORGE_RANDOM_HPP
#define WEYLFORGE_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace weylforge {

// Seeded generator with portable draws. std::mt19937_64's output sequence is
// fixed by the standard; the std distributions are not, so the mapping to
// doubles and integers is done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi]; returns lo exactly when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n).
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

    // Uniform integer in [lo, hi].
    int between(int lo, int hi)
    {
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() >> 63) != 0; }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace weylforge

#endif
