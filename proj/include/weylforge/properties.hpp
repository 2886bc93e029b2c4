#ifndef WEYLFORGE_PROPERTIES_HPP
#define WEYLFORGE_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weylforge/poly.hpp"
#include "weylforge/random.hpp"

// Randomized property checks over the interlacing calculus and the
// constructions. Each runs `count` seeded instances and counts failures.
namespace weylforge::properties {

struct Result {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::size_t positives = 0;   // instances where the tested relation held
    double max_residual = 0.0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
    void fail(const std::string& what);
};

// Roots in [-5, 5]; about a third of the draws come from a coarse integer
// grid so that ties and repeated roots occur.
RootedPoly random_poly(Rng& rng, int degree);

Result equivalence(std::size_t count, std::uint64_t seed);
Result reflexivity(std::size_t count, std::uint64_t seed);
Result symmetry(std::size_t count, std::uint64_t seed);
Result transitivity(std::size_t count, std::uint64_t seed);
Result monotonicity(std::size_t count, std::uint64_t seed);
Result degree_bound(std::size_t count, std::uint64_t seed);
Result common_factor(std::size_t count, std::uint64_t seed);
Result derivative(std::size_t count, std::uint64_t seed);
Result split_soundness(std::size_t count, std::uint64_t seed);
Result compatibility_witness(std::size_t count, std::uint64_t seed);
Result weyl_forward(std::size_t count, std::uint64_t seed);
Result weyl_converse(std::size_t count, std::uint64_t seed);
Result bordered(std::size_t count, std::uint64_t seed);

// Every property above at `count` instances each.
std::vector<Result> run_all(std::size_t count, std::uint64_t seed);

} // namespace weylforge::properties

#endif
