#ifndef WEYLFORGE_INTERLACE_HPP
#define WEYLFORGE_INTERLACE_HPP

#include <cstdint>
#include <vector>

#include "weylforge/poly.hpp"
#include "weylforge/random.hpp"

namespace weylforge {

//
// (p,q)-interlacing of root multisets.
//
// f (p,q)-interlaces g when
//
//     r_{i+p}(g) <= r_i(f) <= r_{i-q}(g)    for every integer i,
//
// with the +/-inf sentinels of RootedPoly::root_at. The left inequalities are
// the "lower" family (governed by p), the right ones the "upper" family
// (governed by q).
//

enum class Side { lower, upper };

struct Violation {
    long index;
    Side side;
    double slack;    // negative; may be -inf when a sentinel is involved
};

struct InterlaceReport {
    bool holds = false;
    int minimal_p = 0;
    int minimal_q = 0;
    std::vector<Violation> violations;
};

struct PQ {
    int p = 0;
    int q = 0;
    friend bool operator==(const PQ&, const PQ&) = default;
};

// `slack` relaxes every inequality by an absolute amount (0 = exact).
bool is_pq_interlacing(const RootedPoly& f, const RootedPoly& g, int p, int q,
                       double slack = 0.0);

InterlaceReport interlace_report(const RootedPoly& f, const RootedPoly& g,
                                 int p, int q, double slack = 0.0);

// Componentwise-least (p, q). Always exists for finite root multisets.
PQ minimal_pq(const RootedPoly& f, const RootedPoly& g);

// -p <= n(f,r) - n(g,r) <= q for every real r, with n(., r) counting roots in
// [r, +inf). Evaluated at the union of the roots, where the difference
// attains every value it takes.
bool root_count_criterion(const RootedPoly& f, const RootedPoly& g, int p, int q);

// Intermediate polynomial h of degree d with f (s,t)-interlacing h and
// h (p-s,q-t)-interlacing g. Requires f (p,q)-interlacing g, 0 <= s <= p,
// 0 <= t <= q and max(deg f - t, deg g - p + s) <= d <= min(deg f + s, deg g + q - t).
// Each root is the largest admissible value not exceeding its predecessor,
// with a virtual predecessor one above the largest finite input root.
RootedPoly split(const RootedPoly& f, const RootedPoly& g, int p, int q,
                 int s, int t, int d);

// The strict relation on equal-degree pairs: the shifted root vectors must be
// componentwise ordered with at least p (resp. q) strictly positive gaps.
bool is_strict_pq(const RootedPoly& f, const RootedPoly& g, int p, int q);

// Draws f of the given degree with f (p,q)-interlacing g. Degree must lie in
// [deg g - p, deg g + q].
RootedPoly sample_interlacer(const RootedPoly& g, int p, int q, int degree, Rng& rng);

struct PolyPair {
    RootedPoly f;
    RootedPoly g;
};

inline constexpr double kDefaultMinGap = 0.05;

// g has n roots in [-5, 5] separated by at least min_gap; f is drawn with
// f (p,q)-interlacing g and deg f = n. Deterministic in seed.
PolyPair gen_pq_pair(int n, int p, int q, double min_gap, std::uint64_t seed);

} // namespace weylforge

#endif
