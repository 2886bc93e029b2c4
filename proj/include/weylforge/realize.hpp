#ifndef WEYLFORGE_REALIZE_HPP
#define WEYLFORGE_REALIZE_HPP

#include <vector>

#include "weylforge/linalg.hpp"
#include "weylforge/poly.hpp"

namespace weylforge {

//
// Certificate that B - A is a sum of at most p positive and q negative
// rank-one terms:
//
//     B - A = sum_i plus_i plus_i^T - sum_j minus_j minus_j^T,
//
// with A having spectrum f and B having spectrum g. Zero vectors are allowed.
//
struct Realization {
    RootedPoly f;
    RootedPoly g;
    int p = 0;
    int q = 0;
    SymMatrix A;
    SymMatrix B;
    std::vector<Vector> plus;
    std::vector<Vector> minus;
};

// M has spectrum g and its leading deg f block has spectrum f.
struct BorderedRealization {
    RootedPoly f;
    RootedPoly g;
    SymMatrix M;

    int p() const { return static_cast<int>(g.degree()) - static_cast<int>(f.degree()); }
};

struct BuildTolerances {
    double eq_tol = kDefaultEqTol;
    double match_tol = kDefaultMatchTol;
    double align_tol = kDefaultAlignTol;
};

struct RankOneUpdate {
    SymMatrix A;    // diagonal, entries in non-increasing order
    Vector alpha;
};

struct BorderStep {
    Vector alpha;   // indexed like the sorted roots of f
    double corner = 0.0;
};

// A = diag(roots of f) and alpha with A + alpha alpha^T having spectrum g.
// Requires deg f = deg g >= 1 and f (1,0)-interlacing g.
RankOneUpdate realize_rank_one(const RootedPoly& f, const RootedPoly& g,
                               const BuildTolerances& tol = {});

// A = diag(roots of f), B = A + sum of p outer products.
// Requires deg f = deg g and f (p,0)-interlacing g.
Realization realize_p0(const RootedPoly& f, const RootedPoly& g, int p,
                       const BuildTolerances& tol = {});

// Requires deg f = deg g and f (p,q)-interlacing g.
Realization realize_weyl_converse(const RootedPoly& f, const RootedPoly& g, int p,
                                  int q, const BuildTolerances& tol = {});

// Border (alpha, a) such that [[diag(roots f), alpha], [alpha^T, a]] has
// spectrum g. Requires deg g = deg f + 1 and f (1,0)-interlacing g.
BorderStep realize_border_step(const RootedPoly& f, const RootedPoly& g,
                               const BuildTolerances& tol = {});

// M of order deg g whose leading deg f block is exactly diag(roots of f).
// Requires p = deg g - deg f >= 1 and f (p,0)-interlacing g.
BorderedRealization realize_bordered(const RootedPoly& f, const RootedPoly& g,
                                     const BuildTolerances& tol = {});

} // namespace weylforge

#endif
