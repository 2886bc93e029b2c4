#ifndef WEYLFORGE_POLY_HPP
#define WEYLFORGE_POLY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace weylforge {

inline constexpr double kDefaultEqTol = 1e-9;

//
// A monic real-rooted polynomial stored as its root multiset.
//
// Roots are kept in non-increasing order, r_1 >= r_2 >= ... >= r_n, and are
// always finite. The empty multiset is the constant polynomial 1. The
// sentinels r_i = +inf (i < 1) and r_i = -inf (i > n) are never stored; they
// are produced on demand by root_at().
//
class RootedPoly {
public:
    RootedPoly() = default;

    // Throws ValidationError on a non-finite value.
    explicit RootedPoly(std::vector<double> values);

    std::size_t degree() const noexcept { return roots_.size(); }
    std::span<const double> roots() const noexcept { return roots_; }

    // 1-based root with the +/-inf sentinel convention.
    double root_at(long i) const noexcept;

    // Largest / smallest root; only meaningful for degree >= 1.
    double largest() const { return roots_.front(); }
    double smallest() const { return roots_.back(); }

    friend bool operator==(const RootedPoly&, const RootedPoly&) = default;

private:
    std::vector<double> roots_;
};

RootedPoly make_poly(std::vector<double> values);

// Same as f.root_at(i).
double root_at(const RootedPoly& f, long i) noexcept;

// prod_i (x - r_i); 1 for degree 0.
double eval(const RootedPoly& f, double x);

// Monic coefficients, highest degree first, built from elementary symmetric
// functions of the roots.
std::vector<double> coefficients(const RootedPoly& f);

// Number of roots in the closed ray [r, +inf).
std::size_t root_count_geq(const RootedPoly& f, double r);

// Roots of f'. Repeated roots of multiplicity m contribute m-1 copies; between
// consecutive distinct roots the single simple critical point is located by
// bisection. Throws DomainError for degree 0.
RootedPoly derivative_roots(const RootedPoly& f);

struct CommonSplit {
    RootedPoly common;    // shared factor (values taken from f)
    RootedPoly f_rest;
    RootedPoly g_rest;
};

// Greedy multiset intersection of the two sorted root sequences, pairing
// r and s when |r - s| <= eq_tol.
CommonSplit common_roots(const RootedPoly& f, const RootedPoly& g,
                         double eq_tol = kDefaultEqTol);

// Multiset union (roots of the product f*g).
RootedPoly merge_roots(const RootedPoly& f, const RootedPoly& g);

} // namespace weylforge

#endif
