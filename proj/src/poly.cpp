#include "weylforge/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "weylforge/errors.hpp"

namespace weylforge {

namespace {

constexpr int kBisectionMaxIter = 200;
constexpr double kBisectionRelWidth = 1e-13;

struct DistinctRoot {
    double value;
    std::size_t multiplicity;
};

std::vector<DistinctRoot> group_roots(std::span<const double> roots)
{
    std::vector<DistinctRoot> out;
    for (double r : roots) {
        if (!out.empty() && out.back().value == r)
            ++out.back().multiplicity;
        else
            out.push_back({r, 1});
    }
    return out;
}

// f'(x)/f(x) = sum_k m_k / (x - u_k). Strictly decreasing between consecutive
// distinct roots and of the same sign as f'(x)*f(x), so its zero there is the
// critical point of f.
double log_derivative(const std::vector<DistinctRoot>& groups, double x)
{
    double s = 0.0;
    for (const auto& g : groups)
        s += static_cast<double>(g.multiplicity) / (x - g.value);
    return s;
}

double bisect_critical_point(const std::vector<DistinctRoot>& groups,
                             double lo, double hi)
{
    for (int it = 0; it < kBisectionMaxIter; ++it) {
        if (hi - lo <= kBisectionRelWidth * (1.0 + std::max(std::abs(lo), std::abs(hi))))
            break;
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        const double v = log_derivative(groups, mid);
        if (v == 0.0)
            return mid;
        if (v > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo + 0.5 * (hi - lo);
}

} // namespace

RootedPoly::RootedPoly(std::vector<double> values) : roots_(std::move(values))
{
    for (double v : roots_)
        if (!std::isfinite(v))
            throw ValidationError("polynomial root is not finite");
    std::sort(roots_.begin(), roots_.end(), std::greater<>());
}

double RootedPoly::root_at(long i) const noexcept
{
    if (i < 1)
        return std::numeric_limits<double>::infinity();
    if (static_cast<std::size_t>(i) > roots_.size())
        return -std::numeric_limits<double>::infinity();
    return roots_[static_cast<std::size_t>(i) - 1];
}

RootedPoly make_poly(std::vector<double> values)
{
    return RootedPoly(std::move(values));
}

double root_at(const RootedPoly& f, long i) noexcept { return f.root_at(i); }

double eval(const RootedPoly& f, double x)
{
    double y = 1.0;
    for (double r : f.roots())
        y *= (x - r);
    return y;
}

std::vector<double> coefficients(const RootedPoly& f)
{
    // c[k] = (-1)^k e_k(r_1, ..., r_j), updated one root at a time.
    std::vector<double> c{1.0};
    c.reserve(f.degree() + 1);
    for (double r : f.roots()) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k >= 1; --k)
            c[k] -= r * c[k - 1];
    }
    return c;
}

std::size_t root_count_geq(const RootedPoly& f, double r)
{
    const auto roots = f.roots();
    // roots are non-increasing: count the prefix with value >= r
    auto it = std::partition_point(roots.begin(), roots.end(),
                                   [r](double v) { return v >= r; });
    return static_cast<std::size_t>(it - roots.begin());
}

RootedPoly derivative_roots(const RootedPoly& f)
{
    if (f.degree() == 0)
        throw DomainError("derivative_roots: polynomial has degree 0");

    const auto groups = group_roots(f.roots());
    std::vector<double> out;
    out.reserve(f.degree() - 1);
    for (std::size_t j = 0; j < groups.size(); ++j) {
        for (std::size_t m = 1; m < groups[j].multiplicity; ++m)
            out.push_back(groups[j].value);
        if (j + 1 < groups.size())
            out.push_back(bisect_critical_point(groups, groups[j + 1].value,
                                                groups[j].value));
    }
    return RootedPoly(std::move(out));
}

CommonSplit common_roots(const RootedPoly& f, const RootedPoly& g, double eq_tol)
{
    if (!(eq_tol >= 0.0))
        throw ValidationError("common_roots: eq_tol must be nonnegative");

    const auto a = f.roots();
    const auto b = g.roots();
    std::vector<double> common, f_rest, g_rest;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::abs(a[i] - b[j]) <= eq_tol) {
            common.push_back(a[i]);
            ++i;
            ++j;
        } else if (a[i] > b[j]) {
            f_rest.push_back(a[i++]);
        } else {
            g_rest.push_back(b[j++]);
        }
    }
    f_rest.insert(f_rest.end(), a.begin() + static_cast<long>(i), a.end());
    g_rest.insert(g_rest.end(), b.begin() + static_cast<long>(j), b.end());
    return {RootedPoly(std::move(common)), RootedPoly(std::move(f_rest)),
            RootedPoly(std::move(g_rest))};
}

RootedPoly merge_roots(const RootedPoly& f, const RootedPoly& g)
{
    std::vector<double> all(f.roots().begin(), f.roots().end());
    all.insert(all.end(), g.roots().begin(), g.roots().end());
    return RootedPoly(std::move(all));
}

} // namespace weylforge
