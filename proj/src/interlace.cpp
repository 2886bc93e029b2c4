#include "weylforge/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weylforge/errors.hpp"

namespace weylforge {

namespace {

void require_nonnegative(int v, const char* what)
{
    if (v < 0)
        throw ValidationError(std::string(what) + " must be nonnegative");
}

long span_end(const RootedPoly& f, const RootedPoly& g, int p, int q)
{
    return static_cast<long>(std::max(f.degree(), g.degree())) + std::max(p, q);
}

// r_{i+p}(g) <= r_i(f) + slack
bool lower_ok(const RootedPoly& f, const RootedPoly& g, long i, int p, double slack)
{
    return g.root_at(i + p) <= f.root_at(i) + slack;
}

// r_i(f) <= r_{i-q}(g) + slack
bool upper_ok(const RootedPoly& f, const RootedPoly& g, long i, int q, double slack)
{
    return f.root_at(i) <= g.root_at(i - q) + slack;
}

bool lower_family_holds(const RootedPoly& f, const RootedPoly& g, int p, double slack)
{
    for (long i = 1 - p; i <= span_end(f, g, p, 0); ++i)
        if (!lower_ok(f, g, i, p, slack))
            return false;
    return true;
}

bool upper_family_holds(const RootedPoly& f, const RootedPoly& g, int q, double slack)
{
    for (long i = 1 - q; i <= span_end(f, g, 0, q); ++i)
        if (!upper_ok(f, g, i, q, slack))
            return false;
    return true;
}

// x <=_r y: y - x componentwise nonnegative with at least r positive entries.
bool dominated_with_strict(std::span<const double> x, std::span<const double> y,
                           int r)
{
    int positive = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = y[k] - x[k];
        if (d < 0.0)
            return false;
        if (d > 0.0)
            ++positive;
    }
    return positive >= r;
}

} // namespace

bool is_pq_interlacing(const RootedPoly& f, const RootedPoly& g, int p, int q,
                       double slack)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    const int m = std::max(p, q);
    for (long i = 1 - m; i <= span_end(f, g, p, q); ++i)
        if (!lower_ok(f, g, i, p, slack) || !upper_ok(f, g, i, q, slack))
            return false;
    return true;
}

InterlaceReport interlace_report(const RootedPoly& f, const RootedPoly& g,
                                 int p, int q, double slack)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    InterlaceReport report;
    const int m = std::max(p, q);
    for (long i = 1 - m; i <= span_end(f, g, p, q); ++i) {
        if (!lower_ok(f, g, i, p, slack))
            report.violations.push_back({i, Side::lower, f.root_at(i) - g.root_at(i + p)});
        if (!upper_ok(f, g, i, q, slack))
            report.violations.push_back({i, Side::upper, g.root_at(i - q) - f.root_at(i)});
    }
    report.holds = report.violations.empty();
    const PQ minimal = minimal_pq(f, g);
    report.minimal_p = minimal.p;
    report.minimal_q = minimal.q;
    return report;
}

PQ minimal_pq(const RootedPoly& f, const RootedPoly& g)
{
    // p = deg g always satisfies the lower family and q = deg f the upper one.
    PQ out;
    while (!lower_family_holds(f, g, out.p, 0.0))
        ++out.p;
    while (!upper_family_holds(f, g, out.q, 0.0))
        ++out.q;
    return out;
}

bool root_count_criterion(const RootedPoly& f, const RootedPoly& g, int p, int q)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    auto within = [&](double r) {
        const long diff = static_cast<long>(root_count_geq(f, r)) -
                          static_cast<long>(root_count_geq(g, r));
        return -p <= diff && diff <= q;
    };
    for (double r : f.roots())
        if (!within(r))
            return false;
    for (double r : g.roots())
        if (!within(r))
            return false;
    return true;
}

RootedPoly split(const RootedPoly& f, const RootedPoly& g, int p, int q,
                 int s, int t, int d)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    if (s < 0 || s > p)
        throw DomainError("split: s must lie in [0, p]");
    if (t < 0 || t > q)
        throw DomainError("split: t must lie in [0, q]");
    if (!is_pq_interlacing(f, g, p, q))
        throw DomainError("split: f does not (" + std::to_string(p) + "," +
                          std::to_string(q) + ")-interlace g");

    const long deg_f = static_cast<long>(f.degree());
    const long deg_g = static_cast<long>(g.degree());
    const long lo = std::max({deg_f - t, deg_g - p + s, 0L});
    const long hi = std::min(deg_f + s, deg_g + q - t);
    if (d < lo)
        throw DomainError("split: d = " + std::to_string(d) +
                          " is below the lower degree bound " + std::to_string(lo));
    if (d > hi)
        throw DomainError("split: d = " + std::to_string(d) +
                          " is above the upper degree bound " + std::to_string(hi));

    double top = 0.0;
    bool any = false;
    for (const RootedPoly* poly : {&f, &g}) {
        if (poly->degree() > 0) {
            top = any ? std::max(top, poly->largest()) : poly->largest();
            any = true;
        }
    }

    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(d));
    double prev = top + 1.0;
    for (long i = 1; i <= d; ++i) {
        const double a = std::max(f.root_at(i + t), g.root_at(i + p - s));
        const double b = std::min(f.root_at(i - s), g.root_at(i - q + t));
        const double r = std::min(b, prev);
        if (!(r >= a) || !std::isfinite(r))
            throw NumericalError("split: empty root interval at index " + std::to_string(i));
        roots.push_back(r);
        prev = r;
    }
    return RootedPoly(std::move(roots));
}

bool is_strict_pq(const RootedPoly& f, const RootedPoly& g, int p, int q)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    if (f.degree() != g.degree())
        throw DomainError("is_strict_pq: degrees differ");
    const auto n = static_cast<int>(f.degree());
    const auto rf = f.roots();
    const auto rg = g.roots();

    // (r_{q+1}(f), ..., r_n(f)) <=_p (r_1(g), ..., r_{n-q}(g))
    const std::size_t len1 = static_cast<std::size_t>(std::max(n - q, 0));
    const bool first = dominated_with_strict(rf.subspan(rf.size() - len1), rg.first(len1), p);
    // (r_{p+1}(g), ..., r_n(g)) <=_q (r_1(f), ..., r_{n-p}(f))
    const std::size_t len2 = static_cast<std::size_t>(std::max(n - p, 0));
    const bool second = dominated_with_strict(rg.subspan(rg.size() - len2), rf.first(len2), q);
    return first && second;
}

RootedPoly sample_interlacer(const RootedPoly& g, int p, int q, int degree, Rng& rng)
{
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    const int deg_g = static_cast<int>(g.degree());
    if (degree < 0 || degree < deg_g - p || degree > deg_g + q)
        throw DomainError("sample_interlacer: degree outside [deg g - p, deg g + q]");

    const double lower_pad = (deg_g > 0 ? g.smallest() : 0.0) - 1.0;
    const double upper_pad = (deg_g > 0 ? g.largest() : 0.0) + 1.0;
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    double prev = std::numeric_limits<double>::infinity();
    for (long i = 1; i <= degree; ++i) {
        const double lo = std::max(g.root_at(i + p), lower_pad);
        const double hi = std::min({g.root_at(i - q), upper_pad, prev});
        const double r = std::clamp(rng.uniform(lo, hi), lo, hi);
        roots.push_back(r);
        prev = r;
    }
    return RootedPoly(std::move(roots));
}

PolyPair gen_pq_pair(int n, int p, int q, double min_gap, std::uint64_t seed)
{
    if (n < 1)
        throw DomainError("gen_pq_pair: n must be at least 1");
    require_nonnegative(p, "p");
    require_nonnegative(q, "q");
    if (!(min_gap >= 0.0) || !std::isfinite(min_gap))
        throw DomainError("gen_pq_pair: min_gap must be a nonnegative number");
    const double free_width = 10.0 - (n - 1) * min_gap;
    if (free_width < 0.0)
        throw DomainError("gen_pq_pair: min_gap is infeasible for n roots in [-5, 5]");

    Rng rng(seed);
    std::vector<double> base(static_cast<std::size_t>(n));
    for (double& v : base)
        v = rng.uniform(0.0, free_width);
    std::sort(base.begin(), base.end());
    for (std::size_t k = 0; k < base.size(); ++k)
        base[k] = std::min(base[k] + static_cast<double>(k) * min_gap - 5.0, 5.0);

    PolyPair out;
    out.g = RootedPoly(std::move(base));
    out.f = sample_interlacer(out.g, p, q, n, rng);
    return out;
}

} // namespace weylforge
