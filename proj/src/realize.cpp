#include "weylforge/realize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "weylforge/errors.hpp"
#include "weylforge/interlace.hpp"

namespace weylforge {

namespace {

constexpr double kClampRelTol = 1e-10;

// g(r_i) / prod_{j != i} (r_i - r_j) over the roots r of f, with the numerator
// and denominator factors interleaved to keep intermediate values near 1.
double residue_ratio(const RootedPoly& g, std::span<const double> f_roots, std::size_t i)
{
    const double r = f_roots[i];
    const auto g_roots = g.roots();
    double ratio = 1.0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < f_roots.size(); ++j) {
        if (j == i)
            continue;
        const double denom = r - f_roots[j];
        if (denom == 0.0)
            throw NumericalError("repeated root left in the coprime part at index " +
                                 std::to_string(i + 1));
        ratio *= (k < g_roots.size() ? r - g_roots[k++] : 1.0) / denom;
    }
    for (; k < g_roots.size(); ++k)
        ratio *= r - g_roots[k];
    return ratio;
}

// Spreads per-root weights of the coprime part f_rest, plus zeros for the
// common roots, onto the non-increasing root order of f.
Vector spread_onto_sorted(const CommonSplit& parts, const Vector& weights)
{
    std::vector<std::pair<double, double>> entries;
    const auto rest = parts.f_rest.roots();
    for (std::size_t i = 0; i < rest.size(); ++i)
        entries.emplace_back(rest[i], weights[i]);
    for (double r : parts.common.roots())
        entries.emplace_back(r, 0.0);
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    Vector out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out[i] = entries[i].second;
    return out;
}

// sqrt of the nonnegative weights sign * ratio_i; entries on the wrong side
// of zero by more than the clamp tolerance mean the interlacing was lost.
Vector border_weights(const CommonSplit& parts, double sign, const char* who)
{
    const auto rest = parts.f_rest.roots();
    Vector w(rest.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        w[i] = sign * residue_ratio(parts.g_rest, rest, i);
        scale = std::max(scale, std::abs(w[i]));
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (w[i] < -kClampRelTol * scale)
            throw NumericalError(std::string(who) + ": weight of wrong sign at index " +
                                     std::to_string(i + 1),
                                 w[i]);
        w[i] = std::sqrt(std::max(0.0, w[i]));
    }
    return w;
}

void require_interlacing(const RootedPoly& f, const RootedPoly& g, int p, int q,
                         const char* who)
{
    if (!is_pq_interlacing(f, g, p, q))
        throw DomainError(std::string(who) + ": f does not (" + std::to_string(p) + "," +
                          std::to_string(q) + ")-interlace g");
}

void require_same_degree(const RootedPoly& f, const RootedPoly& g, const char* who)
{
    if (f.degree() != g.degree())
        throw DomainError(std::string(who) + ": f and g must have the same degree");
}

} // namespace

RankOneUpdate realize_rank_one(const RootedPoly& f, const RootedPoly& g,
                               const BuildTolerances& tol)
{
    require_same_degree(f, g, "realize_rank_one");
    if (f.degree() == 0)
        throw DomainError("realize_rank_one: degree must be at least 1");
    require_interlacing(f, g, 1, 0, "realize_rank_one");

    const CommonSplit parts = common_roots(f, g, tol.eq_tol);
    // g = f + sum_i c_i f/(x - r_i) with c_i = g(r_i) / f_i(r_i) <= 0
    const Vector w = border_weights(parts, -1.0, "realize_rank_one");
    return {SymMatrix::diagonal(f.roots()), spread_onto_sorted(parts, w)};
}

Realization realize_p0(const RootedPoly& f, const RootedPoly& g, int p,
                       const BuildTolerances& tol)
{
    require_same_degree(f, g, "realize_p0");
    require_interlacing(f, g, p, 0, "realize_p0");
    const int n = static_cast<int>(f.degree());

    Realization out{f, g, p, 0, SymMatrix::diagonal(f.roots()), {}, {}, {}};
    SymMatrix current = out.A;
    RootedPoly prev = f;
    for (int k = 1; k <= p && n > 0; ++k) {
        RootedPoly next = split(prev, g, p - k + 1, 0, 1, 0, n);
        const RankOneUpdate step = realize_rank_one(prev, next, tol);
        const Matrix v = align_orthogonal(prev, current, tol.match_tol, tol.align_tol);
        Vector beta = v * std::span<const double>(step.alpha);
        current = add_outer(current, beta, +1);
        out.plus.push_back(std::move(beta));
        prev = std::move(next);
    }
    out.B = std::move(current);
    return out;
}

Realization realize_weyl_converse(const RootedPoly& f, const RootedPoly& g, int p, int q,
                                  const BuildTolerances& tol)
{
    require_same_degree(f, g, "realize_weyl_converse");
    require_interlacing(f, g, p, q, "realize_weyl_converse");

    if (f == g) {
        const SymMatrix a = SymMatrix::diagonal(f.roots());
        return Realization{f, g, p, q, a, a, {}, {}};
    }
    if (q == 0)
        return realize_p0(f, g, p, tol);

    const int n = static_cast<int>(f.degree());
    // f (p,0)-interlaces h and g (q,0)-interlaces h
    const RootedPoly h = split(f, g, p, q, p, 0, n);
    Realization from_f = realize_p0(f, h, p, tol);
    Realization from_g = realize_p0(g, h, q, tol);

    // V carries from_g.B onto from_f.B; both have spectrum h.
    const EigenDecomp target = sym_eigen(from_f.B);
    const EigenDecomp source = sym_eigen(from_g.B);
    const Matrix v = target.vectors * source.vectors.transpose();
    const double residual = (congruence(v, from_g.B) - from_f.B).max_abs();
    if (residual > tol.align_tol * std::max(1.0, from_f.B.max_abs()))
        throw NumericalError("realize_weyl_converse: alignment residual too large", residual);

    Realization out{f, g, p, q, std::move(from_f.A), congruence(v, from_g.A),
                    std::move(from_f.plus), {}};
    out.minus.reserve(from_g.plus.size());
    for (const Vector& up : from_g.plus)
        out.minus.push_back(v * std::span<const double>(up));
    return out;
}

BorderStep realize_border_step(const RootedPoly& f, const RootedPoly& g,
                               const BuildTolerances& tol)
{
    if (g.degree() != f.degree() + 1)
        throw DomainError("realize_border_step: deg g must equal deg f + 1");
    require_interlacing(f, g, 1, 0, "realize_border_step");

    const CommonSplit parts = common_roots(f, g, tol.eq_tol);
    // det(xI - M) = (x - a) f(x) - sum_i alpha_i^2 f(x)/(x - r_i)
    BorderStep out;
    out.alpha = spread_onto_sorted(parts, border_weights(parts, -1.0, "realize_border_step"));
    const auto gr = g.roots();
    const auto fr = f.roots();
    out.corner = std::accumulate(gr.begin(), gr.end(), 0.0) -
                 std::accumulate(fr.begin(), fr.end(), 0.0);
    return out;
}

BorderedRealization realize_bordered(const RootedPoly& f, const RootedPoly& g,
                                     const BuildTolerances& tol)
{
    const int p = static_cast<int>(g.degree()) - static_cast<int>(f.degree());
    if (p < 1)
        throw DomainError("realize_bordered: deg g must exceed deg f");
    require_interlacing(f, g, p, 0, "realize_bordered");

    SymMatrix current = SymMatrix::diagonal(f.roots());
    RootedPoly prev = f;
    for (int k = 1; k <= p; ++k) {
        const int d = static_cast<int>(f.degree()) + k;
        RootedPoly next = split(prev, g, p - k + 1, 0, 1, 0, d);
        const BorderStep step = realize_border_step(prev, next, tol);
        const Matrix v = align_orthogonal(prev, current, tol.match_tol, tol.align_tol);
        const Vector border = v * std::span<const double>(step.alpha);

        const std::size_t m = current.order();
        SymMatrix grown(m + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j)
                grown.set(i, j, current(i, j));
            grown.set(i, m, border[i]);
        }
        grown.set(m, m, step.corner);
        current = std::move(grown);
        prev = std::move(next);
    }
    return {f, g, std::move(current)};
}

} // namespace weylforge
