#include "weylforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weylforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigensolver accuracy allowance added to the forward Weyl inequalities.
constexpr double kWeylEigenSlack = 1e-10;

double root_scale(const RootedPoly& f)
{
    double s = 1.0;
    for (double r : f.roots())
        s = std::max(s, std::abs(r));
    return s;
}

Check spectrum_check(std::string_view name, const SymMatrix& m, const RootedPoly& target,
                     const TolProfile& tol)
{
    const double res = spectrum_residual(eigenvalues(m), target);
    return {std::string(name), res <= tol.spectrum_tol, res, tol.spectrum_tol};
}

// Largest amount by which an interlacing inequality fails (0 if none).
double worst_violation(const RootedPoly& f, const RootedPoly& g, int p, int q)
{
    double worst = 0.0;
    for (const Violation& v : interlace_report(f, g, p, q).violations)
        worst = std::max(worst, -v.slack);
    return worst;
}

VerifyReport shape_failure()
{
    VerifyReport r;
    r.add({std::string(check_name::shape), false, kInf, 0.0});
    return r;
}

} // namespace

void VerifyReport::add(Check c)
{
    passed = passed && c.passed;
    checks.push_back(std::move(c));
}

const Check* VerifyReport::find(std::string_view name) const
{
    for (const Check& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

double spectrum_residual(std::span<const double> eigenvalues, const RootedPoly& roots)
{
    const auto r = roots.roots();
    if (eigenvalues.size() != r.size())
        return kInf;
    std::vector<double> lambda(eigenvalues.begin(), eigenvalues.end());
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    double worst = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        worst = std::max(worst, std::abs(lambda[i] - r[i]));
    return worst / root_scale(roots);
}

WeylForward check_weyl_forward(const SymMatrix& a, const SymMatrix& b, const TolProfile& tol)
{
    WeylForward out;
    if (a.order() != b.order()) {
        out.report = shape_failure();
        return out;
    }
    const Inertia in = inertia(b - a, tol.zero_tol);
    out.pq = {static_cast<int>(in.n_plus), static_cast<int>(in.n_minus)};

    const RootedPoly spec_a(eigenvalues(a));
    const RootedPoly spec_b(eigenvalues(b));
    const double scale = std::max(root_scale(spec_a), root_scale(spec_b));
    const double slack = in.zero_threshold + kWeylEigenSlack * scale;
    const double res = worst_violation(spec_a, spec_b, out.pq.p, out.pq.q);
    out.report.add({std::string(check_name::weyl_forward), res <= slack, res, slack});
    return out;
}

VerifyReport check_realization(const Realization& r, int p, int q, const TolProfile& tol)
{
    const std::size_t n = r.A.order();
    bool well_formed = p >= 0 && q >= 0 && r.B.order() == n && r.f.degree() == n &&
                       r.g.degree() == n;
    for (const auto* set : {&r.plus, &r.minus})
        for (const Vector& v : *set)
            well_formed = well_formed && v.size() == n;
    if (!well_formed)
        return shape_failure();

    VerifyReport report;
    report.add({std::string(check_name::shape), true, 0.0, 0.0});
    report.add(spectrum_check(check_name::spectrum_a, r.A, r.f, tol));
    report.add(spectrum_check(check_name::spectrum_b, r.B, r.g, tol));

    const SymMatrix diff = r.B - r.A;
    const Inertia in = inertia(diff, tol.zero_tol);
    const double excess = std::max({0.0, static_cast<double>(in.n_plus) - p,
                                    static_cast<double>(in.n_minus) - q});
    report.add({std::string(check_name::inertia), excess == 0.0, excess, 0.0});

    SymMatrix rest = diff;
    for (const Vector& v : r.plus)
        rest = add_outer(rest, v, -1);
    for (const Vector& v : r.minus)
        rest = add_outer(rest, v, +1);
    const double decomp = rest.max_abs() / std::max(1.0, diff.frobenius());
    report.add({std::string(check_name::decomposition), decomp <= tol.decomp_tol, decomp,
                tol.decomp_tol});

    for (Check& c : check_weyl_forward(r.A, r.B, tol).report.checks)
        report.add(std::move(c));
    return report;
}

VerifyReport check_realization(const Realization& r, const TolProfile& tol)
{
    return check_realization(r, r.p, r.q, tol);
}

VerifyReport check_bordered(const BorderedRealization& r, const TolProfile& tol)
{
    const int p = r.p();
    const std::size_t k = r.f.degree();
    if (p < 1 || r.M.order() != r.g.degree())
        return shape_failure();

    VerifyReport report;
    report.add({std::string(check_name::shape), true, 0.0, 0.0});
    const SymMatrix lead = r.M.leading_block(k);
    report.add(spectrum_check(check_name::leading_spectrum, lead, r.f, tol));
    report.add(spectrum_check(check_name::full_spectrum, r.M, r.g, tol));

    const double exact = (lead - SymMatrix::diagonal(r.f.roots())).max_abs();
    report.add({std::string(check_name::leading_exact), exact == 0.0, exact, 0.0});

    const RootedPoly spec_m(eigenvalues(r.M));
    const double slack = tol.spectrum_tol * std::max(root_scale(r.f), root_scale(spec_m));
    const double res = worst_violation(r.f, spec_m, p, 0);
    report.add({std::string(check_name::inclusion), res <= slack, res, slack});
    return report;
}

} // namespace weylforge
