// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weylforge/interlace.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/properties.hpp"
#include "weylforge/random.hpp"
#include "weylforge/realize.hpp"
#include "weylforge/verify.hpp"

using namespace weylforge;

namespace {

constexpr double kSpectrumTol = 1e-6;
constexpr double kDecompTol = 1e-9;
constexpr double kWorkedTol = 1e-12;
constexpr double kBorderTol = 1e-10;
constexpr double kTimeBudgetSeconds = 30.0;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

// Eigenvalues in non-increasing order from Eigen's solver.
std::vector<double> oracle_eigenvalues(const SymMatrix& m)
{
    const std::size_t n = m.order();
    if (n == 0)
        return {};
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.rbegin(), out.rend());
    return out;
}

double residual_of(const VerifyReport& r, std::string_view name)
{
    const Check* c = r.find(name);
    return c ? c->residual : INFINITY;
}

std::vector<std::string> failed_checks(const VerifyReport& r)
{
    std::vector<std::string> out;
    for (const Check& c : r.checks)
        if (!c.passed)
            out.push_back(c.name);
    return out;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ",") + x;
    return "[" + s + "]";
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome property_outcome(const properties::Result& r)
{
    Outcome o;
    if (!r.passed())
        o.fail(r.name + ": " + std::to_string(r.failures) + "/" + std::to_string(r.instances) +
               " failed, first: " + r.first_failure);
    o.detail = o.passed ? r.name + " " + std::to_string(r.instances) + " ok" : o.detail;
    return o;
}

Outcome merge(const std::vector<properties::Result>& results)
{
    Outcome o;
    std::string names;
    for (const auto& r : results) {
        if (!r.passed())
            o.fail(property_outcome(r).detail);
        names += (names.empty() ? "" : ", ") + r.name + " " + std::to_string(r.instances);
    }
    if (o.passed)
        o.detail = names;
    return o;
}

// 1. Random converse realizations verify at full rate.
Outcome random_realizations()
{
    Outcome o;
    Rng rng(20260101);
    double worst_spectrum = 0.0, worst_decomp = 0.0, worst_oracle = 0.0;
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < 500; ++k) {
        const int n = rng.between(2, 10);
        const int p = rng.between(0, 4);
        const int q = rng.between(0, 4);
        const PolyPair pair = gen_pq_pair(n, p, q, kDefaultMinGap, rng.next());
        std::ostringstream tag;
        tag << "instance " << k << " (n=" << n << " p=" << p << " q=" << q << ")";
        try {
            const Realization r = realize_weyl_converse(pair.f, pair.g, p, q);
            const VerifyReport rep = check_realization(r, p, q);
            if (!rep.passed) {
                o.fail(tag.str() + " failed " + join(failed_checks(rep)));
                continue;
            }
            worst_spectrum = std::max({worst_spectrum, residual_of(rep, check_name::spectrum_a),
                                       residual_of(rep, check_name::spectrum_b)});
            worst_decomp = std::max(worst_decomp, residual_of(rep, check_name::decomposition));
            worst_oracle = std::max({worst_oracle,
                                     spectrum_residual(oracle_eigenvalues(r.A), pair.f),
                                     spectrum_residual(oracle_eigenvalues(r.B), pair.g)});
        } catch (const std::exception& e) {
            o.fail(tag.str() + " threw: " + e.what());
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (worst_spectrum > kSpectrumTol || worst_oracle > kSpectrumTol)
        o.fail("spectrum residual " + fmt(std::max(worst_spectrum, worst_oracle)));
    if (worst_decomp > kDecompTol)
        o.fail("decomposition residual " + fmt(worst_decomp));
    if (seconds > kTimeBudgetSeconds)
        o.fail("took " + fmt(seconds) + " s");
    if (o.passed)
        o.detail = "500/500 verified; spectrum " + fmt(worst_spectrum) + ", oracle " +
                   fmt(worst_oracle) + ", decomposition " + fmt(worst_decomp) + ", " +
                   fmt(seconds) + " s";
    return o;
}

// 2. Rank-one worked example: f = (1,-1), g = (2,0).
Outcome worked_example()
{
    Outcome o;
    const RootedPoly f = make_poly({1, -1});
    const RootedPoly g = make_poly({2, 0});
    const Realization r = realize_weyl_converse(f, g, 1, 0);
    if (!(r.A == SymMatrix::diagonal(std::vector<double>{1, -1})))
        o.fail("A is not diag(1,-1)");
    if (r.plus.size() != 1 || !r.minus.empty()) {
        o.fail("expected exactly one plus vector");
        return o;
    }
    const Vector& a = r.plus[0];
    const double expected[3] = {0.5, std::sqrt(0.75), 1.5};
    const double got[3] = {a[0] * a[0], std::abs(a[0] * a[1]), a[1] * a[1]};
    for (int i = 0; i < 3; ++i)
        if (std::abs(got[i] - expected[i]) > kWorkedTol)
            o.fail("outer product entry " + std::to_string(i) + " = " + fmt(got[i]));
    for (const auto& ev : {eigenvalues(r.B), oracle_eigenvalues(r.B)})
        if (std::abs(ev[0] - 2.0) > kWorkedTol || std::abs(ev[1]) > kWorkedTol)
            o.fail("eigenvalues " + fmt(ev[0]) + ", " + fmt(ev[1]));
    if (!check_realization(r).passed)
        o.fail("certificate does not verify");
    if (o.passed)
        o.detail = "alpha alpha^T = [[0.5, sqrt(0.75)], [sqrt(0.75), 1.5]], spectrum (2, 0)";
    return o;
}

// 3. Interlacing definition agrees with the root-count criterion.
Outcome equivalence()
{
    const properties::Result r = properties::equivalence(10000, 301);
    Outcome o = property_outcome(r);
    if (r.positives == 0 || r.positives == r.instances)
        o.fail("sample is one-sided: " + std::to_string(r.positives) + " positives");
    if (o.passed)
        o.detail += " (" + std::to_string(r.positives) + " holding, " +
                    std::to_string(r.instances - r.positives) + " violating)";
    return o;
}

// 4. Calculus properties.
Outcome calculus()
{
    constexpr std::size_t n = 5000;
    return merge({properties::reflexivity(n, 401), properties::symmetry(n, 402),
                  properties::transitivity(n, 403), properties::monotonicity(n, 404),
                  properties::degree_bound(n, 405), properties::common_factor(n, 406),
                  properties::derivative(n, 407)});
}

// 5. Split soundness.
Outcome split_soundness()
{
    return property_outcome(properties::split_soundness(1000, 501));
}

// 6. Bordered construction.
Outcome bordered()
{
    Outcome o;
    const properties::Result r = properties::bordered(200, 601);
    if (!r.passed())
        o.fail(property_outcome(r).detail);

    // explicit bit-exactness over a separate sample with n <= 8, p in [1, 4]
    Rng rng(602);
    for (int k = 0; k < 200; ++k) {
        const int p = rng.between(1, 4);
        const int n = rng.between(p, 8);
        const RootedPoly g = properties::random_poly(rng, n);
        const RootedPoly f = sample_interlacer(g, p, 0, n - p, rng);
        try {
            const BorderedRealization b = realize_bordered(f, g);
            const std::size_t m = f.degree();
            const SymMatrix lead = b.M.leading_block(m);
            const std::vector<double> d(f.roots().begin(), f.roots().end());
            if (!(lead == SymMatrix::diagonal(d)))
                o.fail("leading block not bit-exact at instance " + std::to_string(k));
            const VerifyReport rep = check_bordered(b);
            if (!rep.passed)
                o.fail("instance " + std::to_string(k) + " failed " + join(failed_checks(rep)));
        } catch (const std::exception& e) {
            o.fail("instance " + std::to_string(k) + " threw: " + e.what());
        }
    }

    const BorderStep step = realize_border_step(make_poly({1, -1}), make_poly({2, 0, -2}));
    SymMatrix m(3);
    m.set(0, 0, 1.0);
    m.set(1, 1, -1.0);
    m.set(0, 2, step.alpha[0]);
    m.set(1, 2, step.alpha[1]);
    m.set(2, 2, step.corner);
    for (const auto& ev : {eigenvalues(m), oracle_eigenvalues(m)})
        if (std::abs(ev[0] - 2.0) > kBorderTol || std::abs(ev[1]) > kBorderTol ||
            std::abs(ev[2] + 2.0) > kBorderTol)
            o.fail("border step spectrum " + fmt(ev[0]) + ", " + fmt(ev[1]) + ", " + fmt(ev[2]));
    if (o.passed)
        o.detail = "400 bordered instances verified, leading blocks bit-exact; "
                   "border step spectrum (2, 0, -2)";
    return o;
}

// 7. Forward Weyl.
Outcome weyl_forward()
{
    return property_outcome(properties::weyl_forward(1000, 701));
}

// 8. Degenerate inputs.
Outcome degenerate()
{
    Outcome o;
    int cases = 0;
    auto realize_and_check = [&](const RootedPoly& f, const RootedPoly& g, int p, int q,
                                 const std::string& label) {
        ++cases;
        try {
            const Realization r = realize_weyl_converse(f, g, p, q);
            const VerifyReport rep = check_realization(r, p, q);
            if (!rep.passed)
                o.fail(label + " failed " + join(failed_checks(rep)));
            return r;
        } catch (const std::exception& e) {
            o.fail(label + " threw: " + e.what());
            return Realization{};
        }
    };
    auto all_zero = [](const Realization& r) {
        for (const auto* side : {&r.plus, &r.minus})
            for (const Vector& v : *side)
                for (double x : v)
                    if (x != 0.0)
                        return false;
        return true;
    };

    // f = g: only zero (or no) vectors
    for (const RootedPoly& f : {make_poly({1}), make_poly({1, 1, 0, -2}), make_poly({3, 3, 3})}) {
        for (const PQ pq : {PQ{0, 0}, PQ{1, 2}, PQ{5, 5}}) {
            const Realization r = realize_weyl_converse(f, f, pq.p, pq.q);
            ++cases;
            if (!check_realization(r, pq.p, pq.q).passed || !all_zero(r) || !(r.A == r.B))
                o.fail("f = g case did not yield zero vectors");
        }
        for (int p = 1; p <= 3; ++p) {
            ++cases;
            if (!all_zero(realize_p0(f, f, p)))
                o.fail("realize_p0(f, f) produced a nonzero vector");
        }
    }

    // repeated roots up to full multiplicity, realized at the minimal (p, q)
    // and at an enlarged pair that exceeds the degree
    const std::vector<std::pair<RootedPoly, RootedPoly>> pairs = {
        {make_poly({2, 2, 2, 2}), make_poly({3, 3, 3, 3})},
        {make_poly({1, 1, 1, 1, 1}), make_poly({3, 1, 1, 1, -1})},
        {make_poly({0, 0, 0}), make_poly({1, 0, -1})},
        {make_poly({2, 1, 1, 0}), make_poly({1, 1, 1, 1})},
        {make_poly({4, 4, -4, -4}), make_poly({-4, -4, -4, -4})},
        {make_poly({1, 0}), make_poly({5, -5})},
    };
    for (const auto& [f, g] : pairs) {
        const PQ m = minimal_pq(f, g);
        const std::string label = "pair (" + std::to_string(f.degree()) + ") at (" +
                                  std::to_string(m.p) + "," + std::to_string(m.q) + ")";
        realize_and_check(f, g, m.p, m.q, label);
        realize_and_check(f, g, m.p + 2, m.q + 3, label + " enlarged");
        const int n = static_cast<int>(f.degree());
        realize_and_check(f, g, n + 1, n + 1, label + " p+q>n");
    }

    // q = 0 and p = 0 edges on random pairs
    for (int k = 0; k < 20; ++k) {
        const PolyPair a = gen_pq_pair(2 + k % 6, 1 + k % 3, 0, kDefaultMinGap, 800 + k);
        realize_and_check(a.f, a.g, 1 + k % 3, 0, "q=0 edge " + std::to_string(k));
        const PolyPair b = gen_pq_pair(2 + k % 6, 0, 1 + k % 3, kDefaultMinGap, 900 + k);
        realize_and_check(b.f, b.g, 0, 1 + k % 3, "p=0 edge " + std::to_string(k));
    }

    // bordered with repeated roots
    ++cases;
    try {
        const BorderedRealization b = realize_bordered(make_poly({1, 1}), make_poly({1, 1, 1, 1}));
        if (!check_bordered(b).passed)
            o.fail("bordered repeated-root case failed");
    } catch (const std::exception& e) {
        o.fail(std::string("bordered repeated-root case threw: ") + e.what());
    }

    if (o.passed)
        o.detail = std::to_string(cases) + " degenerate cases verified";
    return o;
}

// 9. Each canonical corruption flips exactly its targeted check.
Outcome fault_injection()
{
    Outcome o;
    const PolyPair pair = gen_pq_pair(6, 2, 2, kDefaultMinGap, 1234);
    const Realization base = realize_weyl_converse(pair.f, pair.g, 2, 2);
    const BorderedRealization bbase =
        realize_bordered(make_poly({1, -1}), make_poly({2, 1, -1, -2}));
    if (!check_realization(base).passed || !check_bordered(bbase).passed) {
        o.fail("baseline certificates do not verify");
        return o;
    }

    auto shifted = [](const RootedPoly& f) {
        std::vector<double> roots(f.roots().begin(), f.roots().end());
        roots[0] += 0.1;
        return RootedPoly(roots);
    };
    auto expect = [&](const std::vector<std::string>& got, const std::string& want,
                      const std::string& label) {
        if (got != std::vector<std::string>{want})
            o.fail(label + ": failed " + join(got) + ", expected [" + want + "]");
    };

    Realization r = base;
    r.f = shifted(r.f);
    expect(failed_checks(check_realization(r)), "spectrum_A", "root of f shifted by 0.1");

    r = base;
    r.g = shifted(r.g);
    expect(failed_checks(check_realization(r)), "spectrum_B", "root of g shifted by 0.1");

    r = base;
    const auto nonzero = std::find_if(r.plus.begin(), r.plus.end(), [](const Vector& v) {
        return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
    });
    if (nonzero == r.plus.end()) {
        o.fail("baseline has no nonzero plus vector");
    } else {
        r.plus.erase(nonzero);
        expect(failed_checks(check_realization(r)), "decomposition", "plus vector dropped");
    }

    r = base;
    const Inertia in = inertia(r.B - r.A);
    r.p = static_cast<int>(in.n_plus) - 1;
    expect(failed_checks(check_realization(r)), "inertia", "p understated by one");

    BorderedRealization b = bbase;
    const std::size_t last = b.M.order() - 1;
    b.M.set(last, last, b.M(last, last) + 0.1);
    expect(failed_checks(check_bordered(b)), "full_spectrum", "bordered corner shifted by 0.1");

    b = bbase;
    b.M.set(0, 0, b.M(0, 0) + 1e-8);
    expect(failed_checks(check_bordered(b)), "leading_block_exact",
           "leading entry shifted by 1e-8");

    if (o.passed)
        o.detail = "6/6 corruptions each flipped exactly the targeted check";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 random (p,q) realizations verify", random_realizations},
        {"2 rank-one worked example", worked_example},
        {"3 interlacing <=> root-count criterion", equivalence},
        {"4 interlacing calculus properties", calculus},
        {"5 split soundness", split_soundness},
        {"6 bordered construction", bordered},
        {"7 forward Weyl inequalities", weyl_forward},
        {"8 degenerate inputs", degenerate},
        {"9 fault injection", fault_injection},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught exception: ") + e.what());
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s  %s -- %s\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
