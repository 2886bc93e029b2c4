#include "weylforge/properties.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "weylforge/interlace.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/realize.hpp"
#include "weylforge/verify.hpp"

namespace weylforge::properties {

namespace {

constexpr int kMaxDegree = 10;
constexpr int kMaxShift = 4;
constexpr double kDerivativeSlack = 1e-10;

struct Instance {
    RootedPoly f;
    RootedPoly g;
    int p = 0;
    int q = 0;
};

std::string describe(const RootedPoly& f)
{
    std::ostringstream s;
    s.precision(17);
    s << '(';
    for (std::size_t i = 0; i < f.degree(); ++i)
        s << (i ? "," : "") << f.roots()[i];
    s << ')';
    return s.str();
}

std::string describe(const Instance& x)
{
    return "f=" + describe(x.f) + " g=" + describe(x.g) + " p=" + std::to_string(x.p) +
           " q=" + std::to_string(x.q);
}

// Like sample_interlacer, but each root lands on an endpoint of its admissible
// interval half of the time, which produces ties with g.
RootedPoly tie_prone_interlacer(const RootedPoly& g, int p, int q, int degree, Rng& rng)
{
    const double lower_pad = (g.degree() ? g.smallest() : 0.0) - 1.0;
    const double upper_pad = (g.degree() ? g.largest() : 0.0) + 1.0;
    std::vector<double> roots;
    double prev = upper_pad;
    for (long i = 1; i <= degree; ++i) {
        const double lo = std::max(g.root_at(i + p), lower_pad);
        const double hi = std::min({g.root_at(i - q), upper_pad, prev});
        double r;
        switch (rng.below(4)) {
        case 0: r = lo; break;
        case 1: r = hi; break;
        default: r = std::clamp(rng.uniform(lo, hi), lo, hi); break;
        }
        roots.push_back(r);
        prev = r;
    }
    return RootedPoly(std::move(roots));
}

// f (p,q)-interlaces g, with deg g in [min_degree, kMaxDegree] and deg f in
// the admissible window clipped to [min_degree, kMaxDegree].
Instance valid_instance(Rng& rng, int min_degree = 0)
{
    Instance x;
    x.p = rng.between(0, kMaxShift);
    x.q = rng.between(0, kMaxShift);
    x.g = random_poly(rng, rng.between(min_degree, kMaxDegree));
    const int deg_g = static_cast<int>(x.g.degree());
    const int lo = std::max(min_degree, deg_g - x.p);
    const int hi = std::min(kMaxDegree, deg_g + x.q);
    x.f = tie_prone_interlacer(x.g, x.p, x.q, rng.between(lo, hi), rng);
    return x;
}

// Mix of valid pairs, valid pairs tested at perturbed (p, q), and
// independent pairs.
Instance mixed_instance(Rng& rng)
{
    switch (rng.below(3)) {
    case 0:
        return valid_instance(rng);
    case 1: {
        Instance x = valid_instance(rng);
        x.p = std::max(0, x.p + rng.between(-2, 1));
        x.q = std::max(0, x.q + rng.between(-2, 1));
        return x;
    }
    default: {
        Instance x;
        x.f = random_poly(rng, rng.between(0, kMaxDegree));
        x.g = random_poly(rng, rng.between(0, kMaxDegree));
        x.p = rng.between(0, kMaxShift);
        x.q = rng.between(0, kMaxShift);
        return x;
    }
    }
}

template <typename Body>
Result run(const char* name, std::size_t count, std::uint64_t seed, Body&& body)
{
    Result result;
    result.name = name;
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        ++result.instances;
        try {
            body(rng, result);
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
    }
    return result;
}

Vector random_vector(Rng& rng, std::size_t n)
{
    Vector v(n);
    for (double& x : v)
        x = rng.uniform(-1.0, 1.0);
    return v;
}

} // namespace

void Result::fail(const std::string& what)
{
    if (failures++ == 0)
        first_failure = what;
}

RootedPoly random_poly(Rng& rng, int degree)
{
    std::vector<double> roots(static_cast<std::size_t>(degree));
    for (double& r : roots)
        r = rng.below(3) == 0 ? static_cast<double>(rng.between(-3, 3)) : rng.uniform(-5.0, 5.0);
    return RootedPoly(std::move(roots));
}

Result equivalence(std::size_t count, std::uint64_t seed)
{
    return run("pq-interlacing <=> root-count criterion", count, seed, [](Rng& rng, Result& r) {
        const Instance x = mixed_instance(rng);
        const bool holds = is_pq_interlacing(x.f, x.g, x.p, x.q);
        r.positives += holds ? 1 : 0;
        if (holds != root_count_criterion(x.f, x.g, x.p, x.q))
            r.fail(describe(x));
    });
}

Result reflexivity(std::size_t count, std::uint64_t seed)
{
    return run("reflexivity", count, seed, [](Rng& rng, Result& r) {
        const RootedPoly f = random_poly(rng, rng.between(0, kMaxDegree));
        const int p = rng.between(0, kMaxShift);
        const int q = rng.between(0, kMaxShift);
        if (!is_pq_interlacing(f, f, p, q))
            r.fail(describe({f, f, p, q}));
    });
}

Result symmetry(std::size_t count, std::uint64_t seed)
{
    return run("symmetry", count, seed, [](Rng& rng, Result& r) {
        const Instance x = mixed_instance(rng);
        if (is_pq_interlacing(x.f, x.g, x.p, x.q) != is_pq_interlacing(x.g, x.f, x.q, x.p))
            r.fail(describe(x));
    });
}

Result transitivity(std::size_t count, std::uint64_t seed)
{
    return run("transitivity", count, seed, [](Rng& rng, Result& r) {
        const RootedPoly g = random_poly(rng, rng.between(0, kMaxDegree));
        const int s = rng.between(0, kMaxShift), t = rng.between(0, kMaxShift);
        const int deg_g = static_cast<int>(g.degree());
        const RootedPoly h = tie_prone_interlacer(
            g, s, t, rng.between(std::max(0, deg_g - s), deg_g + t), rng);
        const int p = rng.between(0, kMaxShift), q = rng.between(0, kMaxShift);
        const int deg_h = static_cast<int>(h.degree());
        const RootedPoly f = tie_prone_interlacer(
            h, p, q, rng.between(std::max(0, deg_h - p), deg_h + q), rng);
        if (!is_pq_interlacing(f, h, p, q) || !is_pq_interlacing(h, g, s, t) ||
            !is_pq_interlacing(f, g, p + s, q + t))
            r.fail(describe({f, g, p + s, q + t}) + " via h=" + describe(h));
    });
}

Result monotonicity(std::size_t count, std::uint64_t seed)
{
    return run("monotonicity", count, seed, [](Rng& rng, Result& r) {
        const Instance x = valid_instance(rng);
        for (int s = x.p; s <= x.p + 3; ++s)
            for (int t = x.q; t <= x.q + 3; ++t)
                if (!is_pq_interlacing(x.f, x.g, s, t)) {
                    r.fail(describe(x) + " fails at (" + std::to_string(s) + "," +
                           std::to_string(t) + ")");
                    return;
                }
    });
}

Result degree_bound(std::size_t count, std::uint64_t seed)
{
    return run("degree bound", count, seed, [](Rng& rng, Result& r) {
        Instance x = mixed_instance(rng);
        if (!is_pq_interlacing(x.f, x.g, x.p, x.q)) {
            const PQ m = minimal_pq(x.f, x.g);
            x.p = m.p;
            x.q = m.q;
        }
        const long diff = static_cast<long>(x.f.degree()) - static_cast<long>(x.g.degree());
        if (!is_pq_interlacing(x.f, x.g, x.p, x.q) || diff < -x.p || diff > x.q)
            r.fail(describe(x));
    });
}

Result common_factor(std::size_t count, std::uint64_t seed)
{
    return run("common-factor invariance", count, seed, [](Rng& rng, Result& r) {
        const Instance x = mixed_instance(rng);
        const RootedPoly h = random_poly(rng, rng.between(0, 5));
        if (is_pq_interlacing(x.f, x.g, x.p, x.q) !=
            is_pq_interlacing(merge_roots(x.f, h), merge_roots(x.g, h), x.p, x.q))
            r.fail(describe(x) + " h=" + describe(h));
    });
}

Result derivative(std::size_t count, std::uint64_t seed)
{
    return run("derivative preservation", count, seed, [](Rng& rng, Result& r) {
        const Instance x = valid_instance(rng, 1);
        const RootedPoly df = derivative_roots(x.f);
        const RootedPoly dg = derivative_roots(x.g);
        if (!is_pq_interlacing(df, dg, x.p, x.q, kDerivativeSlack))
            r.fail(describe(x));
    });
}

Result split_soundness(std::size_t count, std::uint64_t seed)
{
    return run("split soundness", count, seed, [](Rng& rng, Result& r) {
        const Instance x = valid_instance(rng);
        const int deg_f = static_cast<int>(x.f.degree());
        const int deg_g = static_cast<int>(x.g.degree());
        for (int s = 0; s <= x.p; ++s)
            for (int t = 0; t <= x.q; ++t) {
                const int lo = std::max({deg_f - t, deg_g - x.p + s, 0});
                const int hi = std::min(deg_f + s, deg_g + x.q - t);
                for (int d = lo; d <= hi; ++d) {
                    const RootedPoly h = split(x.f, x.g, x.p, x.q, s, t, d);
                    if (static_cast<int>(h.degree()) != d || !is_pq_interlacing(x.f, h, s, t) ||
                        !is_pq_interlacing(h, x.g, x.p - s, x.q - t)) {
                        r.fail(describe(x) + " s=" + std::to_string(s) + " t=" +
                               std::to_string(t) + " d=" + std::to_string(d));
                        return;
                    }
                }
            }
    });
}

Result compatibility_witness(std::size_t count, std::uint64_t seed)
{
    return run("common interlacer of compatible pairs", count, seed, [](Rng& rng, Result& r) {
        const RootedPoly g = random_poly(rng, rng.between(1, kMaxDegree));
        const int n = static_cast<int>(g.degree());
        const RootedPoly f = tie_prone_interlacer(g, 1, 1, n, rng);
        for (int d : {n - 1, n}) {
            // f (0,1)-interlaces h and h (1,0)-interlaces g
            const RootedPoly h = split(f, g, 1, 1, 0, 1, d);
            if (!is_pq_interlacing(h, f, 1, 0) || !is_pq_interlacing(h, g, 1, 0)) {
                r.fail(describe({f, g, 1, 1}) + " d=" + std::to_string(d));
                return;
            }
        }
    });
}

Result weyl_forward(std::size_t count, std::uint64_t seed)
{
    return run("forward Weyl inequality", count, seed, [](Rng& rng, Result& r) {
        const int n = rng.between(1, kMaxDegree);
        const int p = rng.between(0, std::min(kMaxShift, n));
        const int q = rng.between(0, std::min(kMaxShift, n - p));
        const auto size = static_cast<std::size_t>(n);
        SymMatrix a(size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i; j < size; ++j)
                a.set(i, j, rng.uniform(-3.0, 3.0));
        SymMatrix b = a;
        for (int k = 0; k < p; ++k)
            b = add_outer(b, random_vector(rng, size), +1);
        for (int k = 0; k < q; ++k)
            b = add_outer(b, random_vector(rng, size), -1);
        const WeylForward w = check_weyl_forward(a, b);
        if (!w.report.passed || w.pq.p > p || w.pq.q > q)
            r.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" +
                   std::to_string(q));
    });
}

Result weyl_converse(std::size_t count, std::uint64_t seed)
{
    return run("converse Weyl realization", count, seed, [](Rng& rng, Result& r) {
        Instance x;
        const int n = rng.between(2, kMaxDegree);
        x.p = rng.between(0, kMaxShift);
        x.q = rng.between(0, kMaxShift);
        auto pair = gen_pq_pair(n, x.p, x.q, kDefaultMinGap, rng.next());
        x.f = std::move(pair.f);
        x.g = std::move(pair.g);
        const Realization real = realize_weyl_converse(x.f, x.g, x.p, x.q);
        const VerifyReport rep = check_realization(real);
        for (const Check& c : rep.checks)
            if (c.name == check_name::spectrum_a || c.name == check_name::spectrum_b)
                r.max_residual = std::max(r.max_residual, c.residual);
        if (!rep.passed)
            r.fail(describe(x));
    });
}

Result bordered(std::size_t count, std::uint64_t seed)
{
    return run("bordered realization", count, seed, [](Rng& rng, Result& r) {
        const int p = rng.between(1, 4);
        const int n = rng.between(p, 8);
        const RootedPoly g = gen_pq_pair(n, 0, 0, kDefaultMinGap, rng.next()).g;
        const RootedPoly f = tie_prone_interlacer(g, p, 0, n - p, rng);
        const BorderedRealization b = realize_bordered(f, g);
        const VerifyReport rep = check_bordered(b);
        if (const Check* c = rep.find(check_name::full_spectrum))
            r.max_residual = std::max(r.max_residual, c->residual);
        if (!rep.passed)
            r.fail(describe({f, g, p, 0}));
    });
}

std::vector<Result> run_all(std::size_t count, std::uint64_t seed)
{
    return {equivalence(count, seed),         reflexivity(count, seed + 1),
            symmetry(count, seed + 2),        transitivity(count, seed + 3),
            monotonicity(count, seed + 4),    degree_bound(count, seed + 5),
            common_factor(count, seed + 6),   derivative(count, seed + 7),
            split_soundness(count, seed + 8), compatibility_witness(count, seed + 9),
            weyl_forward(count, seed + 10),   weyl_converse(count, seed + 11),
            bordered(count, seed + 12)};
}

} // namespace weylforge::properties
