#include "weylforge/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "weylforge/errors.hpp"
#include "weylforge/interlace.hpp"
#include "weylforge/json_io.hpp"
#include "weylforge/properties.hpp"
#include "weylforge/realize.hpp"
#include "weylforge/verify.hpp"

namespace weylforge::cli {

namespace {

// Tolerance overrides; unset values fall back to module defaults.
struct Config {
    std::optional<double> eq_tol;
    std::optional<double> zero_tol;
    std::optional<double> spectrum_tol;
    std::optional<double> decomp_tol;
    std::optional<double> match_tol;
    std::optional<double> align_tol;
    std::optional<std::uint64_t> seed;
    std::string out;

    TolProfile profile() const
    {
        TolProfile t;
        t.eq_tol = eq_tol.value_or(t.eq_tol);
        t.zero_tol = zero_tol.value_or(t.zero_tol);
        t.spectrum_tol = spectrum_tol.value_or(t.spectrum_tol);
        t.decomp_tol = decomp_tol.value_or(t.decomp_tol);
        return t;
    }

    BuildTolerances build() const
    {
        BuildTolerances b;
        b.eq_tol = eq_tol.value_or(b.eq_tol);
        b.match_tol = match_tol.value_or(b.match_tol);
        b.align_tol = align_tol.value_or(b.align_tol);
        return b;
    }

    std::uint64_t resolved_seed() const
    {
        if (seed)
            return *seed;
        if (const char* env = std::getenv("WEYL_FORGE_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw ValidationError("WEYL_FORGE_SEED is not an unsigned integer");
            }
        }
        return 0;
    }

    std::string out_or(const char* fallback) const { return out.empty() ? fallback : out; }
};

struct PairArgs {
    std::string f_path;
    std::string g_path;
    int p = 0;
    int q = 0;
};

void add_pair_files(CLI::App* cmd, PairArgs& a)
{
    cmd->add_option("F", a.f_path, "polynomial JSON for f")->required();
    cmd->add_option("G", a.g_path, "polynomial JSON for g")->required();
}

void add_pq(CLI::App* cmd, PairArgs& a)
{
    cmd->add_option("--p", a.p, "lower shift p")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--q", a.q, "upper shift q")->required()->check(CLI::NonNegativeNumber);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"weylforge: constructive realizations of (p,q)-interlacing spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--eq-tol", cfg.eq_tol, "root equality tolerance")->check(CLI::PositiveNumber);
    app.add_option("--zero-tol", cfg.zero_tol, "inertia zero threshold")->check(CLI::PositiveNumber);
    app.add_option("--spectrum-tol", cfg.spectrum_tol, "spectrum check tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--decomp-tol", cfg.decomp_tol, "decomposition check tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--match-tol", cfg.match_tol, "alignment spectrum match tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--align-tol", cfg.align_tol, "alignment residual tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--out", cfg.out, "output file");

    PairArgs pair;
    int s = 0, t = 0, d = 0;
    bool force = false;

    auto* check = app.add_subcommand("check", "test (p,q)-interlacing and print a report");
    add_pair_files(check, pair);
    add_pq(check, pair);

    auto* minimal = app.add_subcommand("minimal", "print the least (p,q)");
    add_pair_files(minimal, pair);

    auto* split_cmd = app.add_subcommand("split", "write an intermediate polynomial h");
    add_pair_files(split_cmd, pair);
    add_pq(split_cmd, pair);
    split_cmd->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
    split_cmd->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    split_cmd->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);

    auto* realize = app.add_subcommand("realize", "write a verified (A, B) realization");
    add_pair_files(realize, pair);
    add_pq(realize, pair);
    realize->add_flag("--force", force, "write the certificate even if verification fails");

    auto* border = app.add_subcommand("border", "write a verified bordered realization");
    add_pair_files(border, pair);
    border->add_flag("--force", force, "write the certificate even if verification fails");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "verify a realization or bordered certificate");
    verify->add_option("CERT", cert_path, "certificate JSON")->required();

    int n = 0;
    double min_gap = kDefaultMinGap;
    auto* gen = app.add_subcommand("gen", "write a seeded (p,q)-interlacing pair");
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", pair.p)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--q", pair.q)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--min-gap", min_gap)->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", cfg.seed, "seed (falls back to WEYL_FORGE_SEED, then 0)");

    std::size_t count = 200;
    auto* selftest = app.add_subcommand("selftest", "run the randomized property suite");
    selftest->add_option("--count", count, "instances per property")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", cfg.seed, "seed (falls back to WEYL_FORGE_SEED, then 0)");

    std::vector<std::string> argv_store{"weylforge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::pass : ExitCode::input_error;
    }

    try {
        auto load_pair = [&] {
            return std::pair{poly_from_json(read_json_file(pair.f_path)),
                             poly_from_json(read_json_file(pair.g_path))};
        };

        if (check->parsed()) {
            const auto [f, g] = load_pair();
            const InterlaceReport rep = interlace_report(f, g, pair.p, pair.q);
            print(out, to_json_value(rep));
            return rep.holds ? ExitCode::pass : ExitCode::negative;
        }
        if (minimal->parsed()) {
            const auto [f, g] = load_pair();
            const PQ m = minimal_pq(f, g);
            print(out, json{{"p", m.p}, {"q", m.q}});
            return ExitCode::pass;
        }
        if (split_cmd->parsed()) {
            const auto [f, g] = load_pair();
            const RootedPoly h = weylforge::split(f, g, pair.p, pair.q, s, t, d);
            write_json_file(cfg.out_or("h.json"), to_json_value(h));
            return ExitCode::pass;
        }
        if (realize->parsed()) {
            const auto [f, g] = load_pair();
            const Realization r = realize_weyl_converse(f, g, pair.p, pair.q, cfg.build());
            const VerifyReport rep = check_realization(r, cfg.profile());
            if (!rep.passed && !force) {
                err << "realization failed verification; not written\n";
                print(err, to_json_value(rep));
                return ExitCode::numerical_failure;
            }
            write_json_file(cfg.out_or("realization.json"), to_json_value(r));
            print(out, to_json_value(rep));
            return rep.passed ? ExitCode::pass : ExitCode::numerical_failure;
        }
        if (border->parsed()) {
            const auto [f, g] = load_pair();
            const BorderedRealization b = realize_bordered(f, g, cfg.build());
            const VerifyReport rep = check_bordered(b, cfg.profile());
            if (!rep.passed && !force) {
                err << "bordered realization failed verification; not written\n";
                print(err, to_json_value(rep));
                return ExitCode::numerical_failure;
            }
            write_json_file(cfg.out_or("bordered.json"), to_json_value(b));
            print(out, to_json_value(rep));
            return rep.passed ? ExitCode::pass : ExitCode::numerical_failure;
        }
        if (verify->parsed()) {
            const json cert = read_json_file(cert_path);
            const VerifyReport rep = cert.contains("M")
                                         ? check_bordered(bordered_from_json(cert), cfg.profile())
                                         : check_realization(realization_from_json(cert),
                                                             cfg.profile());
            print(out, to_json_value(rep));
            return rep.passed ? ExitCode::pass : ExitCode::negative;
        }
        if (gen->parsed()) {
            const std::uint64_t seed = cfg.resolved_seed();
            const PolyPair gp = gen_pq_pair(n, pair.p, pair.q, min_gap, seed);
            write_json_file(cfg.out_or("pair.json"),
                            json{{"f", to_json_value(gp.f)},
                                 {"g", to_json_value(gp.g)},
                                 {"n", n},
                                 {"p", pair.p},
                                 {"q", pair.q},
                                 {"seed", seed},
                                 {"min_gap", min_gap}});
            return ExitCode::pass;
        }
        if (selftest->parsed()) {
            bool all = true;
            for (const auto& r : properties::run_all(count, cfg.resolved_seed())) {
                out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.instances
                    << " instances, " << r.failures << " failures)";
                if (!r.passed())
                    out << ": " << r.first_failure;
                out << '\n';
                all = all && r.passed();
            }
            return all ? ExitCode::pass : ExitCode::negative;
        }
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return ExitCode::numerical_failure;
    } catch (const ValidationError& e) {
        err << "input error: " << e.what() << '\n';
        return ExitCode::input_error;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
        return ExitCode::input_error;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return ExitCode::input_error;
    }
    return ExitCode::input_error;
}

} // namespace weylforge::cli
