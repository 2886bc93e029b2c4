#ifndef WEYLFORGE_VERIFY_HPP
#define WEYLFORGE_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "weylforge/interlace.hpp"
#include "weylforge/linalg.hpp"
#include "weylforge/realize.hpp"

namespace weylforge {

// Thresholds used by the checkers. The verifier recomputes everything it
// checks from the certificate's matrices and vectors.
struct TolProfile {
    double eq_tol = kDefaultEqTol;
    double zero_tol = kDefaultZeroTol;
    double spectrum_tol = 1e-6;
    double decomp_tol = 1e-9;
};

struct Check {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double threshold = 0.0;
};

struct VerifyReport {
    bool passed = true;
    std::vector<Check> checks;

    void add(Check c);
    const Check* find(std::string_view name) const;
};

// Check names used in reports.
namespace check_name {
inline constexpr std::string_view shape = "shape";
inline constexpr std::string_view spectrum_a = "spectrum_A";
inline constexpr std::string_view spectrum_b = "spectrum_B";
inline constexpr std::string_view inertia = "inertia";
inline constexpr std::string_view decomposition = "decomposition";
inline constexpr std::string_view weyl_forward = "weyl_forward";
inline constexpr std::string_view leading_spectrum = "leading_spectrum";
inline constexpr std::string_view full_spectrum = "full_spectrum";
inline constexpr std::string_view leading_exact = "leading_block_exact";
inline constexpr std::string_view inclusion = "inclusion_interlacing";
} // namespace check_name

// Max |lambda_i - r_i| / max(1, max |r_i|) over sorted spectra; +inf when the
// lengths differ.
double spectrum_residual(std::span<const double> eigenvalues, const RootedPoly& roots);

// Spectrum of A vs f, spectrum of B vs g, inertia(B - A) within (p, q),
// B - A = sum plus - sum minus, and the forward Weyl check on (A, B).
VerifyReport check_realization(const Realization& r, int p, int q, const TolProfile& tol = {});
VerifyReport check_realization(const Realization& r, const TolProfile& tol = {});

struct WeylForward {
    PQ pq;    // inertia of B - A
    VerifyReport report;
};

// Computes (n_+, n_-) of B - A and checks that spectrum(A) (n_+, n_-)-interlaces
// spectrum(B). Never fails mathematically; a failure means numerical breakdown.
WeylForward check_weyl_forward(const SymMatrix& a, const SymMatrix& b, const TolProfile& tol = {});

// Leading block spectrum vs f, full spectrum vs g, leading block bit-equal to
// diag(roots f), and f (p,0)-interlacing spectrum(M). Certificates with
// deg g <= deg f or an order mismatch fail the shape check only.
VerifyReport check_bordered(const BorderedRealization& r, const TolProfile& tol = {});

} // namespace weylforge

#endif
