#ifndef BLOCKTF_STABILITY_HPP
#define BLOCKTF_STABILITY_HPP

#include <complex>
#include <string>
#include <vector>

#include "blocktf/ratfunc.hpp"

namespace blocktf {

struct RouthResult {
    unsigned sign_changes = 0;  // right-half-plane root count when non-degenerate
    bool degenerate = false;    // zero first-column entry or zero row
};

// Exact-rational Routh array of den (degree >= 1, nonzero lead). Degenerate
// cases are flagged, never patched with the epsilon trick; the verdict then
// defers to numerical poles.
RouthResult routh_hurwitz(const Poly& den);

enum class Classification { stable, marginal, unstable };
enum class VerdictMethod { routh_exact, poles_numeric, both };

struct StabilityVerdict {
    Classification classification = Classification::stable;
    std::vector<std::complex<double>> poles;
    VerdictMethod method = VerdictMethod::poles_numeric;

    std::string to_json() const;  // {"classification": ..., "poles": [[re,im],...], "method": ...}
};

// Pole-location (Hurwitz) verdict: a pole counts as on-axis when
// |Re| <= tol. Computed on the normalized r, so removable pole-zero pairs
// never influence the verdict. Routh is attached when non-degenerate.
StabilityVerdict classify(const RatFunc& r, double tol = 1e-9);

// true iff the Routh sign-change count equals the numerically counted
// right-half-plane roots (Re > tol). Requires a non-degenerate array.
bool cross_check(const Poly& den, double tol = 1e-9);

std::string to_string(Classification c);
std::string to_string(VerdictMethod m);

} // namespace blocktf

#endif
