#ifndef BLOCKTF_ROOTS_HPP
#define BLOCKTF_ROOTS_HPP

#include <complex>
#include <vector>

#include "blocktf/poly.hpp"

namespace blocktf {

// All complex roots counted with multiplicity, via companion-matrix
// eigenvalues (real Schur form, so conjugate pairs are exact) followed by a
// deterministic Newton polish. Each returned root satisfies
// |p(root)| <= tol * ||p||_inf * max(1, |root|)^deg.
// Throws MathError on degree < 1 or eigen-solver non-convergence.
std::vector<std::complex<double>> roots(const Poly& p, double tol = 1e-9);

} // namespace blocktf

#endif
