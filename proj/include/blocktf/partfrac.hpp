#ifndef BLOCKTF_PARTFRAC_HPP
#define BLOCKTF_PARTFRAC_HPP

#include <complex>
#include <vector>

#include "blocktf/ratfunc.hpp"

namespace blocktf {

struct PoleTerm {
    std::complex<double> pole;
    unsigned multiplicity = 1;
    // residues[j-1] multiplies 1/(s - pole)^j, j = 1..multiplicity
    std::vector<std::complex<double>> residues;
};

struct PartialFractions {
    Poly poly_part;
    std::vector<PoleTerm> terms;
};

// r(s) = poly_part(s) + sum over terms sum_j residues[j-1]/(s-pole)^j.
// Numerical roots of den clustered within merge_tol become one multiple
// pole; repeated-root residues come from the Taylor-series quotient of the
// numerator by the deflated denominator around the pole.
// Requires deg den >= 1; root-finding failures propagate.
PartialFractions partial_fractions(const RatFunc& r, double merge_tol = 1e-7);

// evaluate the decomposition at a point (testing/diagnostic aid)
std::complex<double> eval(const PartialFractions& pf, std::complex<double> s0);

} // namespace blocktf

#endif
