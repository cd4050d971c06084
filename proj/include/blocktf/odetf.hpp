#ifndef BLOCKTF_ODETF_HPP
#define BLOCKTF_ODETF_HPP

#include <vector>

#include "blocktf/ratfunc.hpp"

namespace blocktf {

// Constant-coefficient linear ODE
//   sum_i out_coeffs[i] * y^(i)(t) = sum_j in_coeffs[j] * u^(j)(t)
// with nonzero leading output coefficient. Order 0 on either side is an
// algebraic relation and is permitted.
struct LinODE {
    std::vector<Rat> out_coeffs;  // alpha_0 .. alpha_n
    std::vector<Rat> in_coeffs;   // beta_0 .. beta_m

    LinODE(std::vector<Rat> out, std::vector<Rat> in);

    int order() const { return static_cast<int>(out_coeffs.size()) - 1; }
    Poly out_poly() const { return Poly(out_coeffs); }
    Poly in_poly() const { return Poly(in_coeffs); }
};

// H(s) = (sum beta_j s^j) / (sum alpha_i s^i), the unique transfer function
// under zero initial conditions via L[y^(k)] = s^k Y(s). Normalized.
RatFunc transfer_function(const LinODE& ode);

// sum_i alpha_i * y_derivs[i] - sum_j beta_j * u_derivs[j]; zero iff the
// sampled derivative tuple satisfies the ODE at that instant.
// Lengths must be n+1 and m+1.
double residual(const LinODE& ode, const std::vector<double>& y_derivs, const std::vector<double>& u_derivs);

} // namespace blocktf

#endif
