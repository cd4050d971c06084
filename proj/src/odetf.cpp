#include "blocktf/odetf.hpp"

#include <stdexcept>

namespace blocktf {

LinODE::LinODE(std::vector<Rat> out, std::vector<Rat> in)
    : out_coeffs(std::move(out)), in_coeffs(std::move(in)) {
    if (out_coeffs.empty()) throw std::invalid_argument("ODE needs at least one output coefficient");
    if (rat_is_zero(out_coeffs.back())) throw std::invalid_argument("leading output coefficient must be nonzero");
}

RatFunc transfer_function(const LinODE& ode) {
    Poly den = ode.out_poly();
    if (den.is_zero()) throw MathError("zero output-side polynomial");
    return RatFunc(ode.in_poly(), den);
}

double residual(const LinODE& ode, const std::vector<double>& y_derivs, const std::vector<double>& u_derivs) {
    if (y_derivs.size() != ode.out_coeffs.size() || u_derivs.size() != ode.in_coeffs.size())
        throw std::invalid_argument("derivative tuple length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < y_derivs.size(); ++i) acc += rat_to_double(ode.out_coeffs[i]) * y_derivs[i];
    for (std::size_t j = 0; j < u_derivs.size(); ++j) acc -= rat_to_double(ode.in_coeffs[j]) * u_derivs[j];
    return acc;
}

} // namespace blocktf
