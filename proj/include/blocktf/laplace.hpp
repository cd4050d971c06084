#ifndef BLOCKTF_LAPLACE_HPP
#define BLOCKTF_LAPLACE_HPP

#include <complex>
#include <string>
#include <vector>

#include "blocktf/ratfunc.hpp"
#include "blocktf/signal.hpp"

namespace blocktf {

struct SDomainTerm {
    Rat delay;    // >= 0
    RatFunc tf;   // nonzero
};

// F(s) = sum over terms e^{-s*delay} * tf(s). Delays are distinct and
// ascending; zero terms are dropped, so the zero transform is the empty sum.
class SDomainExpr {
  public:
    SDomainExpr() = default;
    explicit SDomainExpr(std::vector<SDomainTerm> terms);

    const std::vector<SDomainTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // the delay-free case collapses to a single rational function
    bool is_rational() const;
    const RatFunc& rational() const;

    bool operator==(const SDomainExpr& o) const;

    SDomainExpr operator+(const SDomainExpr& o) const;
    SDomainExpr scaled(const Rat& k) const;
    SDomainExpr times(const RatFunc& r) const;

    std::complex<double> eval(std::complex<double> s0) const;

    std::string to_string() const;

  private:
    void canonicalize();
    std::vector<SDomainTerm> terms_;
};

// Exact transform by table: L[t^n e^{at}] = n!/(s-a)^{n+1}; oscillatory
// atoms expand the conjugate pair (s-a±iw)^{n+1} binomially into a real
// rational function; delay T contributes the e^{-sT} factor.
SDomainExpr laplace(const Signal& g);

// true iff Re(s0) > a for the emitted exponential-order witness
bool lt_exists(const Signal& g, std::complex<double> s0);

// Horizon making the truncation tail M e^{(a - Re s0) h} / (Re s0 - a) <= tol.
double default_horizon(const Signal& g, std::complex<double> s0, double tol);

// Composite Simpson quadrature of g(t) e^{-s0 t} on [0, horizon] with the
// given number of panels (two subintervals each), split piecewise at the
// atom delay breakpoints so the O(steps^-4) error model holds per segment.
// Throws MathError outside the region of convergence.
std::complex<double> numeric_lt(const Signal& g, std::complex<double> s0, double horizon, unsigned steps);

} // namespace blocktf

#endif
