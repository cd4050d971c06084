#ifndef BLOCKTF_RATFUNC_HPP
#define BLOCKTF_RATFUNC_HPP

#include <complex>
#include <string>

#include "blocktf/poly.hpp"

namespace blocktf {

// Reduced rational function in s. Canonical form: gcd(num, den) = 1 and den
// monic, so equality of transfer functions is structural equality. The zero
// function is 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::constant(Rat(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc constant(const Rat& c) { return RatFunc(Poly::constant(c), Poly::constant(Rat(1))); }
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return constant(Rat(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_proper() const { return num_.degree() <= den_.degree(); }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws MathError on zero divisor

    // num(s0)/den(s0) by Horner; throws MathError at (or within tau_eval of)
    // a pole, detected as |den(s0)| <= tau_eval * magnitude scale of den at s0
    std::complex<double> eval(std::complex<double> s0, double tau_eval = 1e-12) const;

    std::string to_string() const;  // exchange syntax tf(num; den)

    static constexpr double default_tau_eval = 1e-12;

  private:
    Poly num_, den_;
    void normalize();
};

// RatFunc's constructor already normalizes, so this is idempotent by
// construction
inline RatFunc normalize(const RatFunc& r) { return RatFunc(r.num(), r.den()); }

enum class ArithOp { add, sub, mul, div };

RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op);

} // namespace blocktf

#endif
