#include "blocktf/ratfunc.hpp"

#include <cfloat>
#include <cmath>

namespace blocktf {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    Rat lead = den_.lead();
    num_ = num_.scaled(Rat(1) / lead);
    den_ = den_.scaled(Rat(1) / lead);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-reduce before multiplying to keep the final gcd trivial
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? Poly::div_exact(num_, g1) : num_;
    Poly d2 = g1.degree() > 0 ? Poly::div_exact(o.den_, g1) : o.den_;
    Poly n2 = g2.degree() > 0 ? Poly::div_exact(o.num_, g2) : o.num_;
    Poly d1 = g2.degree() > 0 ? Poly::div_exact(den_, g2) : den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw MathError("division by the zero rational function");
    return *this * RatFunc(o.den_, o.num_);
}

std::complex<double> RatFunc::eval(std::complex<double> s0, double tau_eval) const {
    std::complex<double> d = den_.eval(s0);
    double scale = den_.eval_magnitude_bound(s0);
    if (std::abs(d) <= tau_eval * std::max(scale, DBL_MIN))
        throw MathError("evaluation at or near a pole of " + to_string());
    return num_.eval(s0) / d;
}

std::string RatFunc::to_string() const {
    auto coeff_list = [](const Poly& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (i) out += ",";
            out += rat_to_string(p.coeffs()[i]);
        }
        return out;
    };
    return "tf(" + coeff_list(num_) + ";" + coeff_list(den_) + ")";
}

RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw Error("unreachable arith op");
}

} // namespace blocktf
