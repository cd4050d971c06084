#ifndef BLOCKTF_POLY_HPP
#define BLOCKTF_POLY_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "blocktf/rational.hpp"

namespace blocktf {

// Dense univariate polynomial in s with exact rational coefficients,
// ascending degree: coeffs()[i] multiplies s^i. The zero polynomial is the
// empty coefficient sequence; nonzero polynomials carry no trailing zeros.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
    static Poly identity_s();  // the monomial s

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& k) const;

    Poly derivative() const;
    Poly pow(unsigned n) const;

    std::complex<double> eval(std::complex<double> s) const;  // Horner
    Rat eval_exact(const Rat& x) const;
    // sum_i |c_i| * |s|^i, a scale reference for near-zero tests at s
    double eval_magnitude_bound(std::complex<double> s) const;

    // quotient and remainder of exact long division (den nonzero)
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // exact division; throws MathError if the remainder is nonzero
    static Poly div_exact(const Poly& num, const Poly& den);

    // Monic greatest common divisor over Q. Fast path: a mod-p image with
    // gcd of degree 0 certifies coprimality; otherwise the subresultant
    // polynomial remainder sequence on the primitive integer parts.
    static Poly gcd(const Poly& a, const Poly& b);

    // Exact square-free split: pairwise-coprime monic factors with their
    // multiplicities, product over f^m = p.monic(). Root finding on the
    // factors only ever sees simple roots.
    static std::vector<std::pair<Poly, unsigned>> square_free(const Poly& p);

    Poly monic() const;

    // exchange syntax, e.g. poly[2,3,1] for 2 + 3s + s^2
    std::string to_string() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace blocktf

#endif
