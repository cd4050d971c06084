#include "blocktf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace blocktf {

void Poly::trim() {
    while (!c_.empty() && rat_is_zero(c_.back())) c_.pop_back();
}

Poly Poly::identity_s() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

const Rat& Poly::lead() const {
    if (c_.empty()) throw MathError("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& k) const {
    if (rat_is_zero(k)) return Poly();
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned n) const {
    Poly result = Poly::constant(Rat(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

std::complex<double> Poly::eval(std::complex<double> s) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + rat_to_double(*it);
    return acc;
}

Rat Poly::eval_exact(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_magnitude_bound(std::complex<double> s) const {
    double mag = std::abs(s);
    double acc = 0.0, p = 1.0;
    for (const Rat& c : c_) {
        acc += std::abs(rat_to_double(c)) * p;
        p *= mag;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw MathError("polynomial division by zero");
    std::vector<Rat> rem = num.c_;
    const int dd = den.degree();
    const int dn = num.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<Rat> quot(static_cast<std::size_t>(dn - dd) + 1, Rat(0));
    for (int k = dn - dd; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + dd)] / den.lead();
        quot[static_cast<std::size_t>(k)] = q;
        if (rat_is_zero(q)) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * den.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(Rat(1) / lead());
}

namespace {

// integer image of a rational polynomial: multiply out the lcm of the
// coefficient denominators, then strip integer content and fix the sign
std::vector<Int> primitive_int(const Poly& p) {
    Int l(1);
    for (const Rat& c : p.coeffs()) l = lcm(l, Int(c.get_den()));
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int content(0);
    for (const Rat& c : p.coeffs()) {
        Int z = Int(c.get_num()) * (l / c.get_den());
        content = gcd(content, z);
        v.push_back(z);
    }
    if (sgn(content) == 0) return v;
    if (sgn(v.back()) < 0) content = -content;
    for (Int& z : v) z /= content;
    return v;
}

unsigned long mod_prime(const Int& z, unsigned long p) {
    unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p);
    return r;
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    long t = 0, newt = 1;
    long r = static_cast<long>(p), newr = static_cast<long>(a % p);
    while (newr != 0) {
        long q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (t < 0) t += static_cast<long>(p);
    return static_cast<unsigned long>(t);
}

// degree of gcd of the mod-p images; returns -1 when p divides a leading
// coefficient (image unusable)
int modp_gcd_degree(const std::vector<Int>& a, const std::vector<Int>& b, unsigned long p) {
    auto image = [&](const std::vector<Int>& v) {
        std::vector<unsigned long> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod_prime(v[i], p);
        while (!w.empty() && w.back() == 0) w.pop_back();
        return w;
    };
    std::vector<unsigned long> u = image(a), v = image(b);
    if (u.size() != a.size() || v.size() != b.size()) return -1;  // lead vanished mod p
    while (!v.empty()) {
        // u <- u mod v over GF(p)
        unsigned long vinv = inv_mod(v.back(), p);
        while (u.size() >= v.size()) {
            unsigned long q = (u.back() * vinv) % p;
            std::size_t off = u.size() - v.size();
            for (std::size_t j = 0; j < v.size(); ++j) {
                unsigned long sub = (q * v[j]) % p;
                u[off + j] = (u[off + j] + p - sub) % p;
            }
            u.pop_back();  // leading term cancelled by construction
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
        std::swap(u, v);
    }
    return static_cast<int>(u.size()) - 1;
}

std::vector<Int> int_content_free(std::vector<Int> v) {
    Int content(0);
    for (const Int& z : v) content = gcd(content, z);
    if (sgn(content) == 0) return v;
    if (sgn(v.back()) < 0) content = -content;
    for (Int& z : v) z /= content;
    return v;
}

// pseudo-remainder over Z: repeat a <- lc(b)*a - lc(a)*x^(deg a - deg b)*b
// until deg a < deg b. Content is stripped by the caller, so the exact
// power-of-lc(b) scaling of the textbook prem is irrelevant here.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int lb = b.back();
    while (a.size() >= b.size()) {
        Int la = a.back();
        std::size_t off = a.size() - b.size();
        for (Int& z : a) z *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= la * b[j];
        a.pop_back();  // leading term cancels exactly
        while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    }
    return a;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> pa = primitive_int(a);
    std::vector<Int> pb = primitive_int(b);

    static const unsigned long kPrimes[] = {1000003ul, 2000003ul, 3000017ul};
    for (unsigned long p : kPrimes) {
        int d = modp_gcd_degree(pa, pb, p);
        if (d == 0) return Poly::constant(Rat(1));
        if (d > 0) break;  // potentially nontrivial; fall through to PRS
    }

    // subresultant PRS on primitive integer polynomials
    std::vector<Int> u = pa, v = pb;
    if (u.size() < v.size()) std::swap(u, v);
    while (true) {
        std::vector<Int> r = pseudo_rem(u, v);
        if (r.empty()) break;
        u = std::move(v);
        v = int_content_free(std::move(r));
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(v.size());
    for (const Int& z : v) coeffs.emplace_back(z);
    return Poly(std::move(coeffs)).monic();
}

std::vector<std::pair<Poly, unsigned>> Poly::square_free(const Poly& p) {
    if (p.degree() < 1) throw MathError("square-free split needs degree >= 1");
    std::vector<std::pair<Poly, unsigned>> out;
    Poly f = p.monic();
    Poly g = gcd(f, f.derivative());
    Poly w = div_exact(f, g);
    for (unsigned i = 1; w.degree() > 0; ++i) {
        Poly y = gcd(w, g);
        Poly part = div_exact(w, y);
        if (part.degree() > 0) out.emplace_back(part, i);
        w = std::move(y);
        g = div_exact(g, w);
    }
    return out;
}

std::string Poly::to_string() const {
    std::string out = "poly[";
    if (c_.empty()) out += "0";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(c_[i]);
    }
    out += "]";
    return out;
}

} // namespace blocktf
