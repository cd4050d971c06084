#include "blocktf/laplace.hpp"

#include <algorithm>
#include <cmath>

namespace blocktf {

SDomainExpr::SDomainExpr(std::vector<SDomainTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

void SDomainExpr::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const SDomainTerm& a, const SDomainTerm& b) { return a.delay < b.delay; });
    std::vector<SDomainTerm> merged;
    for (SDomainTerm& t : terms_) {
        if (sgn(t.delay) < 0) throw MathError("s-domain term with negative delay");
        if (t.tf.is_zero()) continue;
        if (!merged.empty() && merged.back().delay == t.delay) {
            merged.back().tf = merged.back().tf + t.tf;
            if (merged.back().tf.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

bool SDomainExpr::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && rat_is_zero(terms_[0].delay));
}

const RatFunc& SDomainExpr::rational() const {
    static const RatFunc kZero = RatFunc::zero();
    if (terms_.empty()) return kZero;
    if (!is_rational()) throw MathError("s-domain expression carries delay factors");
    return terms_[0].tf;
}

bool SDomainExpr::operator==(const SDomainExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].delay != o.terms_[i].delay || terms_[i].tf != o.terms_[i].tf) return false;
    return true;
}

SDomainExpr SDomainExpr::operator+(const SDomainExpr& o) const {
    std::vector<SDomainTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return SDomainExpr(std::move(all));
}

SDomainExpr SDomainExpr::scaled(const Rat& k) const {
    std::vector<SDomainTerm> all = terms_;
    for (SDomainTerm& t : all) t.tf = t.tf * RatFunc::constant(k);
    return SDomainExpr(std::move(all));
}

SDomainExpr SDomainExpr::times(const RatFunc& r) const {
    std::vector<SDomainTerm> all = terms_;
    for (SDomainTerm& t : all) t.tf = t.tf * r;
    return SDomainExpr(std::move(all));
}

std::complex<double> SDomainExpr::eval(std::complex<double> s0) const {
    std::complex<double> acc(0.0, 0.0);
    for (const SDomainTerm& t : terms_) {
        std::complex<double> factor(1.0, 0.0);
        if (sgn(t.delay) > 0) factor = std::exp(-s0 * rat_to_double(t.delay));
        acc += factor * t.tf.eval(s0);
    }
    return acc;
}

std::string SDomainExpr::to_string() const {
    if (terms_.empty()) return "tf(0;1)";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        if (sgn(terms_[i].delay) > 0) out += "exp(-" + rat_to_string(terms_[i].delay) + "*s)*";
        out += terms_[i].tf.to_string();
    }
    return out;
}

namespace {

Rat factorial(unsigned n) {
    Rat f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
    return f;
}

// real and imaginary parts of (s - a + i*w)^m as exact real polynomials
std::pair<Poly, Poly> conjugate_power(const Rat& a, const Rat& w, unsigned m) {
    Poly u = Poly(std::vector<Rat>{-a, Rat(1)});  // s - a
    // binomial expansion sum_k C(m,k) u^{m-k} (i w)^k
    Poly re, im;
    Rat binom(1);
    Poly upow = u.pow(m);
    for (unsigned k = 0; k <= m; ++k) {
        Rat wk(1);
        for (unsigned j = 0; j < k; ++j) wk *= w;
        Rat c = binom * wk;
        switch (k % 4) {
            case 0: re = re + upow.scaled(c); break;
            case 1: im = im + upow.scaled(c); break;
            case 2: re = re - upow.scaled(c); break;
            case 3: im = im - upow.scaled(c); break;
        }
        // next binomial coefficient and next lower power of u
        binom = binom * Rat(static_cast<long>(m - k)) / Rat(static_cast<long>(k + 1));
        if (k < m) upow = Poly::div_exact(upow, u);
    }
    return {re, im};
}

RatFunc atom_transform(const SignalAtom& atom) {
    const unsigned m = atom.power + 1;
    Rat scale = atom.coeff * factorial(atom.power);
    if (atom.osc == Osc::none) {
        // n!/(s-a)^{n+1}
        Poly den = Poly(std::vector<Rat>{-atom.rate, Rat(1)}).pow(m);
        return RatFunc(Poly::constant(scale), den);
    }
    // n! * Re/Im[(s - a + i w)^{n+1}] / ((s-a)^2 + w^2)^{n+1}
    auto [re, im] = conjugate_power(atom.rate, atom.freq, m);
    Poly base = Poly(std::vector<Rat>{atom.rate * atom.rate + atom.freq * atom.freq, Rat(-2) * atom.rate, Rat(1)});
    Poly den = base.pow(m);
    Poly num = (atom.osc == Osc::cosine ? re : im).scaled(scale);
    return RatFunc(num, den);
}

} // namespace

SDomainExpr laplace(const Signal& g) {
    std::vector<SDomainTerm> terms;
    terms.reserve(g.atoms().size());
    for (const SignalAtom& atom : g.atoms()) terms.push_back({atom.delay, atom_transform(atom)});
    return SDomainExpr(std::move(terms));
}

bool lt_exists(const Signal& g, std::complex<double> s0) {
    ExpOrderWitness w = exp_order_witness(g);
    return s0.real() > w.a;
}

double default_horizon(const Signal& g, std::complex<double> s0, double tol) {
    ExpOrderWitness w = exp_order_witness(g);
    double gap = s0.real() - w.a;
    if (gap <= 0.0) throw MathError("Laplace integral outside the region of convergence");
    double h = std::log(std::max(w.M / (tol * gap), 1.0)) / gap;
    return std::max(h, 1.0);
}

std::complex<double> numeric_lt(const Signal& g, std::complex<double> s0, double horizon, unsigned steps) {
    if (!lt_exists(g, s0)) throw MathError("Laplace integral outside the region of convergence");
    if (horizon <= 0.0 || steps == 0) throw MathError("quadrature needs a positive horizon and step count");

    // segment boundaries at the atom delays
    std::vector<double> cuts{0.0, horizon};
    for (const SignalAtom& a : g.atoms()) {
        double d = rat_to_double(a.delay);
        if (d > 0.0 && d < horizon) cuts.push_back(d);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::complex<double> total(0.0, 0.0);
    for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
        double lo = cuts[seg], hi = cuts[seg + 1];
        // only the atoms already switched on are integrated, so the segment
        // endpoints see the smooth interior limits, not the jump
        std::vector<SignalAtom> active;
        for (const SignalAtom& a : g.atoms())
            if (rat_to_double(a.delay) <= lo) active.push_back(a);
        if (active.empty()) continue;
        Signal part{std::move(active)};
        auto f = [&](double t) -> std::complex<double> {
            return part.value_at(t) * std::exp(-s0 * t);
        };
        auto panels = static_cast<unsigned>(std::ceil(static_cast<double>(steps) * (hi - lo) / horizon));
        panels = std::max(panels, 4u);
        double h = (hi - lo) / (2.0 * panels);
        std::complex<double> acc = f(lo) + f(hi);
        for (unsigned i = 1; i < 2 * panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + h * i);
        total += acc * (h / 3.0);
    }
    return total;
}

} // namespace blocktf
