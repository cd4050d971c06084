#include "blocktf/signal.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace blocktf {

namespace {

// ordering key ignoring the coefficient, used for merging like atoms
auto atom_key(const SignalAtom& a) {
    return std::make_tuple(a.delay, a.rate, a.power, static_cast<int>(a.osc), a.freq);
}

bool key_less(const SignalAtom& x, const SignalAtom& y) {
    auto kx = atom_key(x), ky = atom_key(y);
    if (std::get<0>(kx) != std::get<0>(ky)) return std::get<0>(kx) < std::get<0>(ky);
    if (std::get<1>(kx) != std::get<1>(ky)) return std::get<1>(kx) < std::get<1>(ky);
    if (std::get<2>(kx) != std::get<2>(ky)) return std::get<2>(kx) < std::get<2>(ky);
    if (std::get<3>(kx) != std::get<3>(ky)) return std::get<3>(kx) < std::get<3>(ky);
    return std::get<4>(kx) < std::get<4>(ky);
}

} // namespace

Signal::Signal(std::vector<SignalAtom> atoms) : atoms_(std::move(atoms)) { canonicalize(); }

void Signal::canonicalize() {
    for (SignalAtom& a : atoms_) {
        if (sgn(a.delay) < 0) throw MathError("signal atom with negative delay");
        if (a.osc == Osc::sine) {
            if (rat_is_zero(a.freq)) a.coeff = Rat(0);
            else if (sgn(a.freq) < 0) {
                a.freq = -a.freq;
                a.coeff = -a.coeff;
            }
        } else if (a.osc == Osc::cosine) {
            if (sgn(a.freq) < 0) a.freq = -a.freq;
            if (rat_is_zero(a.freq)) a.osc = Osc::none;
        }
        if (a.osc == Osc::none) a.freq = Rat(0);
    }
    std::sort(atoms_.begin(), atoms_.end(), key_less);
    std::vector<SignalAtom> merged;
    for (SignalAtom& a : atoms_) {
        if (rat_is_zero(a.coeff)) continue;
        if (!merged.empty() && atom_key(merged.back()) == atom_key(a)) {
            merged.back().coeff += a.coeff;
            if (rat_is_zero(merged.back().coeff)) merged.pop_back();
        } else {
            merged.push_back(std::move(a));
        }
    }
    atoms_ = std::move(merged);
}

Signal Signal::step() {
    SignalAtom a;
    a.coeff = Rat(1);
    return Signal::atom(a);
}

bool Signal::is_delay_free() const {
    for (const SignalAtom& a : atoms_)
        if (sgn(a.delay) > 0) return false;
    return true;
}

bool Signal::operator==(const Signal& o) const {
    if (atoms_.size() != o.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const SignalAtom& a = atoms_[i];
        const SignalAtom& b = o.atoms_[i];
        if (a.coeff != b.coeff || a.power != b.power || a.rate != b.rate || a.osc != b.osc ||
            a.freq != b.freq || a.delay != b.delay)
            return false;
    }
    return true;
}

Signal Signal::operator+(const Signal& o) const {
    std::vector<SignalAtom> all = atoms_;
    all.insert(all.end(), o.atoms_.begin(), o.atoms_.end());
    return Signal(std::move(all));
}

Signal Signal::scaled(const Rat& k) const {
    std::vector<SignalAtom> all = atoms_;
    for (SignalAtom& a : all) a.coeff *= k;
    return Signal(std::move(all));
}

Signal Signal::derivative() const {
    std::vector<SignalAtom> out;
    for (const SignalAtom& a : atoms_) {
        if (sgn(a.delay) > 0) throw MathError("symbolic derivative of a delayed atom is outside the catalog");
        if (a.power > 0) {
            SignalAtom d = a;
            d.power = a.power - 1;
            d.coeff = a.coeff * Rat(static_cast<long>(a.power));
            out.push_back(d);
        }
        if (!rat_is_zero(a.rate)) {
            SignalAtom d = a;
            d.coeff = a.coeff * a.rate;
            out.push_back(d);
        }
        if (a.osc == Osc::sine) {
            SignalAtom d = a;
            d.osc = Osc::cosine;
            d.coeff = a.coeff * a.freq;
            out.push_back(d);
        } else if (a.osc == Osc::cosine) {
            SignalAtom d = a;
            d.osc = Osc::sine;
            d.coeff = -a.coeff * a.freq;
            out.push_back(d);
        }
    }
    return Signal(std::move(out));
}

double Signal::value_at(double t) const {
    double acc = 0.0;
    for (const SignalAtom& a : atoms_) {
        double tau = t - rat_to_double(a.delay);
        if (tau < 0.0) continue;
        double v = rat_to_double(a.coeff);
        if (a.power > 0) v *= std::pow(tau, static_cast<double>(a.power));
        double rate = rat_to_double(a.rate);
        if (rate != 0.0) v *= std::exp(rate * tau);
        if (a.osc == Osc::sine) v *= std::sin(rat_to_double(a.freq) * tau);
        else if (a.osc == Osc::cosine) v *= std::cos(rat_to_double(a.freq) * tau);
        acc += v;
    }
    return acc;
}

double Signal::at_zero() const {
    double acc = 0.0;
    for (const SignalAtom& a : atoms_) {
        if (sgn(a.delay) > 0 || a.power > 0 || a.osc == Osc::sine) continue;
        acc += rat_to_double(a.coeff);
    }
    return acc;
}

ExpOrderWitness exp_order_witness(const Signal& g) {
    constexpr double kMargin = 1.0;  // absorbs polynomial and oscillatory growth
    ExpOrderWitness w;
    w.a = 0.0;
    bool first = true;
    double M = 0.0;
    for (const SignalAtom& atom : g.atoms()) {
        double rate = rat_to_double(atom.rate);
        bool needs_margin = atom.power > 0 || atom.osc != Osc::none;
        double r = rate + (needs_margin ? kMargin : 0.0);
        if (first || r > w.a) w.a = r;
        first = false;
    }
    if (first) {
        // zero signal: any positive M works
        w.M = 1.0;
        w.a = 0.0;
        return w;
    }
    for (const SignalAtom& atom : g.atoms()) {
        double rate = rat_to_double(atom.rate);
        bool needs_margin = atom.power > 0 || atom.osc != Osc::none;
        double r = rate + (needs_margin ? kMargin : 0.0);
        double poly_sup = 1.0;
        if (atom.power > 0) {
            double n = static_cast<double>(atom.power);
            poly_sup = std::pow(n / std::exp(1.0), n);  // sup_t t^n e^{-t}
        }
        double mi = std::abs(rat_to_double(atom.coeff)) * poly_sup;
        double T = rat_to_double(atom.delay);
        if (r < 0.0 && T > 0.0) mi *= std::exp(-r * T);  // e^{r(t-T)} <= e^{rt} e^{-rT}
        M += mi;
    }
    w.M = std::max(M, 1e-300);
    return w;
}

std::string Signal::to_string() const {
    if (atoms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const SignalAtom& a : atoms_) {
        Rat c = a.coeff;
        if (!first) {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        std::string body;
        auto append_factor = [&body](const std::string& f) {
            if (!body.empty()) body += "*";
            body += f;
        };
        if (a.power > 0) append_factor(a.power == 1 ? "t" : "t^" + std::to_string(a.power));
        if (!rat_is_zero(a.rate)) append_factor("exp(" + rat_to_string(a.rate) + ")");
        if (a.osc == Osc::sine) append_factor("sin(" + rat_to_string(a.freq) + ")");
        else if (a.osc == Osc::cosine) append_factor("cos(" + rat_to_string(a.freq) + ")");
        if (body.empty()) body = "step";
        std::string term;
        if (c != Rat(1)) term = rat_to_string(c) + "*" + body;
        else term = body;
        if (sgn(a.delay) > 0) term = (c != Rat(1) ? rat_to_string(c) + "*" : "") +
                                     "delay(" + rat_to_string(a.delay) + "," + body + ")";
        out += term;
    }
    return out;
}

} // namespace blocktf
