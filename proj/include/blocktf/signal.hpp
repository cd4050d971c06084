#ifndef BLOCKTF_SIGNAL_HPP
#define BLOCKTF_SIGNAL_HPP

#include <string>
#include <vector>

#include "blocktf/rational.hpp"

namespace blocktf {

enum class Osc { none, sine, cosine };

// One catalog atom: coeff * (t-delay)^power * e^{rate*(t-delay)}
//                        * osc(freq*(t-delay)) * step(t-delay).
// Canonical form: freq > 0 for oscillatory atoms (sin picks up the sign,
// cos drops it), sin with freq 0 is the zero atom, cos with freq 0 folds to
// Osc::none.
struct SignalAtom {
    Rat coeff = Rat(0);
    unsigned power = 0;
    Rat rate = Rat(0);
    Osc osc = Osc::none;
    Rat freq = Rat(0);
    Rat delay = Rat(0);  // >= 0
};

// Finite sum of atoms; real-valued on t >= 0 and closed under the Laplace
// table, symbolic differentiation (delay-free) and linear combination.
// Atoms are kept merged and in a fixed order so structural equality is
// meaningful.
class Signal {
  public:
    Signal() = default;
    explicit Signal(std::vector<SignalAtom> atoms);

    static Signal step();
    static Signal atom(SignalAtom a) { return Signal(std::vector<SignalAtom>{std::move(a)}); }

    const std::vector<SignalAtom>& atoms() const { return atoms_; }
    bool is_zero() const { return atoms_.empty(); }
    bool is_delay_free() const;

    bool operator==(const Signal& o) const;

    Signal operator+(const Signal& o) const;
    Signal scaled(const Rat& k) const;

    // symbolic d/dt within the catalog; throws MathError for delayed atoms
    Signal derivative() const;

    double value_at(double t) const;
    double at_zero() const;  // right-sided value g(0+)

    std::string to_string() const;

  private:
    void canonicalize();
    std::vector<SignalAtom> atoms_;
};

// Exponential-order witness: M > 0 and |g(t)| <= M * e^{a t} for all t >= 0.
struct ExpOrderWitness {
    double M = 1.0;
    double a = 0.0;
};

// Per-atom rate plus a margin of 1 whenever a polynomial or oscillatory
// factor must be absorbed; M sums |coeff| * sup_t t^n e^{-t} = (n/e)^n per
// atom (with a delay correction when the effective rate is negative).
ExpOrderWitness exp_order_witness(const Signal& g);

} // namespace blocktf

#endif
