#ifndef BLOCKTF_RATIONAL_HPP
#define BLOCKTF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "blocktf/errors.hpp"

namespace blocktf {

// Exact rational coefficient type. All symbolic computation in the engine is
// drift-free; doubles appear only at root finding, evaluation and simulation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw MathError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q" and decimal literals like "-0.05"; decimals become exact
// rationals (0.05 -> 1/20), never binary floats.
Rat rat_from_string(const std::string& text);

// "p" for integers, "p/q" otherwise (canonical sign on the numerator).
std::string rat_to_string(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace blocktf

#endif
