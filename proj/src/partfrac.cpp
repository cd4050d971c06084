#include "blocktf/partfrac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "blocktf/roots.hpp"

namespace blocktf {

namespace {

using cplx = std::complex<double>;

// Taylor coefficients of p around z0, orders 0..k, by repeated synthetic
// division
std::vector<cplx> taylor_at(const std::vector<cplx>& p, cplx z0, unsigned k) {
    std::vector<cplx> work = p;
    std::vector<cplx> out(k + 1, cplx(0.0, 0.0));
    for (unsigned j = 0; j <= k && !work.empty(); ++j) {
        cplx rem(0.0, 0.0);
        for (std::size_t i = work.size(); i-- > 0;) {
            cplx next = work[i] + rem * z0;
            rem = next;
            work[i] = next;
        }
        // work now holds the quotient shifted by one alongside the remainder
        // in slot 0; peel it off
        out[j] = work.front();
        work.erase(work.begin());
    }
    return out;
}

std::vector<cplx> to_complex(const Poly& p) {
    std::vector<cplx> v;
    v.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) v.emplace_back(rat_to_double(c), 0.0);
    return v;
}

} // namespace

PartialFractions partial_fractions(const RatFunc& r, double merge_tol) {
    if (r.den().degree() < 1) throw std::invalid_argument("partial fractions need deg den >= 1");

    auto [quot, rem] = Poly::divmod(r.num(), r.den());
    PartialFractions out;
    out.poly_part = quot;
    if (rem.is_zero()) return out;

    // exact multiplicities from the square-free split of the exact
    // denominator; the eigen-solver then only ever sees simple roots
    std::vector<std::pair<cplx, unsigned>> poles;
    for (const auto& [factor, mult] : Poly::square_free(r.den()))
        for (const cplx& p : roots(factor)) poles.emplace_back(p, mult);
    std::sort(poles.begin(), poles.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });

    // numerically coincident poles from different factors still merge,
    // multiplicities adding
    std::vector<bool> used(poles.size(), false);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (used[i]) continue;
        cplx sum = poles[i].first * static_cast<double>(poles[i].second);
        unsigned count = poles[i].second;
        used[i] = true;
        for (std::size_t j = i + 1; j < poles.size(); ++j) {
            if (!used[j] && std::abs(poles[j].first - poles[i].first) <= merge_tol) {
                sum += poles[j].first * static_cast<double>(poles[j].second);
                count += poles[j].second;
                used[j] = true;
            }
        }
        PoleTerm term;
        term.pole = sum / static_cast<double>(count);
        term.multiplicity = count;
        out.terms.push_back(term);
    }

    const std::vector<cplx> num_c = to_complex(rem);
    for (PoleTerm& term : out.terms) {
        const unsigned m = term.multiplicity;
        // deflated denominator: product over the other poles (den is monic)
        std::vector<cplx> deflated{cplx(1.0, 0.0)};
        for (const PoleTerm& other : out.terms) {
            if (&other == &term) continue;
            for (unsigned k = 0; k < other.multiplicity; ++k) {
                std::vector<cplx> next(deflated.size() + 1, cplx(0.0, 0.0));
                for (std::size_t i = 0; i < deflated.size(); ++i) {
                    next[i + 1] += deflated[i];
                    next[i] -= deflated[i] * other.pole;
                }
                deflated = std::move(next);
            }
        }
        // series quotient num/deflated around the pole, orders 0..m-1
        std::vector<cplx> a = taylor_at(num_c, term.pole, m - 1);
        std::vector<cplx> b = taylor_at(deflated, term.pole, m - 1);
        if (std::abs(b[0]) == 0.0) throw MathError("deflated denominator vanished at a pole cluster");
        std::vector<cplx> c(m, cplx(0.0, 0.0));
        for (unsigned k = 0; k < m; ++k) {
            cplx acc = a[k];
            for (unsigned j = 1; j <= k; ++j) acc -= b[j] * c[k - j];
            c[k] = acc / b[0];
        }
        term.residues.resize(m);
        for (unsigned j = 1; j <= m; ++j) term.residues[j - 1] = c[m - j];
    }
    return out;
}

std::complex<double> eval(const PartialFractions& pf, std::complex<double> s0) {
    cplx acc = pf.poly_part.eval(s0);
    for (const PoleTerm& t : pf.terms) {
        cplx d = s0 - t.pole;
        cplx powd = d;
        for (unsigned j = 1; j <= t.multiplicity; ++j) {
            acc += t.residues[j - 1] / powd;
            powd *= d;
        }
    }
    return acc;
}

} // namespace blocktf
