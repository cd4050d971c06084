#include "blocktf/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "blocktf/roots.hpp"

namespace blocktf {

RouthResult routh_hurwitz(const Poly& den) {
    if (den.is_zero()) throw MathError("Routh array of the zero polynomial");
    const int n = den.degree();
    if (n < 1) throw MathError("Routh array needs degree >= 1");

    // two leading rows from alternating coefficients, highest degree first;
    // rows[i] belongs to s^(n-i)
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> r0, r1;
    for (int i = n; i >= 0; i -= 2) r0.push_back(den.coeff(static_cast<std::size_t>(i)));
    for (int i = n - 1; i >= 0; i -= 2) r1.push_back(den.coeff(static_cast<std::size_t>(i)));
    rows.push_back(r0);
    if (!r1.empty()) rows.push_back(r1);

    RouthResult result;
    for (int k = 2; k <= n; ++k) {
        const std::vector<Rat>& a = rows[static_cast<std::size_t>(k - 2)];
        std::vector<Rat>& b = rows[static_cast<std::size_t>(k - 1)];
        bool b_zero_row = true;
        for (const Rat& x : b)
            if (!rat_is_zero(x)) b_zero_row = false;
        if (b_zero_row) {
            // exact boundary handling: replace the zero row with the
            // derivative of the auxiliary polynomial built from the row
            // above (flagged so the verdict still defers to poles)
            result.degenerate = true;
            const int deg_aux = n - (k - 2);
            std::vector<Rat> replacement;
            for (std::size_t j = 0; j < a.size(); ++j) {
                int e = deg_aux - 2 * static_cast<int>(j);
                if (e < 1) break;
                replacement.push_back(a[j] * Rat(e));
            }
            if (replacement.empty() || rat_is_zero(replacement[0])) return result;
            b = std::move(replacement);
        }
        if (rat_is_zero(b[0])) {
            // zero first-column entry in a nonzero row: refused (no epsilon
            // trick); the verdict defers to poles
            result.degenerate = true;
            return result;
        }
        std::vector<Rat> c;
        std::size_t width = b.size() >= 1 ? b.size() - 1 : 0;
        width = std::max(width, a.size() >= 2 ? a.size() - 1 : std::size_t(0));
        for (std::size_t j = 0; j < std::max<std::size_t>(width, 1); ++j) {
            Rat av = a.size() > j + 1 ? a[j + 1] : Rat(0);
            Rat bv = b.size() > j + 1 ? b[j + 1] : Rat(0);
            c.push_back((b[0] * av - a[0] * bv) / b[0]);
        }
        rows.push_back(std::move(c));
    }

    // sign changes down the first column; a residual zero entry (e.g. a root
    // at the origin) leaves the count undefined
    int prev = 0;
    unsigned changes = 0;
    for (const auto& row : rows) {
        if (row.empty() || rat_is_zero(row[0])) {
            result.degenerate = true;
            return result;
        }
        int s = sgn(row[0]);
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    result.sign_changes = changes;
    return result;
}

StabilityVerdict classify(const RatFunc& r, double tol) {
    StabilityVerdict v;
    if (r.den().degree() < 1) {
        // constant denominator: no poles
        v.classification = Classification::stable;
        v.method = VerdictMethod::poles_numeric;
        return v;
    }

    // exact multiplicities via the square-free split; the simple-pole test
    // for marginality must not depend on eigenvalue cluster radii
    bool any_right = false, all_left = true, any_simple_axis = false;
    for (const auto& [factor, mult] : Poly::square_free(r.den())) {
        for (const auto& pole : roots(factor)) {
            for (unsigned k = 0; k < mult; ++k) v.poles.push_back(pole);
            double re = pole.real();
            if (re > tol) any_right = true;
            if (re >= -tol) all_left = false;
            if (std::abs(re) <= tol && mult == 1) any_simple_axis = true;
        }
    }
    std::sort(v.poles.begin(), v.poles.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if (all_left) v.classification = Classification::stable;
    else if (!any_right && any_simple_axis) v.classification = Classification::marginal;
    else v.classification = Classification::unstable;

    RouthResult routh = routh_hurwitz(r.den());
    v.method = routh.degenerate ? VerdictMethod::poles_numeric : VerdictMethod::both;
    return v;
}

bool cross_check(const Poly& den, double tol) {
    RouthResult routh = routh_hurwitz(den);
    if (routh.degenerate) throw MathError("cross_check needs a non-degenerate Routh array");
    unsigned right = 0;
    for (const auto& p : roots(den))
        if (p.real() > tol) ++right;
    return right == routh.sign_changes;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::stable: return "stable";
        case Classification::marginal: return "marginal";
        case Classification::unstable: return "unstable";
    }
    return "?";
}

std::string to_string(VerdictMethod m) {
    switch (m) {
        case VerdictMethod::routh_exact: return "routh_exact";
        case VerdictMethod::poles_numeric: return "poles_numeric";
        case VerdictMethod::both: return "both";
    }
    return "?";
}

std::string StabilityVerdict::to_json() const {
    char buf[64];
    std::string out = "{\"classification\":\"" + to_string(classification) + "\",\"poles\":[";
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (i) out += ",";
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", poles[i].real(), poles[i].imag());
        out += buf;
    }
    out += "],\"method\":\"" + to_string(method) + "\"}";
    return out;
}

} // namespace blocktf
