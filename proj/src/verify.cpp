#include "blocktf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include "blocktf/dialysis.hpp"
#include "blocktf/dsl.hpp"
#include "blocktf/simul.hpp"

namespace blocktf {

namespace {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, long num_lo, long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    return rat(num(rng), den(rng));
}

Rat random_positive_rat(Rng& rng, long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(1, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    return rat(num(rng), den(rng));
}

// a rational with |value| <= bound (denominator drawn first)
Rat random_rat_in(Rng& rng, long bound, long den_hi) {
    std::uniform_int_distribution<long> den(1, den_hi);
    long d = den(rng);
    std::uniform_int_distribution<long> num(-bound * d, bound * d);
    return rat(num(rng), d);
}

Poly random_poly(Rng& rng, int max_degree, long coeff_hi = 5, long den_hi = 3) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = random_rat(rng, -coeff_hi, coeff_hi, den_hi);
    return Poly(std::move(c));
}

RatFunc random_ratfunc(Rng& rng, int max_degree) {
    for (int tries = 0; tries < 100; ++tries) {
        Poly num = random_poly(rng, max_degree);
        Poly den = random_poly(rng, max_degree);
        if (den.is_zero() || num.is_zero()) continue;
        return RatFunc(num, den);
    }
    return RatFunc::one();
}

// random catalog signal; delays only when allowed
Signal random_signal(Rng& rng, bool allow_delay) {
    std::uniform_int_distribution<int> n_atoms(1, 3);
    std::uniform_int_distribution<int> power(0, 2);
    std::uniform_int_distribution<int> osc_pick(0, 9);
    for (int tries = 0; tries < 50; ++tries) {
        std::vector<SignalAtom> atoms;
        int count = n_atoms(rng);
        for (int i = 0; i < count; ++i) {
            SignalAtom a;
            a.coeff = random_rat(rng, -8, 8, 3);
            if (rat_is_zero(a.coeff)) a.coeff = Rat(1);
            a.power = static_cast<unsigned>(power(rng));
            a.rate = random_rat(rng, -4, 2, 2);
            int pick = osc_pick(rng);
            if (pick >= 4) {
                a.osc = pick % 2 ? Osc::sine : Osc::cosine;
                a.freq = random_positive_rat(rng, 6, 2);
            }
            if (allow_delay && osc_pick(rng) < 3) a.delay = random_positive_rat(rng, 4, 2);
            atoms.push_back(a);
        }
        Signal g{std::move(atoms)};
        if (!g.is_zero()) return g;
    }
    return Signal::step();
}

// random composition tree over series/summation/leaf
BlockExpr random_calc_tree(Rng& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> arity(2, 3);
    int k = depth <= 1 ? 0 : kind(rng);
    if (k <= 1) return BlockExpr::leaf(random_ratfunc(rng, 3));
    std::vector<BlockExpr> kids;
    int n = arity(rng);
    for (int i = 0; i < n; ++i) kids.push_back(random_calc_tree(rng, depth - 1));
    return k == 2 ? BlockExpr::series(std::move(kids)) : BlockExpr::summation(std::move(kids));
}

// random tree over the full grammar, for round-trip checks
BlockExpr random_dsl_tree(Rng& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> arity(1, 3);
    int k = depth <= 1 ? 0 : kind(rng);
    auto kids = [&](int lo) {
        std::vector<BlockExpr> v;
        int n = std::max(lo, arity(rng));
        for (int i = 0; i < n; ++i) v.push_back(random_dsl_tree(rng, depth - 1));
        return v;
    };
    switch (k) {
        case 0:
        case 1: return BlockExpr::leaf(random_ratfunc(rng, 3));
        case 2: return BlockExpr::series(kids(1));
        case 3: return BlockExpr::summation(kids(1));
        case 4: return BlockExpr::pickoff(random_dsl_tree(rng, depth - 1), kids(1));
        default: {
            BlockExpr f = random_dsl_tree(rng, depth - 1);
            BlockExpr b = random_dsl_tree(rng, depth - 1);
            return BlockExpr::feedback(std::move(f), std::move(b));
        }
    }
}

// flatten nested series-in-series and summation-in-summation
BlockExpr flatten(const BlockExpr& e) {
    switch (e.kind()) {
        case BlockExpr::Kind::leaf: return e;
        case BlockExpr::Kind::series:
        case BlockExpr::Kind::summation: {
            std::vector<BlockExpr> out;
            for (const BlockExpr& c : e.children()) {
                BlockExpr fc = flatten(c);
                if (fc.kind() == e.kind()) {
                    for (const BlockExpr& gc : fc.children()) out.push_back(gc);
                } else {
                    out.push_back(std::move(fc));
                }
            }
            return e.kind() == BlockExpr::Kind::series ? BlockExpr::series(std::move(out))
                                                       : BlockExpr::summation(std::move(out));
        }
        default: return e;
    }
}

BlockExpr shuffle_children(const BlockExpr& e, Rng& rng) {
    switch (e.kind()) {
        case BlockExpr::Kind::leaf: return e;
        case BlockExpr::Kind::series:
        case BlockExpr::Kind::summation: {
            std::vector<BlockExpr> kids;
            for (const BlockExpr& c : e.children()) kids.push_back(shuffle_children(c, rng));
            std::shuffle(kids.begin(), kids.end(), rng);
            return e.kind() == BlockExpr::Kind::series ? BlockExpr::series(std::move(kids))
                                                       : BlockExpr::summation(std::move(kids));
        }
        default: return e;
    }
}

std::string fail_detail(const std::string& what, std::size_t index) {
    std::ostringstream os;
    os << what << " (case " << index << ")";
    return os.str();
}

// ---- criterion 1 ----
CheckResult check_theorem_reproduction(double) {
    CheckResult r{"theorem-reproduction", true, "", 0.0, 1.0};
    Rng rng(101);
    for (std::size_t i = 0; i < 100; ++i) {
        ArmsTrunkParams p(random_positive_rat(rng, 100, 20), random_positive_rat(rng, 100, 20));
        TheoremReport report = theorem_checks(p);
        if (!report.routes_agree) {
            r.pass = false;
            r.detail = fail_detail("diagram and ODE routes disagree", i);
            return r;
        }
        if (!report.unity_kta_form) {
            r.pass = false;
            r.detail = fail_detail("kTA=1 specialization does not equal 1/(s+kA)", i);
            return r;
        }
        if (!report.stable) {
            r.pass = false;
            r.detail = fail_detail("arms-trunk pole not stable", i);
            return r;
        }
    }
    r.detail = "100 random parameter pairs: routes agree exactly, kTA=1 form reproduced, stable";
    return r;
}

// ---- criterion 2 ----
CheckResult check_block_identities(double) {
    CheckResult r{"block-identities", true, "", 0.0, 5.0};
    Rng rng(202);
    for (std::size_t i = 0; i < 500; ++i) {
        BlockExpr tree = random_calc_tree(rng, 4);
        RatFunc base = reduce(tree);
        if (reduce(flatten(tree)) != base) {
            r.pass = false;
            r.detail = fail_detail("associativity: flattened tree reduced differently", i);
            return r;
        }
        if (reduce(shuffle_children(tree, rng)) != base) {
            r.pass = false;
            r.detail = fail_detail("commutativity: permuted children reduced differently", i);
            return r;
        }
    }
    r.detail = "500 random trees: flatten- and permutation-invariant reductions, exact equality";
    return r;
}

// ---- criterion 3 ----
CheckResult check_feedback_convergence(double tol_scale) {
    CheckResult r{"feedback-convergence", true, "", 0.0, 5.0};
    Rng rng(303);
    std::uniform_real_distribution<double> re(-2.0, 4.0), im(-3.0, 3.0);
    const unsigned N = 20;
    std::size_t tight_cases = 0, evaluated = 0;
    for (std::size_t i = 0; evaluated < 100 && i < 1000; ++i) {
        RatFunc alpha = random_ratfunc(rng, 3);
        RatFunc beta = random_ratfunc(rng, 3);
        cplx s0;
        double gain = 2.0, amag = 0.0;
        bool found = false;
        for (int tries = 0; tries < 200 && !found; ++tries) {
            s0 = cplx(re(rng), im(rng));
            try {
                cplx a = alpha.eval(s0);
                cplx ab = a * beta.eval(s0);
                gain = std::abs(ab);
                amag = std::abs(a);
                found = gain <= 0.9 && amag <= 2.0;
            } catch (const MathError&) {
            }
        }
        if (!found) continue;
        ++evaluated;

        cplx truncated = feedback_truncated(alpha, beta, N, s0);
        RatFunc closed = reduce(BlockExpr::feedback(BlockExpr::leaf(alpha), BlockExpr::leaf(beta)));
        cplx exact = closed.eval(s0);
        double err = std::abs(truncated - exact);
        double bound = std::pow(gain, N + 1) * amag / (1.0 - gain);
        // the bound is tight for positive real loop gains; allow FP rounding
        if (err > tol_scale * bound + 64.0 * 1e-16 * (amag + 1.0)) {
            r.pass = false;
            r.detail = fail_detail("partial sum beyond the geometric tail bound", i);
            return r;
        }
        if (gain <= 0.5) {
            ++tight_cases;
            if (err >= tol_scale * 1e-6) {
                r.pass = false;
                r.detail = fail_detail("partial sum above 1e-6 at loop gain <= 0.5", i);
                return r;
            }
        }
    }
    if (evaluated < 100) {
        r.pass = false;
        r.detail = "could not sample 100 convergent loop points";
        return r;
    }
    std::ostringstream os;
    os << "100 random loops within the tail bound at N=20; " << tight_cases
       << " cases with |ab|<=0.5 all under 1e-6";
    r.detail = os.str();
    return r;
}

// ---- criterion 4 ----
CheckResult check_laplace_oracle(double tol_scale) {
    CheckResult r{"laplace-oracle", true, "", 0.0, 30.0};
    Rng rng(404);
    std::uniform_real_distribution<double> re_off(1.0, 3.0), im_s(-2.0, 2.0);
    const double tol = 1e-5 * tol_scale;
    for (std::size_t i = 0; i < 100; ++i) {
        Signal g = random_signal(rng, /*allow_delay=*/true);
        SDomainExpr sym = laplace(g);
        ExpOrderWitness w = exp_order_witness(g);
        for (int k = 0; k < 5; ++k) {
            cplx s0;
            cplx ref;
            // sample a well-conditioned point for the relative comparison
            double mag = 0.0;
            for (int tries = 0; tries < 60; ++tries) {
                s0 = cplx(w.a + re_off(rng), im_s(rng));
                ref = sym.eval(s0);
                mag = std::abs(ref);
                if (mag >= 1e-2) break;
            }
            double horizon = default_horizon(g, s0, 1e-9);
            cplx num = numeric_lt(g, s0, horizon, 6000);
            double rel = std::abs(num - ref) / std::max(mag, 1e-2);
            if (rel > tol) {
                std::ostringstream os;
                os << "symbolic/quadrature disagreement " << rel << " at signal " << i;
                r.pass = false;
                r.detail = os.str();
                return r;
            }
        }
    }
    r.detail = "100 random catalog signals x 5 points: symbolic vs Simpson quadrature within 1e-5 relative";
    return r;
}

// ---- criterion 5 ----
CheckResult check_differentiation_rule(double tol_scale) {
    CheckResult r{"differentiation-rule", true, "", 0.0, 5.0};
    Rng rng(505);
    std::uniform_real_distribution<double> re_off(0.5, 3.0), im_s(-2.0, 2.0);
    const double tol = 1e-8 * tol_scale;
    for (std::size_t i = 0; i < 50; ++i) {
        Signal g = random_signal(rng, /*allow_delay=*/false);
        Signal dg = g.derivative();
        SDomainExpr lg = laplace(g);
        SDomainExpr ldg = laplace(dg);
        double a = std::max(exp_order_witness(g).a, exp_order_witness(dg).a);
        cplx s0, rhs;
        double mag = 0.0;
        for (int tries = 0; tries < 60; ++tries) {
            s0 = cplx(a + re_off(rng), im_s(rng));
            rhs = s0 * lg.eval(s0) - g.at_zero();
            mag = std::abs(rhs);
            if (mag >= 1e-3) break;
        }
        double rel = std::abs(ldg.eval(s0) - rhs) / std::max(mag, 1e-3);
        if (rel > tol) {
            std::ostringstream os;
            os << "L[g'] != s L[g] - g(0): relative error " << rel << " at signal " << i;
            r.pass = false;
            r.detail = os.str();
            return r;
        }
    }
    r.detail = "50 random delay-free signals: L[g'] = s L[g] - g(0) within 1e-8 relative";
    return r;
}

// ---- criterion 6 ----
CheckResult check_stability_cross_check(double) {
    CheckResult r{"stability-cross-check", true, "", 0.0, 5.0};
    Rng rng(606);
    std::uniform_int_distribution<int> deg(1, 6);
    std::size_t degenerate = 0, checked = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = random_rat_in(rng, 5, 4);
        if (rat_is_zero(c.back())) c.back() = Rat(1);
        Poly p{std::move(c)};
        RouthResult routh = routh_hurwitz(p);
        if (routh.degenerate) {
            ++degenerate;
            continue;
        }
        ++checked;
        if (!cross_check(p)) {
            r.pass = false;
            r.detail = fail_detail("Routh sign changes disagree with numeric right-half-plane count", i);
            return r;
        }
    }
    std::ostringstream os;
    os << checked << " non-degenerate random polynomials in full agreement (" << degenerate
       << " degenerate arrays excluded)";
    r.detail = os.str();
    return r;
}

// ---- criterion 7 ----
CheckResult check_time_frequency(double tol_scale) {
    CheckResult r{"time-frequency-consistency", true, "", 0.0, 60.0};
    const double tol = 1e-4 * tol_scale;

    LinODE dialysis_ode = build_arms_trunk_ode(ArmsTrunkParams(rat(1, 10), rat(1, 20)));
    CrossValidation cv = cross_validate(dialysis_ode, Signal::step(), 10.0, 1e-3, tol);
    if (!cv.pass) {
        std::ostringstream os;
        os << "dialysis ODE step response mismatch: max |err| = " << cv.max_abs_err;
        r.pass = false;
        r.detail = os.str();
        return r;
    }

    Rng rng(707);
    std::uniform_int_distribution<int> order(1, 4);
    for (std::size_t i = 0; i < 20; ++i) {
        int n = order(rng);
        // stable denominator from strictly left-half-plane factors
        Poly den = Poly::constant(Rat(1));
        int remaining = n;
        std::uniform_int_distribution<int> coin(0, 1);
        while (remaining > 0) {
            if (remaining >= 2 && coin(rng)) {
                Rat b = random_positive_rat(rng, 4, 2);
                Rat c = random_positive_rat(rng, 6, 2);
                den = den * Poly(std::vector<Rat>{c, b, Rat(1)});
                remaining -= 2;
            } else {
                Rat p = random_positive_rat(rng, 5, 2);
                den = den * Poly(std::vector<Rat>{p, Rat(1)});
                remaining -= 1;
            }
        }
        Poly num = random_poly(rng, n, 3, 2);
        if (num.is_zero()) num = Poly::constant(Rat(1));
        LinODE ode(den.coeffs(), num.coeffs());
        CrossValidation check = cross_validate(ode, Signal::step(), 10.0, 1e-3, tol);
        if (!check.pass) {
            std::ostringstream os;
            os << "random stable system " << i << ": max |err| = " << check.max_abs_err;
            r.pass = false;
            r.detail = os.str();
            return r;
        }
    }
    r.detail = "dialysis ODE and 20 random stable systems: RK4 vs inverse-transform step responses within 1e-4";
    return r;
}

// ---- criterion 8 ----
CheckResult check_mass_conservation(double tol_scale) {
    CheckResult r{"mass-conservation", true, "", 0.0, 10.0};
    CompartmentModel closed(0.1, 0.12, 0.05, 0.07, [](double) { return 0.0; });
    std::vector<double> v0{1.0, 2.0, 1.5};
    DialysisRun run = simulate_dialysis(closed, v0, 10.0, 1e-3);
    double total0 = v0[0] + v0[1] + v0[2];
    for (std::size_t i = 0; i < run.trajectory.times.size(); ++i) {
        const auto& x = run.trajectory.states[i];
        if (std::abs(x[0] + x[1] + x[2] - total0) > 1e-8 * tol_scale) {
            r.pass = false;
            r.detail = "total volume drifted beyond 1e-8 with ufr = 0";
            return r;
        }
    }

    const double u0 = 0.01;
    CompartmentModel bleeding(0.1, 0.12, 0.05, 0.07, [u0](double) { return u0; });
    DialysisRun drain = simulate_dialysis(bleeding, v0, 10.0, 1e-3);
    const auto& times = drain.trajectory.times;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        const auto& x0 = drain.trajectory.states[i];
        const auto& x1 = drain.trajectory.states[i + 1];
        double slope = ((x1[0] + x1[1] + x1[2]) - (x0[0] + x0[1] + x0[2])) / drain.trajectory.dt;
        if (std::abs(slope + u0) > 1e-6 * tol_scale) {
            r.pass = false;
            r.detail = "finite-difference volume slope differs from -ufr beyond 1e-6";
            return r;
        }
    }
    r.detail = "volume conserved to 1e-8 with ufr=0; drained at -ufr to 1e-6 under constant withdrawal";
    return r;
}

// ---- criterion 9 ----
CheckResult check_dsl_round_trip(double) {
    CheckResult r{"dsl-round-trip", true, "", 0.0, 10.0};
    Rng rng(909);
    for (std::size_t i = 0; i < 500; ++i) {
        BlockExpr tree = random_dsl_tree(rng, 5);
        std::string text = print_block(tree);
        BlockExpr back = parse_block(text);
        if (back != tree) {
            r.pass = false;
            r.detail = fail_detail("parse(print(e)) != e", i);
            return r;
        }
        if (print_block(back) != text) {
            r.pass = false;
            r.detail = fail_detail("printer not canonical", i);
            return r;
        }
    }
    for (const ShippedModel& m : shipped_models()) {
        if (print_block(parse_block(m.text)) != m.canonical) {
            r.pass = false;
            r.detail = "shipped model " + m.file + " does not print to its golden form";
            return r;
        }
    }
    r.detail = "500 random trees round-trip identically; shipped models match their golden forms";
    return r;
}

} // namespace

const std::vector<ShippedModel>& shipped_models() {
    static const std::vector<ShippedModel> models = {
        {"arms_trunk.bdg",
         "# Arms-trunk fluid exchange with kA = 1/10, kTA = 1/20:\n"
         "# a constant gain kTA in series with the pole 1/(s + kA).\n"
         "ser[\n"
         "  tf(1/20; 1),\n"
         "  tf(1; 1/10, 1)\n"
         "]\n",
         "ser[tf(1/20;1),tf(1;1/10,1)]"},
        {"closed_loop.bdg",
         "# Unity negative feedback around 1/(s+1); the junction sign is\n"
         "# carried inside the feedback path block.\n"
         "fb(tf(1; 1, 1), tf(-1; 1))\n",
         "fb(tf(1;1,1),tf(-1;1))"},
        {"junction.bdg",
         "# A pickoff fan-out of 2/s feeding two first-order branches, summed\n"
         "# with a third path.\n"
         "summ[\n"
         "  pick(tf(2; 0, 1))[tf(1; 1, 1), tf(1; 2, 1)],\n"
         "  tf(1; 3, 1)\n"
         "]\n",
         "summ[pick(tf(2;0,1))[tf(1;1,1),tf(1;2,1)],tf(1;3,1)]"},
    };
    return models;
}

std::vector<std::string> verification_check_names() {
    return {"theorem-reproduction", "block-identities",   "feedback-convergence",
            "laplace-oracle",       "differentiation-rule", "stability-cross-check",
            "time-frequency-consistency", "mass-conservation", "dsl-round-trip"};
}

std::vector<CheckResult> run_verification(double tol_scale, const std::string& only) {
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, std::function<CheckResult(double)>>> checks = {
        {"theorem-reproduction", check_theorem_reproduction},
        {"block-identities", check_block_identities},
        {"feedback-convergence", check_feedback_convergence},
        {"laplace-oracle", check_laplace_oracle},
        {"differentiation-rule", check_differentiation_rule},
        {"stability-cross-check", check_stability_cross_check},
        {"time-frequency-consistency", check_time_frequency},
        {"mass-conservation", check_mass_conservation},
        {"dsl-round-trip", check_dsl_round_trip},
    };
    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        if (!only.empty() && name != only) continue;
        auto start = Clock::now();
        CheckResult result = fn(tol_scale);
        result.duration_s = std::chrono::duration<double>(Clock::now() - start).count();
        if (result.pass && result.budget_s > 0.0 && result.duration_s > result.budget_s) {
            result.pass = false;
            result.detail = "runtime budget exceeded";
        }
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace blocktf
