#include <doctest.h>

#include <cmath>

#include "blocktf/dsl.hpp"
#include "blocktf/laplace.hpp"
#include "oracle_helpers.hpp"

using namespace blocktf;

namespace {

RatFunc tf(std::vector<Rat> num, std::vector<Rat> den) { return RatFunc(Poly(num), Poly(den)); }

Signal sig(const std::string& text) { return parse_signal(text); }

} // namespace

TEST_CASE("table transforms of the basic atoms") {
    CHECK(laplace(sig("step")).rational() == tf({rat(1)}, {rat(0), rat(1)}));
    CHECK(laplace(sig("exp(-2)")).rational() == tf({rat(1)}, {rat(2), rat(1)}));
    CHECK(laplace(sig("t")).rational() == tf({rat(1)}, {rat(0), rat(0), rat(1)}));
    // 2/(s+1)^3 expanded
    CHECK(laplace(sig("t^2*exp(-1)")).rational() ==
          tf({rat(2)}, {rat(1), rat(3), rat(3), rat(1)}));
    CHECK(laplace(sig("sin(5)")).rational() == tf({rat(5)}, {rat(25), rat(0), rat(1)}));
    CHECK(laplace(sig("cos(5)")).rational() == tf({rat(0), rat(1)}, {rat(25), rat(0), rat(1)}));
    // L[t cos t] = (s^2 - 1)/(s^2 + 1)^2
    CHECK(laplace(sig("t*cos(1)")).rational() ==
          tf({rat(-1), rat(0), rat(1)}, {rat(1), rat(0), rat(2), rat(0), rat(1)}));
}

TEST_CASE("linearity combines like delays into one rational function") {
    SDomainExpr F = laplace(sig("3*step + 2*exp(-2)"));
    CHECK(F.is_rational());
    // (5s+6)/(s(s+2))
    CHECK(F.rational() == tf({rat(6), rat(5)}, {rat(0), rat(2), rat(1)}));
}

TEST_CASE("delays become exponential factors with ascending distinct delays") {
    SDomainExpr F = laplace(sig("delay(3, step) + exp(-1)"));
    REQUIRE(F.terms().size() == 2);
    CHECK(F.terms()[0].delay == rat(0));
    CHECK(F.terms()[1].delay == rat(3));
    CHECK(F.terms()[1].tf == tf({rat(1)}, {rat(0), rat(1)}));
    CHECK(F.to_string() == "tf(1;1,1) + exp(-3*s)*tf(1;0,1)");
}

TEST_CASE("structural linearity on random catalog pairs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Signal g1 = parse_signal("t*exp(-1) + sin(2)");
        Signal g2 = parse_signal("delay(1, step) + cos(3)*exp(-2)");
        Rat c1 = oracle::random_rat(rng, -6, 6, 3);
        Rat c2 = oracle::random_rat(rng, -6, 6, 3);
        SDomainExpr lhs = laplace(g1.scaled(c1) + g2.scaled(c2));
        SDomainExpr rhs = laplace(g1).scaled(c1) + laplace(g2).scaled(c2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadrature oracle agrees with the frozen closed forms") {
    // L[e^{-2t}](1) = 1/3
    std::complex<double> v = numeric_lt(sig("exp(-2)"), {1.0, 0.0}, 40.0, 4000);
    CHECK(std::abs(v - std::complex<double>(1.0 / 3.0, 0.0)) <= 1e-6);

    // L[step](2) = 1/2 with the tail-bound horizon
    Signal step = Signal::step();
    double horizon = default_horizon(step, {2.0, 0.0}, 1e-8);
    std::complex<double> w = numeric_lt(step, {2.0, 0.0}, horizon, 4000);
    CHECK(std::abs(w - std::complex<double>(0.5, 0.0)) <= 1e-6);

    CHECK_THROWS_AS(numeric_lt(sig("exp(3)"), {1.0, 0.0}, 10.0, 100), MathError);
}

TEST_CASE("delayed atoms stay accurate through the split quadrature") {
    Signal g = sig("delay(3, exp(-1))");
    std::complex<double> s0{1.5, 0.7};
    std::complex<double> sym = laplace(g).eval(s0);
    std::complex<double> num = numeric_lt(g, s0, default_horizon(g, s0, 1e-9), 4000);
    CHECK(std::abs(sym - num) <= 1e-6 * std::max(1.0, std::abs(sym)));
}

TEST_CASE("existence follows the witness region") {
    CHECK(lt_exists(sig("exp(-2)"), {1.0, 0.0}));
    CHECK_FALSE(lt_exists(sig("exp(3)"), {1.0, 0.0}));
    CHECK(lt_exists(Signal::step(), {0.1, 10.0}));
}

TEST_CASE("witness examples and soundness") {
    ExpOrderWitness w1 = exp_order_witness(sig("exp(-2)"));
    CHECK(w1.M == doctest::Approx(1.0));
    CHECK(w1.a == doctest::Approx(-2.0));

    ExpOrderWitness w2 = exp_order_witness(sig("t*exp(1)"));
    CHECK(w2.a == doctest::Approx(2.0));  // rate 1 plus the margin
    CHECK(w2.M >= 1.0 / std::exp(1.0) - 1e-12);

    ExpOrderWitness w3 = exp_order_witness(sig("sin(5)"));
    CHECK(w3.M == doctest::Approx(1.0));
    CHECK(w3.a == doctest::Approx(1.0));

    // |g(t)| <= M e^{at} on a dense grid
    Signal g = sig("t*exp(1)");
    for (int i = 0; i <= 5000; ++i) {
        double t = 50.0 * i / 5000.0;
        CHECK(std::abs(g.value_at(t)) <= w2.M * std::exp(w2.a * t) * (1.0 + 1e-12));
    }
}

TEST_CASE("witness soundness for random signals on a log grid") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> npick(0, 2), opick(0, 2), dpick(0, 1);
    for (int i = 0; i < 25; ++i) {
        std::vector<SignalAtom> atoms;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < n; ++k) {
            SignalAtom a;
            a.coeff = oracle::random_rat(rng, -8, 8, 3);
            if (rat_is_zero(a.coeff)) a.coeff = rat(1);
            a.power = static_cast<unsigned>(npick(rng));
            a.rate = oracle::random_rat(rng, -3, 2, 2);
            int o = opick(rng);
            if (o) {
                a.osc = o == 1 ? Osc::sine : Osc::cosine;
                a.freq = oracle::random_rat(rng, 1, 5, 2);
            }
            if (dpick(rng)) a.delay = oracle::random_rat(rng, 1, 3, 2);
            atoms.push_back(a);
        }
        Signal g{std::move(atoms)};
        ExpOrderWitness w = exp_order_witness(g);
        CHECK(w.M > 0.0);
        for (int k = 0; k < 10000; ++k) {
            double t = std::pow(10.0, -2.0 + 4.0 * k / 9999.0);  // log-spaced in [0.01, 100]
            double bound = w.M * std::exp(w.a * t);
            if (!(std::abs(g.value_at(t)) <= bound * (1.0 + 1e-9))) {
                CHECK(std::abs(g.value_at(t)) <= bound * (1.0 + 1e-9));
                break;
            }
        }
    }
}

TEST_CASE("differentiation rule bridges the transform") {
    for (const char* text : {"exp(-2)", "t^2*exp(-1)", "cos(3)", "t*sin(2) + 4*exp(1)"}) {
        Signal g = sig(text);
        Signal dg = g.derivative();
        double a = std::max(exp_order_witness(g).a, exp_order_witness(dg).a);
        std::complex<double> s0{a + 1.5, 0.8};
        std::complex<double> lhs = laplace(dg).eval(s0);
        std::complex<double> rhs = s0 * laplace(g).eval(s0) - g.at_zero();
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
    CHECK_THROWS_AS(sig("delay(1, step)").derivative(), MathError);
}

TEST_CASE("signal evaluation and right-limits") {
    Signal g = sig("2*step + t - cos(4)");
    CHECK(g.at_zero() == doctest::Approx(1.0));  // 2 - 1
    CHECK(g.value_at(0.0) == doctest::Approx(1.0));
    Signal d = sig("delay(2, step)");
    CHECK(d.value_at(1.9) == doctest::Approx(0.0));
    CHECK(d.value_at(2.1) == doctest::Approx(1.0));
}
