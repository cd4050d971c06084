#include <doctest.h>

#include "blocktf/stability.hpp"
#include "oracle_helpers.hpp"

using namespace blocktf;

namespace {

RatFunc tf(std::vector<Rat> num, std::vector<Rat> den) { return RatFunc(Poly(num), Poly(den)); }

} // namespace

TEST_CASE("Routh array counts right-half-plane roots") {
    RouthResult r1 = routh_hurwitz(Poly({rat(1, 10), rat(1)}));  // s + kA
    CHECK_FALSE(r1.degenerate);
    CHECK(r1.sign_changes == 0);

    // s^2 - 1: zero s^1 row handled exactly through the auxiliary
    // polynomial derivative, still flagged as a boundary case
    RouthResult r2 = routh_hurwitz(Poly({rat(-1), rat(0), rat(1)}));
    CHECK(r2.degenerate);
    CHECK(r2.sign_changes == 1);

    RouthResult r3 = routh_hurwitz(Poly({rat(1), rat(1), rat(1), rat(1)}));  // (s+1)(s^2+1)
    CHECK(r3.degenerate);

    RouthResult hurwitz = routh_hurwitz(Poly({rat(2), rat(3), rat(1)}));
    CHECK_FALSE(hurwitz.degenerate);
    CHECK(hurwitz.sign_changes == 0);

    RouthResult anti = routh_hurwitz(Poly({rat(2), rat(-3), rat(1)}));  // roots 1, 2
    CHECK_FALSE(anti.degenerate);
    CHECK(anti.sign_changes == 2);

    CHECK_THROWS_AS(routh_hurwitz(Poly()), MathError);
}

TEST_CASE("classification follows the pole locations") {
    StabilityVerdict stable = classify(tf({rat(1)}, {rat(1, 10), rat(1)}));
    CHECK(stable.classification == Classification::stable);
    CHECK(stable.method == VerdictMethod::both);
    REQUIRE(stable.poles.size() == 1);
    CHECK(stable.poles[0].real() == doctest::Approx(-0.1));

    CHECK(classify(tf({rat(1)}, {rat(-1), rat(1)})).classification == Classification::unstable);
    CHECK(classify(tf({rat(1)}, {rat(4), rat(0), rat(1)})).classification == Classification::marginal);

    // the pole oracle confirms the boundary case (s+1)(s^2+1)
    StabilityVerdict v = classify(tf({rat(1)}, {rat(1), rat(1), rat(1), rat(1)}));
    CHECK(v.classification == Classification::marginal);
    CHECK(v.method == VerdictMethod::poles_numeric);

    // a repeated on-axis pair is not marginal
    Poly dbl = oracle::conv_poly({rat(4), rat(0), rat(1)}, {rat(4), rat(0), rat(1)});
    CHECK(classify(RatFunc(Poly::constant(rat(1)), dbl)).classification == Classification::unstable);
}

TEST_CASE("classification ignores scaling and removable pairs") {
    RatFunc base = tf({rat(1)}, {rat(2), rat(1)});
    for (long c : {2L, -3L, 7L}) {
        StabilityVerdict v = classify(RatFunc::constant(rat(c)) * base);
        CHECK(v.classification == Classification::stable);
    }
    // (s-1)/((s-1)(s+2)) normalizes before classification
    Poly den = oracle::conv_poly({rat(-1), rat(1)}, {rat(2), rat(1)});
    RatFunc cancelling(Poly({rat(-1), rat(1)}), den);
    CHECK(classify(cancelling).classification == Classification::stable);
    CHECK(classify(cancelling).poles.size() == 1);
}

TEST_CASE("verdict and pole evidence stay coherent") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 60; ++i) {
        RatFunc r = oracle::random_ratfunc(rng, 5);
        if (r.den().degree() < 1) continue;
        StabilityVerdict v = classify(r);
        bool any_right = false, all_left = true;
        for (const auto& p : v.poles) {
            if (p.real() > 1e-9) any_right = true;
            if (p.real() >= -1e-9) all_left = false;
        }
        if (v.classification == Classification::stable) CHECK(all_left);
        if (any_right) CHECK(v.classification == Classification::unstable);
    }
}

TEST_CASE("Routh agrees with the numeric pole count") {
    CHECK(cross_check(Poly({rat(2), rat(3), rat(1)})));
    CHECK(cross_check(Poly({rat(2), rat(-3), rat(1)})));
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<int> deg(1, 6);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = oracle::random_rat(rng, -5, 5, 4);
        if (rat_is_zero(c.back())) c.back() = rat(1);
        Poly p{std::move(c)};
        if (routh_hurwitz(p).degenerate) continue;
        CHECK(cross_check(p));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("verdict JSON shape is fixed") {
    StabilityVerdict v = classify(tf({rat(1)}, {rat(1, 10), rat(1)}));
    std::string json = v.to_json();
    CHECK(json.find("{\"classification\":\"stable\",\"poles\":[[") == 0);
    CHECK(json.find("\"method\":\"both\"}") != std::string::npos);
}
