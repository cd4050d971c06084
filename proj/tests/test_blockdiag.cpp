#include <doctest.h>

#include <cmath>

#include "blocktf/blockdiag.hpp"
#include "oracle_helpers.hpp"

using namespace blocktf;

namespace {

RatFunc tf(std::vector<Rat> num, std::vector<Rat> den) { return RatFunc(Poly(num), Poly(den)); }

BlockExpr leaf(std::vector<Rat> num, std::vector<Rat> den) { return BlockExpr::leaf(tf(num, den)); }

} // namespace

TEST_CASE("series reduces to the product") {
    // expected denominator (s+1)(s+2) from the convolution oracle
    Poly want_den = oracle::conv_poly({rat(1), rat(1)}, {rat(2), rat(1)});
    CHECK(want_den == Poly({rat(2), rat(3), rat(1)}));
    BlockExpr e = BlockExpr::series({leaf({rat(1)}, {rat(1), rat(1)}), leaf({rat(1)}, {rat(2), rat(1)})});
    CHECK(reduce(e) == RatFunc(Poly::constant(rat(1)), want_den));
}

TEST_CASE("single-element summation is the identity") {
    RatFunc g = tf({rat(2), rat(1)}, {rat(3), rat(0), rat(1)});
    CHECK(reduce(BlockExpr::summation({BlockExpr::leaf(g)})) == g);
    CHECK(reduce(BlockExpr::leaf(g)) == g);
}

TEST_CASE("feedback closes to alpha/(1 - alpha beta)") {
    RatFunc alpha = tf({rat(1)}, {rat(1), rat(1)});
    // beta = +1: alpha/(1 - alpha) = 1/s
    CHECK(reduce(BlockExpr::feedback(BlockExpr::leaf(alpha), BlockExpr::leaf(RatFunc::one()))) ==
          tf({rat(1)}, {rat(0), rat(1)}));
    // beta = -1 (negative feedback stored in beta): 1/(s+2)
    CHECK(reduce(BlockExpr::feedback(BlockExpr::leaf(alpha),
                                     BlockExpr::leaf(RatFunc::constant(rat(-1))))) ==
          tf({rat(1)}, {rat(2), rat(1)}));
}

TEST_CASE("algebraic loops are rejected") {
    BlockExpr loop = BlockExpr::feedback(BlockExpr::leaf(RatFunc::one()), BlockExpr::leaf(RatFunc::one()));
    CHECK_THROWS_AS(reduce(loop), MathError);
}

TEST_CASE("branch is the k-th loop traversal") {
    CHECK(branch(RatFunc::constant(rat(7)), RatFunc::constant(rat(9)), 0) == RatFunc::one());
    CHECK(branch(RatFunc::constant(rat(2)), RatFunc::constant(rat(3)), 2) == RatFunc::constant(rat(36)));
    // (1/(s+1))^3 via the repeated-multiplication oracle
    std::vector<Rat> sp1{rat(1), rat(1)};
    Poly cube = oracle::conv_poly(oracle::conv(sp1, sp1), sp1);
    CHECK(branch(tf({rat(1)}, sp1), RatFunc::one(), 3) == RatFunc(Poly::constant(rat(1)), cube));
}

TEST_CASE("truncated branch sum approaches the closed loop geometrically") {
    RatFunc half = RatFunc::constant(rat(1, 2));
    std::complex<double> sum = feedback_truncated(half, half, 20, {0.0, 0.0});
    // limit 2/3; the N=20 partial sum sits within (1/4)^21/(1 - 1/4)
    double bound = std::pow(0.25, 21) / 0.75;
    CHECK(std::abs(sum - std::complex<double>(2.0 / 3.0, 0.0)) <= bound);

    RatFunc g = tf({rat(2), rat(1)}, {rat(4), rat(1)});
    std::complex<double> s0{1.0, 0.5};
    CHECK(std::abs(feedback_truncated(g, RatFunc::zero(), 7, s0) - g.eval(s0)) <= 1e-14);

    RatFunc alpha = tf({rat(1)}, {rat(1), rat(1)});
    RatFunc closed = reduce(BlockExpr::feedback(BlockExpr::leaf(alpha), BlockExpr::leaf(RatFunc::one())));
    std::complex<double> s1{4.0, 0.0};
    CHECK(std::abs(feedback_truncated(alpha, RatFunc::one(), 30, s1) - closed.eval(s1)) <= 1e-9);

    CHECK_THROWS_AS(feedback_truncated(RatFunc::one(), RatFunc::one(), 5, {1.0, 0.0}), MathError);
}

TEST_CASE("truncation error obeys the tail bound for several depths") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> re(-2.0, 4.0), im(-3.0, 3.0);
    int evaluated = 0;
    while (evaluated < 20) {
        RatFunc alpha = oracle::random_ratfunc(rng, 3);
        RatFunc beta = oracle::random_ratfunc(rng, 3);
        std::complex<double> s0{re(rng), im(rng)};
        try {
            std::complex<double> a = alpha.eval(s0);
            std::complex<double> ab = a * beta.eval(s0);
            double gain = std::abs(ab);
            if (gain > 0.9 || std::abs(a) > 3.0) continue;
            RatFunc closed =
                reduce(BlockExpr::feedback(BlockExpr::leaf(alpha), BlockExpr::leaf(beta)));
            std::complex<double> exact = closed.eval(s0);
            for (unsigned N : {5u, 10u, 20u}) {
                double err = std::abs(feedback_truncated(alpha, beta, N, s0) - exact);
                double bound = std::pow(gain, N + 1) * std::abs(a) / (1.0 - gain);
                CHECK(err <= bound + 64.0 * 1e-16 * (std::abs(a) + 1.0));
            }
            ++evaluated;
        } catch (const MathError&) {
            // pole or divergent loop at this sample; redraw
        }
    }
}

TEST_CASE("pickoff fans out with the upstream factor") {
    RatFunc g1 = tf({rat(1)}, {rat(1), rat(1)});
    RatFunc g2 = tf({rat(1)}, {rat(2), rat(1)});
    auto outs = pick_outputs(RatFunc::one(), {g1, g2});
    CHECK(outs == std::vector<RatFunc>{g1, g2});

    auto scaled = pick_outputs(tf({rat(2)}, {rat(0), rat(1)}), {g1});
    // 2/(s(s+1)) via the multiplication oracle
    CHECK(scaled[0] == RatFunc(Poly::constant(rat(2)), oracle::conv_poly({rat(0), rat(1)}, {rat(1), rat(1)})));

    CHECK_THROWS_AS(pick_outputs(g1, {}), std::invalid_argument);
}

TEST_CASE("pickoff reduces only through a summation junction") {
    RatFunc alpha = tf({rat(2)}, {rat(0), rat(1)});
    RatFunc g1 = tf({rat(1)}, {rat(1), rat(1)});
    RatFunc g2 = tf({rat(1)}, {rat(2), rat(1)});
    BlockExpr pick = BlockExpr::pickoff(BlockExpr::leaf(alpha), {BlockExpr::leaf(g1), BlockExpr::leaf(g2)});

    CHECK_THROWS_AS(reduce(pick), MathError);
    CHECK_THROWS_AS(reduce(BlockExpr::series({pick, BlockExpr::leaf(g1)})), MathError);

    RatFunc summed = reduce(BlockExpr::summation({pick}));
    CHECK(summed == alpha * g1 + alpha * g2);
}

TEST_CASE("reduction is invariant under flattening and permutation") {
    std::mt19937_64 rng(51);
    RatFunc a = oracle::random_ratfunc(rng, 2);
    RatFunc b = oracle::random_ratfunc(rng, 2);
    RatFunc c = oracle::random_ratfunc(rng, 2);
    BlockExpr nested = BlockExpr::series(
        {BlockExpr::leaf(a), BlockExpr::series({BlockExpr::leaf(b), BlockExpr::leaf(c)})});
    BlockExpr flat = BlockExpr::series({BlockExpr::leaf(a), BlockExpr::leaf(b), BlockExpr::leaf(c)});
    BlockExpr permuted = BlockExpr::series({BlockExpr::leaf(c), BlockExpr::leaf(a), BlockExpr::leaf(b)});
    CHECK(reduce(nested) == reduce(flat));
    CHECK(reduce(permuted) == reduce(flat));

    BlockExpr sum1 = BlockExpr::summation({BlockExpr::leaf(a), BlockExpr::leaf(b)});
    BlockExpr sum2 = BlockExpr::summation({BlockExpr::leaf(b), BlockExpr::leaf(a)});
    CHECK(reduce(sum1) == reduce(sum2));
}

TEST_CASE("empty composition lists are rejected at construction") {
    CHECK_THROWS_AS(BlockExpr::series({}), std::invalid_argument);
    CHECK_THROWS_AS(BlockExpr::summation({}), std::invalid_argument);
    CHECK_THROWS_AS(BlockExpr::pickoff(BlockExpr::leaf(RatFunc::one()), {}), std::invalid_argument);
}
