#ifndef BLOCKTF_BLOCKDIAG_HPP
#define BLOCKTF_BLOCKDIAG_HPP

#include <complex>
#include <vector>

#include "blocktf/ratfunc.hpp"

namespace blocktf {

// Composition tree for block diagrams: leaves are transfer functions, inner
// nodes are series products, summation junctions, pickoff fan-outs and
// feedback loops. Trees are immutable values.
class BlockExpr {
  public:
    enum class Kind { leaf, series, summation, pickoff, feedback };

    static BlockExpr leaf(RatFunc r);
    static BlockExpr series(std::vector<BlockExpr> children);        // nonempty
    static BlockExpr summation(std::vector<BlockExpr> children);     // nonempty
    static BlockExpr pickoff(BlockExpr alpha, std::vector<BlockExpr> children);  // nonempty
    static BlockExpr feedback(BlockExpr forward, BlockExpr back);

    Kind kind() const { return kind_; }
    const RatFunc& tf() const;                          // leaf only
    const std::vector<BlockExpr>& children() const;     // series/summation and pickoff branches
    const BlockExpr& pick_alpha() const;                // pickoff only
    const BlockExpr& forward() const;                   // feedback only
    const BlockExpr& back() const;                      // feedback only

    bool operator==(const BlockExpr& o) const;
    bool operator!=(const BlockExpr& o) const { return !(*this == o); }

  private:
    BlockExpr() = default;
    Kind kind_ = Kind::leaf;
    RatFunc tf_;
    // pickoff stores alpha at kids_[0] and the branches after it;
    // feedback stores {forward, back}
    std::vector<BlockExpr> kids_;
};

// Exact reduction to one transfer function: series multiplies, summation
// adds, feedback(alpha, beta) closes to alpha/(1 - alpha*beta) (the feedback
// junction sign travels inside beta). A pickoff node has multiple outputs
// and reduces only inside a summation junction, where every branch is
// consumed; elsewhere it raises MathError, as does a feedback loop with
// 1 - alpha*beta identically zero.
RatFunc reduce(const BlockExpr& e);

// (alpha*beta)^n: the n-th loop traversal. Index 0 is the empty product, so
// alpha * sum_k branch(alpha, beta, k) telescopes to the closed loop.
RatFunc branch(const RatFunc& alpha, const RatFunc& beta, unsigned n);

// Partial sum alpha(s0) * sum_{k=0}^{N} (alpha(s0) beta(s0))^k of the
// geometric branch expansion. Requires |alpha(s0) beta(s0)| < 1 and s0 off
// the poles of both.
std::complex<double> feedback_truncated(const RatFunc& alpha, const RatFunc& beta, unsigned N,
                                        std::complex<double> s0);

// Fan-out: [alpha*A_1, ..., alpha*A_N], each normalized. Children nonempty.
std::vector<RatFunc> pick_outputs(const RatFunc& alpha, const std::vector<RatFunc>& children);

} // namespace blocktf

#endif
