#include "blocktf/blockdiag.hpp"

#include <cmath>
#include <stdexcept>

namespace blocktf {

BlockExpr BlockExpr::leaf(RatFunc r) {
    BlockExpr e;
    e.kind_ = Kind::leaf;
    e.tf_ = std::move(r);
    return e;
}

BlockExpr BlockExpr::series(std::vector<BlockExpr> children) {
    if (children.empty()) throw std::invalid_argument("series needs at least one block");
    BlockExpr e;
    e.kind_ = Kind::series;
    e.kids_ = std::move(children);
    return e;
}

BlockExpr BlockExpr::summation(std::vector<BlockExpr> children) {
    if (children.empty()) throw std::invalid_argument("summation needs at least one block");
    BlockExpr e;
    e.kind_ = Kind::summation;
    e.kids_ = std::move(children);
    return e;
}

BlockExpr BlockExpr::pickoff(BlockExpr alpha, std::vector<BlockExpr> children) {
    if (children.empty()) throw std::invalid_argument("pickoff needs at least one branch");
    BlockExpr e;
    e.kind_ = Kind::pickoff;
    e.kids_.reserve(children.size() + 1);
    e.kids_.push_back(std::move(alpha));
    for (BlockExpr& c : children) e.kids_.push_back(std::move(c));
    return e;
}

BlockExpr BlockExpr::feedback(BlockExpr forward, BlockExpr back) {
    BlockExpr e;
    e.kind_ = Kind::feedback;
    e.kids_.push_back(std::move(forward));
    e.kids_.push_back(std::move(back));
    return e;
}

const RatFunc& BlockExpr::tf() const {
    if (kind_ != Kind::leaf) throw std::logic_error("tf() on a non-leaf node");
    return tf_;
}

const std::vector<BlockExpr>& BlockExpr::children() const { return kids_; }

const BlockExpr& BlockExpr::pick_alpha() const {
    if (kind_ != Kind::pickoff) throw std::logic_error("pick_alpha() on a non-pickoff node");
    return kids_[0];
}

const BlockExpr& BlockExpr::forward() const {
    if (kind_ != Kind::feedback) throw std::logic_error("forward() on a non-feedback node");
    return kids_[0];
}

const BlockExpr& BlockExpr::back() const {
    if (kind_ != Kind::feedback) throw std::logic_error("back() on a non-feedback node");
    return kids_[1];
}

bool BlockExpr::operator==(const BlockExpr& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::leaf) return tf_ == o.tf_;
    if (kids_.size() != o.kids_.size()) return false;
    for (std::size_t i = 0; i < kids_.size(); ++i)
        if (!(kids_[i] == o.kids_[i])) return false;
    return true;
}

RatFunc reduce(const BlockExpr& e) {
    switch (e.kind()) {
        case BlockExpr::Kind::leaf:
            return e.tf();
        case BlockExpr::Kind::series: {
            RatFunc acc = RatFunc::one();
            for (const BlockExpr& c : e.children()) {
                if (c.kind() == BlockExpr::Kind::pickoff)
                    throw MathError("pickoff has multiple outputs and cannot sit in a series path");
                acc = acc * reduce(c);
            }
            return acc;
        }
        case BlockExpr::Kind::summation: {
            RatFunc acc = RatFunc::zero();
            for (const BlockExpr& c : e.children()) {
                if (c.kind() == BlockExpr::Kind::pickoff) {
                    // every fan-out branch arrives at the junction
                    RatFunc alpha = reduce(c.pick_alpha());
                    for (std::size_t i = 1; i < c.children().size(); ++i)
                        acc = acc + alpha * reduce(c.children()[i]);
                } else {
                    acc = acc + reduce(c);
                }
            }
            return acc;
        }
        case BlockExpr::Kind::pickoff:
            throw MathError("pickoff has multiple outputs; reduce it via pick_outputs or a summation");
        case BlockExpr::Kind::feedback: {
            RatFunc alpha = reduce(e.forward());
            RatFunc beta = reduce(e.back());
            RatFunc loop = RatFunc::one() - alpha * beta;
            if (loop.is_zero()) throw MathError("algebraic loop: 1 - alpha*beta is identically zero");
            return alpha / loop;
        }
    }
    throw std::logic_error("unreachable block kind");
}

RatFunc branch(const RatFunc& alpha, const RatFunc& beta, unsigned n) {
    RatFunc ab = alpha * beta;
    RatFunc acc = RatFunc::one();
    for (unsigned i = 0; i < n; ++i) acc = acc * ab;
    return acc;
}

std::complex<double> feedback_truncated(const RatFunc& alpha, const RatFunc& beta, unsigned N,
                                        std::complex<double> s0) {
    std::complex<double> a = alpha.eval(s0);
    std::complex<double> ab = a * beta.eval(s0);
    if (std::abs(ab) >= 1.0) throw MathError("branch expansion diverges: |alpha*beta(s0)| >= 1");
    std::complex<double> sum(0.0, 0.0), pw(1.0, 0.0);
    for (unsigned k = 0; k <= N; ++k) {
        sum += pw;
        pw *= ab;
    }
    return a * sum;
}

std::vector<RatFunc> pick_outputs(const RatFunc& alpha, const std::vector<RatFunc>& children) {
    if (children.empty()) throw std::invalid_argument("pickoff needs at least one branch");
    std::vector<RatFunc> out;
    out.reserve(children.size());
    for (const RatFunc& c : children) out.push_back(alpha * c);
    return out;
}

} // namespace blocktf
