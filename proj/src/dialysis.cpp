#include "blocktf/dialysis.hpp"

#include <stdexcept>

namespace blocktf {

ArmsTrunkParams::ArmsTrunkParams(Rat kA_, Rat kTA_) : kA(std::move(kA_)), kTA(std::move(kTA_)) {
    if (sgn(kA) <= 0) throw std::invalid_argument("kA must be positive");
    if (sgn(kTA) <= 0) throw std::invalid_argument("kTA must be positive");
}

LinODE build_arms_trunk_ode(const ArmsTrunkParams& p) {
    return LinODE({p.kA, Rat(1)}, {p.kTA});
}

BlockExpr blk_diag_rep_at(const ArmsTrunkParams& p) {
    RatFunc gain = RatFunc::constant(p.kTA);
    RatFunc pole = RatFunc(Poly::constant(Rat(1)), Poly(std::vector<Rat>{p.kA, Rat(1)}));
    return BlockExpr::series({BlockExpr::leaf(gain), BlockExpr::leaf(pole)});
}

TheoremReport theorem_checks(const ArmsTrunkParams& p) {
    TheoremReport report;
    RatFunc from_diagram = reduce(blk_diag_rep_at(p));
    RatFunc from_ode = transfer_function(build_arms_trunk_ode(p));
    report.routes_agree = from_diagram == from_ode;
    report.tf = from_ode;

    RatFunc unity(Poly::constant(Rat(1)), Poly(std::vector<Rat>{p.kA, Rat(1)}));
    if (p.kTA == Rat(1)) {
        report.unity_kta_form = from_diagram == unity && from_ode == unity;
    } else {
        // the unity-numerator form needs kTA = 1; check that specialization
        ArmsTrunkParams specialized(p.kA, Rat(1));
        report.unity_kta_form = reduce(blk_diag_rep_at(specialized)) == unity &&
                                transfer_function(build_arms_trunk_ode(specialized)) == unity;
        report.discrepancy_note =
            "arms-trunk gain is kTA/(s+kA) = " + from_ode.to_string() +
            "; the unity-numerator form 1/(s+kA) holds only for kTA=1";
    }

    report.verdict = classify(from_ode);
    report.stable = report.verdict.classification == Classification::stable;
    return report;
}

} // namespace blocktf
