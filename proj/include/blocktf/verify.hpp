#ifndef BLOCKTF_VERIFY_HPP
#define BLOCKTF_VERIFY_HPP

#include <string>
#include <vector>

namespace blocktf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double duration_s = 0.0;    // reported by the acceptance runner only
    double budget_s = 0.0;      // wall-clock budget, part of the criterion
};

// Shipped example model: file name, file content, canonical printed form.
struct ShippedModel {
    std::string file;
    std::string text;
    std::string canonical;
};

const std::vector<ShippedModel>& shipped_models();

// The property/oracle suite behind `blocktf verify`. All randomness is
// seeded, so repeated runs are bit-reproducible. tol_scale multiplies every
// tolerance (1.0 = the published values; a diagnostic knob, not a default).
std::vector<CheckResult> run_verification(double tol_scale = 1.0, const std::string& only = "");

std::vector<std::string> verification_check_names();

} // namespace blocktf

#endif
