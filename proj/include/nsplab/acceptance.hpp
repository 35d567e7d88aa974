#pragma once

#include "nsplab/thermo.hpp"

#include <string>
#include <vector>

namespace nsplab::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The reference fan (v_- = 1, u_- = 0, v_m = 1.1, v_+ = 1.2): u_+ is the
// closed-form chained wave-curve value, then recovered through solve_riemann.
thermo::RiemannFan reference_fan();

// Pure-shock fan with v_minus = v_mid (degenerate rarefaction).
thermo::RiemannFan shock_only_fan(double v_mid, double u_mid, double delta_S);

CriterionResult criterion_riemann();           // 1
CriterionResult criterion_shock_profile();     // 2
CriterionResult criterion_rarefaction();       // 3
CriterionResult criterion_poisson();           // 4
CriterionResult criterion_steady_profile();    // 5
CriterionResult criterion_stability();         // 6
CriterionResult criterion_shift_linearity();   // 7
CriterionResult criterion_eta_equivalence(unsigned seed); // 8
CriterionResult criterion_interaction();       // 9

// ids: empty means all nine. threads > 1 runs independent criteria
// concurrently (results are returned in id order either way).
std::vector<CriterionResult> run(const std::vector<int>& ids, unsigned seed,
                                 unsigned threads = 1);

std::string format_line(const CriterionResult& r);

} // namespace nsplab::acceptance
