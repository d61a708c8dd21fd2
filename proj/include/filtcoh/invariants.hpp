#ifndef FILTCOH_INVARIANTS_HPP
#define FILTCOH_INVARIANTS_HPP

#include <optional>

#include "filtcoh/cone.hpp"

namespace filtcoh {

// Per-degree numbers for one model at one filtration level, computed by
// both the rank formula and the direct cone path.
struct CohomologyTable {
    std::string model_name;
    int p = 1;
    int top_degree = 0;
    std::vector<int> b;             // de Rham Betti numbers, 0..topDegree
    std::vector<int> r;             // rank of [omega^{p+1}] on H^i
    std::vector<int> b_phi_formula; // 0..topDegree + 2p + 1
    std::vector<int> b_phi_direct;
    int even_sum = 0;               // over the direct path
    std::optional<int> ell;         // p = 1, topDegree == 2 mod 4
    std::optional<int> k_char;      // p = 0, even topDegree
};

std::vector<int> betti(const GradedModel& m);

// r_i = rank of [omega^q wedge] : H^i -> H^{i+2q} on de Rham cohomology.
std::vector<int> lefschetz_ranks(const GradedModel& m, int q);

// b_i^Phi = b_i - r_{i-2(p+1)} + b_i-(2p+1)} - r_{i-(2p+1)}, out-of-range
// terms read as zero. For p = 1 this is the four-term rank formula; other p
// levels are always cross-checked against the cone path by callers.
std::vector<int> filtered_betti_formula(const GradedModel& m, int p);

CohomologyTable cohomology_table(const ModelPtr& m, int p);

struct Semicharacteristics {
    std::optional<int> ell;     // 1-filtered, defined when topDegree == 2 mod 4
    std::optional<int> k_char;  // primitive (p = 0), defined for even topDegree
};

Semicharacteristics semicharacteristics(const ModelPtr& m);

struct VerificationReport {
    CohomologyTable table;
    bool applicable = false;   // topDegree == 2 mod 4
    bool paths_agree = false;  // formula vs cone, entrywise
    bool pass = false;         // nothing falsified: paths agree and, when
                               // applicable, ell == 0 on both paths
    std::vector<std::string> findings;
};

// Checks the vanishing statement on both computation paths. On 4n-dimensional
// models the parity is reported as data, with no claim attached.
VerificationReport verify_vanishing(const ModelPtr& m);

}  // namespace filtcoh

#endif
