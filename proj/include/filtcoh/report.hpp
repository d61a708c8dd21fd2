#ifndef FILTCOH_REPORT_HPP
#define FILTCOH_REPORT_HPP

#include <json.hpp>

#include "filtcoh/invariants.hpp"

namespace filtcoh {

inline constexpr const char* kToolVersion = "0.1.0";

struct OpsNumbers {
    int hodge_kernel_dim = 0;
    int even_betti_sum = 0;
    int d_size = 0;
    int d_rank = 0;
    int d_kernel_dim = 0;
    int d_parity = 0;
    std::optional<int> ell;  // for the parity comparison
};

// One CLI run. The JSON and text renderings carry the same numbers.
struct Report {
    std::string command;
    std::string model_name;
    std::string model_hash;
    std::string tool_version = kToolVersion;
    std::vector<int> p_values;
    bool all_degrees = false;

    std::vector<CohomologyTable> tables;
    std::optional<std::vector<int>> betti_row;
    std::optional<Semicharacteristics> semis;
    std::optional<OpsNumbers> ops;
    std::optional<bool> verify_pass;
    std::optional<bool> verify_applicable;
    std::vector<std::string> findings;
};

std::string render_text(const Report& r);
nlohmann::json render_json(const Report& r);

}  // namespace filtcoh

#endif
