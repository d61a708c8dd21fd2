#include "filtcoh/report.hpp"

#include <sstream>

namespace filtcoh {

namespace {

std::string row(const std::vector<int>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::vector<int> even_part(const std::vector<int>& v)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < v.size(); k += 2) out.push_back(v[k]);
    return out;
}

}  // namespace

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "filtcoh " << r.tool_version << "  command=" << r.command << "  model=" << r.model_name
       << "  hash=" << r.model_hash << "\n";
    if (r.betti_row) os << "  betti = " << row(*r.betti_row) << "\n";
    for (const auto& t : r.tables) {
        os << "  p = " << t.p << "\n";
        os << "    b      = " << row(t.b) << "\n";
        os << "    r      = " << row(t.r) << "\n";
        if (r.all_degrees) {
            os << "    b^phi (formula) = " << row(t.b_phi_formula) << "\n";
            os << "    b^phi (cone)    = " << row(t.b_phi_direct) << "\n";
        }
        os << "    b^phi even      = " << row(even_part(t.b_phi_direct)) << "\n";
        os << "    even sum        = " << t.even_sum << "\n";
        if (t.ell) os << "    ell             = " << *t.ell << "\n";
        if (t.k_char) os << "    k               = " << *t.k_char << "\n";
    }
    if (r.semis) {
        os << "  ell = " << (r.semis->ell ? std::to_string(*r.semis->ell) : std::string("n/a"))
           << "  k = " << (r.semis->k_char ? std::to_string(*r.semis->k_char) : std::string("n/a")) << "\n";
    }
    if (r.ops) {
        os << "  hodge even kernel dim = " << r.ops->hodge_kernel_dim
           << "  (even b^psi sum " << r.ops->even_betti_sum << ")\n";
        os << "  D: size " << r.ops->d_size << ", rank " << r.ops->d_rank << ", kernel dim "
           << r.ops->d_kernel_dim << ", kernel parity " << r.ops->d_parity;
        if (r.ops->ell) os << ", ell " << *r.ops->ell;
        os << "\n";
    }
    if (r.verify_applicable.has_value())
        os << "  vanishing statement " << (*r.verify_applicable ? "applicable" : "not applicable") << "\n";
    if (r.verify_pass.has_value()) os << "  verify: " << (*r.verify_pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.findings) os << "  finding: " << f << "\n";
    return os.str();
}

nlohmann::json render_json(const Report& r)
{
    nlohmann::json j;
    j["provenance"] = {{"tool_version", r.tool_version},
                       {"model", r.model_name},
                       {"model_hash", r.model_hash},
                       {"p_values", r.p_values}};
    j["command"] = r.command;
    if (r.betti_row) j["betti"] = *r.betti_row;
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& t : r.tables) {
        nlohmann::json tj;
        tj["p"] = t.p;
        tj["b"] = t.b;
        tj["r"] = t.r;
        tj["b_phi_formula"] = t.b_phi_formula;
        tj["b_phi_direct"] = t.b_phi_direct;
        tj["even_sum"] = t.even_sum;
        if (t.ell) tj["ell"] = *t.ell;
        if (t.k_char) tj["k"] = *t.k_char;
        tables.push_back(tj);
    }
    if (!tables.empty()) j["tables"] = tables;
    if (r.semis) {
        if (r.semis->ell)
            j["ell"] = *r.semis->ell;
        else
            j["ell"] = nullptr;
        if (r.semis->k_char)
            j["k"] = *r.semis->k_char;
        else
            j["k"] = nullptr;
    }
    if (r.ops) {
        j["ops"] = {{"hodge_even_kernel_dim", r.ops->hodge_kernel_dim},
                    {"even_betti_sum", r.ops->even_betti_sum},
                    {"d_size", r.ops->d_size},
                    {"d_rank", r.ops->d_rank},
                    {"d_kernel_dim", r.ops->d_kernel_dim},
                    {"d_kernel_parity", r.ops->d_parity}};
        if (r.ops->ell) j["ops"]["ell"] = *r.ops->ell;
    }
    if (r.verify_applicable.has_value()) j["applicable"] = *r.verify_applicable;
    if (r.verify_pass.has_value()) j["pass"] = *r.verify_pass;
    j["findings"] = r.findings;
    return j;
}

}  // namespace filtcoh
