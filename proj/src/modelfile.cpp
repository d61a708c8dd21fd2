#include "filtcoh/modelfile.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

#include "filtcoh/catalog.hpp"

namespace filtcoh {

namespace {

using nlohmann::json;

const std::regex kLabelRe("[A-Za-z][A-Za-z0-9_]*");

void check_label(const std::string& label)
{
    // "1" is accepted as the unit label of ring models
    if (label == "1") return;
    if (!std::regex_match(label, kLabelRe)) throw ParseError("bad label: " + label);
}

void reject_unknown_fields(const json& doc, const std::set<std::string>& allowed)
{
    for (const auto& [key, _] : doc.items())
        if (!allowed.count(key)) throw ParseError("unknown field: " + key);
}

Rational coeff_of(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto q = parse_rational(j.get<std::string>());
        if (q) return *q;
        throw ParseError("bad coefficient: " + j.get<std::string>());
    }
    throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

std::vector<std::string> split_monomial(const std::string& mono)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= mono.size()) {
        std::size_t caret = mono.find('^', start);
        if (caret == std::string::npos) {
            parts.push_back(mono.substr(start));
            break;
        }
        parts.push_back(mono.substr(start, caret - start));
        start = caret + 1;
    }
    for (const auto& p : parts)
        if (p.empty()) throw ParseError("bad monomial: " + mono);
    return parts;
}

// Terms are [monomial, coefficient] pairs.
std::vector<std::pair<std::vector<std::string>, Rational>> parse_terms(const json& j)
{
    if (!j.is_array()) throw ParseError("expected an array of [monomial, coefficient] pairs");
    std::vector<std::pair<std::vector<std::string>, Rational>> out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string())
            throw ParseError("expected [monomial, coefficient] pairs");
        out.emplace_back(split_monomial(t[0].get<std::string>()), coeff_of(t[1]));
    }
    return out;
}

ModelPtr parse_ce(const json& doc, const std::string& name)
{
    reject_unknown_fields(doc, {"schema", "name", "kind", "generators", "differential", "omega"});
    if (!doc.contains("generators")) throw ParseError("ce model needs \"generators\"");
    std::vector<std::string> gens;
    for (const auto& g : doc["generators"]) {
        std::string label = g.get<std::string>();
        check_label(label);
        if (label == "1") throw ParseError("generator may not be named 1");
        gens.push_back(label);
    }
    std::map<std::string, std::vector<TwoFormTerm>> diff;
    if (doc.contains("differential")) {
        for (const auto& [gen, terms] : doc["differential"].items()) {
            std::vector<TwoFormTerm> parsed;
            for (const auto& [mono, c] : parse_terms(terms)) {
                if (mono.size() != 2)
                    throw ParseError("differential of " + gen + " must be a sum of degree-2 monomials");
                parsed.push_back({mono[0], mono[1], c});
            }
            diff[gen] = std::move(parsed);
        }
    }
    std::vector<TwoFormTerm> omega;
    if (doc.contains("omega"))
        for (const auto& [mono, c] : parse_terms(doc["omega"])) {
            if (mono.size() != 2) throw ParseError("omega must be a sum of degree-2 monomials");
            omega.push_back({mono[0], mono[1], c});
        }
    return make_ce_model(name, gens, diff, omega);
}

ModelPtr parse_ring(const json& doc, const std::string& name)
{
    reject_unknown_fields(doc, {"schema", "name", "kind", "basis", "products", "omega"});
    if (!doc.contains("basis")) throw ParseError("ring model needs \"basis\"");
    std::vector<RingBasisSpec> basis;
    for (const auto& b : doc["basis"]) {
        reject_unknown_fields(b, {"label", "degree"});
        std::string label = b.at("label").get<std::string>();
        check_label(label);
        basis.push_back({label, b.at("degree").get<int>()});
    }
    std::vector<RingProductSpec> products;
    if (doc.contains("products")) {
        for (const auto& p : doc["products"]) {
            reject_unknown_fields(p, {"left", "right", "value"});
            RingProductSpec spec;
            spec.left = p.at("left").get<std::string>();
            spec.right = p.at("right").get<std::string>();
            for (const auto& [mono, c] : parse_terms(p.at("value"))) {
                if (mono.size() != 1) throw ParseError("ring product terms are single basis labels");
                spec.value.push_back({mono[0], c});
            }
            products.push_back(std::move(spec));
        }
    }
    std::vector<RingTerm> omega;
    if (doc.contains("omega"))
        for (const auto& [mono, c] : parse_terms(doc["omega"])) {
            if (mono.size() != 1) throw ParseError("ring omega terms are single basis labels");
            omega.push_back({mono[0], c});
        }
    return make_ring_model(name, basis, products, omega);
}

ModelPtr parse_product(const json& doc, const std::string& name, const std::string& base_dir)
{
    reject_unknown_fields(doc, {"schema", "name", "kind", "factors"});
    if (!doc.contains("factors") || !doc["factors"].is_array() || doc["factors"].empty())
        throw ParseError("product model needs a nonempty \"factors\" array");
    std::vector<ModelPtr> factors;
    for (const auto& f : doc["factors"]) factors.push_back(resolve_model(f.get<std::string>(), base_dir));
    return renamed(catalog::product(factors), name);
}

json terms_json_from_sparse(const GradedModel& m, const SparseVec& v)
{
    json arr = json::array();
    for (const auto& [id, c] : v) {
        json coeff;
        if (denominator(c) == 1 && abs(numerator(c)) < Integer(1) << 60)
            coeff = static_cast<long long>(numerator(c));
        else
            coeff = to_string(c);
        arr.push_back(json::array({m.basis()[id].label, coeff}));
    }
    return arr;
}

}  // namespace

ModelPtr parse_model_json(const json& doc, const std::string& base_dir)
{
    if (!doc.is_object()) throw ParseError("model document must be a JSON object");
    if (!doc.contains("schema") || doc["schema"] != 1) throw ParseError("missing or unsupported schema (expected 1)");
    if (!doc.contains("kind") || !doc.contains("name")) throw ParseError("model needs \"kind\" and \"name\"");
    std::string name = doc["name"].get<std::string>();
    std::string kind = doc["kind"].get<std::string>();

    ModelPtr model;
    if (kind == "ce")
        model = parse_ce(doc, name);
    else if (kind == "ring")
        model = parse_ring(doc, name);
    else if (kind == "product")
        model = parse_product(doc, name, base_dir);
    else
        throw ParseError("unknown kind: " + kind);

    ValidationReport report = validate(*model);
    if (!report.ok())
        throw ValidationError("model " + name + " fails validation:\n" + report.summary());
    return model;
}

ModelPtr parse_model_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_model_json(doc, std::filesystem::path(path).parent_path().string());
}

ModelPtr resolve_model(const std::string& ref, const std::string& base_dir)
{
    if (!ref.empty() && ref[0] == '@') {
        std::string name = ref.substr(1);
        if (!catalog::has(name)) throw ParseError("unknown catalog reference " + ref);
        return catalog::build(name);
    }
    std::filesystem::path p(ref);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return parse_model_file(p.string());
}

json model_to_json(const GradedModel& m)
{
    json doc;
    doc["schema"] = 1;
    doc["name"] = m.name();
    if (m.kind() == ModelKind::Exterior) {
        doc["kind"] = "ce";
        doc["generators"] = m.generators();
        json diff = json::object();
        for (int i = 0; i < static_cast<int>(m.generators().size()); ++i) {
            int id = m.slice(1)[i];
            if (!m.diff(id).empty()) diff[m.generators()[i]] = terms_json_from_sparse(m, m.diff(id));
        }
        if (!diff.empty()) doc["differential"] = diff;
        doc["omega"] = terms_json_from_sparse(m, m.omega().coeffs);
        return doc;
    }
    if (m.kind() == ModelKind::Ring) {
        doc["kind"] = "ring";
        json basis = json::array();
        for (const auto& b : m.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
        doc["basis"] = basis;
        json products = json::array();
        const int n = m.dim();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (i == m.unit_id() || j == m.unit_id()) continue;
                const SparseVec* p = m.product(i, j);
                if (!p) continue;
                products.push_back({{"left", m.basis()[i].label},
                                    {"right", m.basis()[j].label},
                                    {"value", terms_json_from_sparse(m, *p)}});
            }
        if (!products.empty()) doc["products"] = products;
        doc["omega"] = terms_json_from_sparse(m, m.omega().coeffs);
        return doc;
    }
    throw ParseError("tensor models serialize as product documents, not inline");
}

json catalog_doc(const std::string& name)
{
    if (auto factors = catalog::product_factors(name)) {
        json doc;
        doc["schema"] = 1;
        doc["name"] = name;
        doc["kind"] = "product";
        json f = json::array();
        for (const auto& fn : *factors) f.push_back("@" + fn);
        doc["factors"] = f;
        return doc;
    }
    return model_to_json(*catalog::build(name));
}

std::string model_fingerprint(const GradedModel& m)
{
    // FNV-1a over a canonical description
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(m.name());
    mix(std::to_string(m.top_degree()));
    for (const auto& b : m.basis()) {
        mix(b.label);
        mix(std::to_string(b.degree));
        for (const auto& [t, c] : m.diff(b.id)) {
            mix(std::to_string(t));
            mix(to_string(c));
        }
    }
    for (const auto& [id, c] : m.omega().coeffs) {
        mix(std::to_string(id));
        mix(to_string(c));
    }
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SparseVec* p = m.product(i, j);
            if (!p) continue;
            mix(std::to_string(i));
            mix(std::to_string(j));
            for (const auto& [t, c] : *p) {
                mix(std::to_string(t));
                mix(to_string(c));
            }
        }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace filtcoh
