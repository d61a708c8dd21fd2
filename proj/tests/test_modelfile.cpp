#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "filtcoh/catalog.hpp"
#include "filtcoh/invariants.hpp"
#include "filtcoh/modelfile.hpp"

using namespace filtcoh;
using nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& stem, const json& doc)
{
    auto path = std::filesystem::temp_directory_path() / ("filtcoh_" + stem + ".json");
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    return path;
}

void check_same_tables(const ModelPtr& a, const ModelPtr& b)
{
    for (int p = 0; p <= 2; ++p) {
        CAPTURE(p);
        CohomologyTable ta = cohomology_table(a, p);
        CohomologyTable tb = cohomology_table(b, p);
        CHECK(ta.b == tb.b);
        CHECK(ta.r == tb.r);
        CHECK(ta.b_phi_direct == tb.b_phi_direct);
        CHECK(ta.even_sum == tb.even_sum);
    }
}

}  // namespace

TEST_CASE("catalog documents round-trip through files")
{
    for (const auto& name : catalog::names()) {
        CAPTURE(name);
        auto path = write_temp("rt_" + name, catalog_doc(name));
        ModelPtr parsed = parse_model_file(path.string());
        ModelPtr built = catalog::build(name);
        CHECK(parsed->name() == built->name());
        CHECK(parsed->dim() == built->dim());
        check_same_tables(parsed, built);
        std::filesystem::remove(path);
    }
}

TEST_CASE("resolve_model handles catalog references and relative paths")
{
    CHECK(resolve_model("@kodaira_thurston")->dim() == 16);
    CHECK_THROWS_AS(resolve_model("@no_such_model"), ParseError);

    auto path = write_temp("resolve", catalog_doc("sphere2"));
    ModelPtr by_rel = resolve_model(path.filename().string(), path.parent_path().string());
    CHECK(by_rel->dim() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("product documents may mix file and catalog factors")
{
    auto factor = write_temp("factor_s2", catalog_doc("sphere2"));
    json doc{{"schema", 1},
             {"name", "mixed"},
             {"kind", "product"},
             {"factors", {"@kodaira_thurston", factor.filename().string()}}};
    ModelPtr m = parse_model_json(doc, factor.parent_path().string());
    CHECK(m->name() == "mixed");
    check_same_tables(m, catalog::build("kt_x_s2"));
    std::filesystem::remove(factor);
}

TEST_CASE("malformed documents are rejected")
{
    json good{{"schema", 1},
              {"name", "t2"},
              {"kind", "ce"},
              {"generators", {"e1", "e2"}},
              {"omega", json::array({json::array({"e1^e2", 1})})}};
    CHECK_NOTHROW(parse_model_json(good, "."));

    SUBCASE("wrong schema")
    {
        json doc = good;
        doc["schema"] = 2;
        CHECK_THROWS_AS(parse_model_json(doc, "."), ParseError);
    }
    SUBCASE("unknown field")
    {
        json doc = good;
        doc["extra"] = true;
        CHECK_THROWS_WITH_AS(parse_model_json(doc, "."), doctest::Contains("unknown field"),
                             ParseError);
    }
    SUBCASE("bad label")
    {
        json doc = good;
        doc["generators"] = {"e1", "2nd"};
        CHECK_THROWS_WITH_AS(parse_model_json(doc, "."), doctest::Contains("bad label"),
                             ParseError);
    }
    SUBCASE("bad coefficient")
    {
        json doc = good;
        doc["omega"] = json::array({json::array({"e1^e2", "1/0x"})});
        CHECK_THROWS_WITH_AS(parse_model_json(doc, "."), doctest::Contains("bad coefficient"),
                             ParseError);
    }
    SUBCASE("differential term of the wrong degree")
    {
        json doc{{"schema", 1},
                 {"name", "bad"},
                 {"kind", "ce"},
                 {"generators", {"e1", "e2", "e3", "e4"}},
                 {"differential", {{"e1", json::array({json::array({"e2^e3^e4", 1})})}}},
                 {"omega", json::array()}};
        CHECK_THROWS_WITH_AS(parse_model_json(doc, "."), doctest::Contains("e1"), ParseError);
    }
    SUBCASE("unknown kind")
    {
        json doc = good;
        doc["kind"] = "cw";
        CHECK_THROWS_WITH_AS(parse_model_json(doc, "."), doctest::Contains("unknown kind"),
                             ParseError);
    }
}

TEST_CASE("documents that parse but fail validation raise ValidationError")
{
    // ring with a degenerate omega (omega^2 = 0 in top degree 4)
    json doc{{"schema", 1},
             {"name", "degen"},
             {"kind", "ring"},
             {"basis",
              {{{"label", "1"}, {"degree", 0}},
               {{"label", "x"}, {"degree", 2}},
               {{"label", "y"}, {"degree", 2}},
               {{"label", "v"}, {"degree", 4}}}},
             {"products",
              json::array({{{"left", "x"}, {"right", "y"}, {"value", json::array({json::array({"v", 1})})}},
                           {{"left", "x"}, {"right", "x"}, {"value", json::array()}},
                           {{"left", "y"}, {"right", "y"}, {"value", json::array()}}})},
             {"omega", json::array({json::array({"x", 1})})}};
    CHECK_THROWS_AS(parse_model_json(doc, "."), ValidationError);
}

TEST_CASE("fingerprints are stable and content-sensitive")
{
    auto kt = catalog::kodaira_thurston();
    CHECK(model_fingerprint(*kt) == model_fingerprint(*catalog::kodaira_thurston()));
    CHECK(model_fingerprint(*kt) != model_fingerprint(*catalog::torus(2)));
}

TEST_CASE("fixture files on disk parse and verify")
{
    std::filesystem::path dir(FILTCOH_FIXTURE_DIR);
    ModelPtr m = parse_model_file((dir / "kt_x_s2.json").string());
    CHECK(verify_vanishing(m).pass);
    CHECK_THROWS(parse_model_file((dir / "bad_degree.json").string()));
}
