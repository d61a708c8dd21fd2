#include "filtcoh/catalog.hpp"

#include <algorithm>

namespace filtcoh {
namespace catalog {

ModelPtr torus(int m)
{
    if (m < 1) throw ModelError("torus needs m >= 1");
    std::vector<std::string> gens;
    for (int i = 1; i <= 2 * m; ++i) gens.push_back("e" + std::to_string(i));
    std::vector<TwoFormTerm> omega;
    for (int i = 0; i < m; ++i) omega.push_back({gens[2 * i], gens[2 * i + 1], Rational(1)});
    return make_ce_model("torus" + std::to_string(m), gens, {}, omega);
}

ModelPtr kodaira_thurston()
{
    std::vector<std::string> gens{"e1", "e2", "e3", "e4"};
    std::map<std::string, std::vector<TwoFormTerm>> diff;
    diff["e4"] = {{"e2", "e3", Rational(1)}};
    std::vector<TwoFormTerm> omega{{"e1", "e2", Rational(1)}, {"e3", "e4", Rational(1)}};
    return make_ce_model("kodaira_thurston", gens, diff, omega);
}

ModelPtr sphere2()
{
    std::vector<RingBasisSpec> basis{{"1", 0}, {"x", 2}};
    return make_ring_model("sphere2", basis, {}, {{"x", Rational(1)}});
}

ModelPtr surface(int g)
{
    if (g < 0) throw ModelError("surface needs g >= 0");
    if (g == 0) {
        auto m = sphere2();
        return m;
    }
    std::vector<RingBasisSpec> basis{{"1", 0}};
    for (int i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), 1});
    for (int i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), 1});
    basis.push_back({"vol", 2});
    std::vector<RingProductSpec> products;
    for (int i = 1; i <= g; ++i)
        products.push_back({"a" + std::to_string(i), "b" + std::to_string(i),
                            {{"vol", Rational(1)}}});
    return make_ring_model("surface_g" + std::to_string(g), basis, products, {{"vol", Rational(1)}});
}

ModelPtr point()
{
    return make_ring_model("point", {{"1", 0}}, {}, {});
}

ModelPtr product(const std::vector<ModelPtr>& factors)
{
    if (factors.empty()) throw ModelError("product needs at least one factor");
    ModelPtr acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
    return acc;
}

std::vector<std::string> names()
{
    return {"point",        "sphere2",   "surface_g0", "surface_g1", "surface_g2",
            "surface_g3",   "torus1",    "torus2",     "torus3",     "kodaira_thurston",
            "s2xs2xs2",     "kt_x_s2"};
}

bool has(const std::string& name)
{
    auto n = names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

ModelPtr build(const std::string& name)
{
    if (name == "point") return point();
    if (name == "sphere2") return sphere2();
    if (name == "surface_g0") return surface(0);
    if (name == "surface_g1") return surface(1);
    if (name == "surface_g2") return surface(2);
    if (name == "surface_g3") return surface(3);
    if (name == "torus1") return torus(1);
    if (name == "torus2") return torus(2);
    if (name == "torus3") return torus(3);
    if (name == "kodaira_thurston") return kodaira_thurston();
    if (name == "s2xs2xs2") return renamed(product({sphere2(), sphere2(), sphere2()}), name);
    if (name == "kt_x_s2") return renamed(product({kodaira_thurston(), sphere2()}), name);
    throw ModelError("unknown catalog model " + name);
}

std::optional<std::vector<std::string>> product_factors(const std::string& name)
{
    if (name == "s2xs2xs2") return std::vector<std::string>{"sphere2", "sphere2", "sphere2"};
    if (name == "kt_x_s2") return std::vector<std::string>{"kodaira_thurston", "sphere2"};
    return std::nullopt;
}

}  // namespace catalog
}  // namespace filtcoh
