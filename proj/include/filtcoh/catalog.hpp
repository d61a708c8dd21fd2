#ifndef FILTCOH_CATALOG_HPP
#define FILTCOH_CATALOG_HPP

#include "filtcoh/model.hpp"

namespace filtcoh {
namespace catalog {

// 2m-torus: exterior algebra on e1..e_{2m}, zero differential,
// omega = e1^e2 + e3^e4 + ...
ModelPtr torus(int m);

// Lambda(e1..e4) with d(e4) = e2^e3 and omega = e1^e2 + e3^e4.
ModelPtr kodaira_thurston();

ModelPtr sphere2();

// Genus-g surface ring: 1; a_i, b_i in degree 1; vol with a_i b_i = vol.
ModelPtr surface(int g);

ModelPtr point();

// Left fold of the graded tensor product.
ModelPtr product(const std::vector<ModelPtr>& factors);

// Fixed built-in names resolvable through the CLI as @name.
std::vector<std::string> names();
bool has(const std::string& name);
ModelPtr build(const std::string& name);

// Factor names for entries defined as products of other entries.
std::optional<std::vector<std::string>> product_factors(const std::string& name);

}  // namespace catalog
}  // namespace filtcoh

#endif
