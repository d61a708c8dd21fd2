#ifndef FILTCOH_CONE_HPP
#define FILTCOH_CONE_HPP

#include "filtcoh/model.hpp"

namespace filtcoh {

// p-filtered mapping cone of multiplication by omega^{p+1}.
// C^k = Omega^k (+) Omega^{k - (2p+1)}, with the first component first,
// and boundary blocks [[d, Phi],[0, -d]].
struct ConeComplex {
    ModelPtr model;
    int p = 1;
    int shift = 3;               // 2p + 1
    Element phi;                 // omega^{p+1}
    int max_degree = 0;          // topDegree + 2p + 1
    std::vector<int> dims;       // dim C^k, k = 0 .. max_degree
    std::vector<Matrix> boundary;  // boundary[k] : C^k -> C^{k+1}

    int dim(int k) const { return (k < 0 || k > max_degree) ? 0 : dims[k]; }
};

// Assembles the complex and checks boundary^2 = 0 degreewise.
ConeComplex build_cone(const ModelPtr& model, int p);

// b^Phi_k = dim C^k - rank(boundary_k) - rank(boundary_{k-1}).
std::vector<int> cone_betti(const ConeComplex& c);

// Alternating sum of cone Betti numbers; zero for every valid model.
long long euler_characteristic(const ConeComplex& c);

}  // namespace filtcoh

#endif
