#ifndef FILTCOH_SPECTRAL_HPP
#define FILTCOH_SPECTRAL_HPP

#include "filtcoh/cone.hpp"

namespace filtcoh {

// Matrix realizations of the adjoint coboundary, the even-restricted Hodge
// operator and the skew-adjoint block operator D, all with respect to the
// basis-orthonormal inner product (adjoint = transpose). Requires p = 1:
// the block operator is specific to the multiplier omega^2.
struct OperatorBundle {
    ConeComplex cone;
    std::vector<Matrix> adjoints;  // adjoints[k] : C^{k+1} -> C^k, transpose of boundary[k]
    Matrix hodge_even;             // (boundary + adjoint) restricted C^even -> C^odd
    Matrix d_op;                   // D on C^even, ordered as (even forms, odd forms)
};

OperatorBundle build_bundle(const ConeComplex& c);

struct HodgeEvenResult {
    int kernel_dim = 0;
    int even_betti_sum = 0;  // sum of even-degree cone Betti numbers
};

// Kernel dimension of (boundary + adjoint)|_{C^even}; asserts agreement with
// the even cone Betti sum (a mismatch means an assembly bug, not math).
HodgeEvenResult hodge_even_kernel_dim(const OperatorBundle& b);

int D_rank(const OperatorBundle& b);
int D_kernel_dim(const OperatorBundle& b);
int D_kernel_parity(const OperatorBundle& b);

// Kernel dimension of the degree-k Laplacian block for every k; equals the
// cone Betti numbers entrywise (full Hodge decomposition check).
std::vector<int> laplacian_kernel_dims(const ConeComplex& c);

}  // namespace filtcoh

#endif
