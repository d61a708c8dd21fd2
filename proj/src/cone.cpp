#include "filtcoh/cone.hpp"

namespace filtcoh {

ConeComplex build_cone(const ModelPtr& model, int p)
{
    if (p < 0) throw ModelError("filtration level must be nonnegative");
    ConeComplex c;
    c.model = model;
    c.p = p;
    c.shift = 2 * p + 1;
    c.phi = model->power(model->omega(), p + 1);
    c.max_degree = model->top_degree() + c.shift;
    const int phi_degree = 2 * (p + 1);

    c.dims.resize(c.max_degree + 1);
    for (int k = 0; k <= c.max_degree; ++k)
        c.dims[k] = model->slice_dim(k) + model->slice_dim(k - c.shift);

    c.boundary.reserve(c.max_degree + 1);
    for (int k = 0; k <= c.max_degree; ++k) {
        int rows = (k + 1 <= c.max_degree) ? c.dims[k + 1] : 0;
        Matrix b(rows, c.dims[k]);
        int top0 = model->slice_dim(k);              // columns of the Omega^k block
        int row0 = model->slice_dim(k + 1);          // rows of the Omega^{k+1} block
        Matrix d_top = model->d_matrix(k);
        Matrix phi_block = model->wedge_matrix(c.phi, phi_degree, k - c.shift);
        Matrix d_bot = model->d_matrix(k - c.shift);
        for (int r = 0; r < d_top.rows(); ++r)
            for (const auto& [col, v] : d_top.row(r)) b.set(r, col, v);
        for (int r = 0; r < phi_block.rows(); ++r)
            for (const auto& [col, v] : phi_block.row(r)) b.set(r, top0 + col, v);
        for (int r = 0; r < d_bot.rows(); ++r)
            for (const auto& [col, v] : d_bot.row(r)) b.set(row0 + r, top0 + col, -v);
        c.boundary.push_back(std::move(b));
    }

    for (int k = 0; k + 1 <= c.max_degree; ++k) {
        Matrix sq = c.boundary[k + 1] * c.boundary[k];
        if (!sq.is_zero())
            throw ModelError("boundary^2 != 0 at degree " + std::to_string(k) +
                             " (invalid model slipped through validation)");
    }
    return c;
}

std::vector<int> cone_betti(const ConeComplex& c)
{
    std::vector<int> b(c.max_degree + 1, 0);
    std::vector<int> ranks(c.max_degree + 1, 0);
    for (int k = 0; k <= c.max_degree; ++k) ranks[k] = rank(c.boundary[k]);
    for (int k = 0; k <= c.max_degree; ++k)
        b[k] = c.dims[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
    return b;
}

long long euler_characteristic(const ConeComplex& c)
{
    std::vector<int> b = cone_betti(c);
    long long chi = 0;
    for (int k = 0; k < static_cast<int>(b.size()); ++k) chi += (k % 2 == 0) ? b[k] : -b[k];
    return chi;
}

}  // namespace filtcoh
