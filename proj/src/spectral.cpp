#include "filtcoh/spectral.hpp"

namespace filtcoh {

namespace {

// Restrict m to the given row and column index sets.
Matrix restrict_to(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    std::vector<int> col_pos(m.cols(), -1);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) col_pos[cols[j]] = j;
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (const auto& [c, v] : m.row(rows[i]))
            if (col_pos[c] >= 0) out.set(i, col_pos[c], v);
    return out;
}

// Full form-space matrix of the differential.
Matrix full_d(const GradedModel& m)
{
    const int n = m.dim();
    Matrix out(n, n);
    for (int id = 0; id < n; ++id)
        for (const auto& [t, v] : m.diff(id)) out.set(t, id, v);
    return out;
}

// Full form-space matrix of left multiplication by psi.
Matrix full_psi(const GradedModel& m)
{
    const int n = m.dim();
    Element ps = psi(m);
    Matrix out(n, n);
    for (int id = 0; id < n; ++id) {
        Element prod = wedge(ps, m.basis_element(id));
        for (const auto& [t, v] : prod.coeffs) out.set(t, id, v);
    }
    return out;
}

}  // namespace

OperatorBundle build_bundle(const ConeComplex& c)
{
    if (c.p != 1) throw ModelError("operator bundle requires filtration level p = 1");
    if (c.model->top_degree() % 2 != 0)
        throw ModelError("operator bundle requires an even top degree");

    OperatorBundle b;
    b.cone = c;
    b.adjoints.reserve(c.boundary.size());
    for (const auto& m : c.boundary) b.adjoints.push_back(m.transpose());

    // Flatten the cone into one space, record even/odd degree index sets.
    std::vector<int> offset(c.max_degree + 1, 0);
    int total = 0;
    for (int k = 0; k <= c.max_degree; ++k) {
        offset[k] = total;
        total += c.dims[k];
    }
    Matrix total_d(total, total);
    for (int k = 0; k + 1 <= c.max_degree; ++k) {
        const Matrix& blk = c.boundary[k];
        for (int r = 0; r < blk.rows(); ++r)
            for (const auto& [col, v] : blk.row(r)) total_d.set(offset[k + 1] + r, offset[k] + col, v);
    }
    Matrix hodge = total_d + total_d.transpose();
    std::vector<int> even_idx, odd_idx;
    for (int k = 0; k <= c.max_degree; ++k)
        for (int i = 0; i < c.dims[k]; ++i)
            (k % 2 == 0 ? even_idx : odd_idx).push_back(offset[k] + i);
    b.hodge_even = restrict_to(hodge, odd_idx, even_idx);

    // D on C^even identified with (even forms) (+) (odd forms):
    //   [ (psi^* - psi)/2    -(d + d^*) ]
    //   [  d + d^*            (psi - psi^*)/2 ]
    const GradedModel& model = *c.model;
    const int n = model.dim();
    std::vector<int> forms_even, forms_odd;
    for (int k = 0; k <= model.top_degree(); ++k)
        for (int id : model.slice(k)) (k % 2 == 0 ? forms_even : forms_odd).push_back(id);

    Matrix md = full_d(model);
    Matrix mpsi = full_psi(model);
    Matrix dh = md + md.transpose();
    Rational half(1, 2);
    Matrix diag = (mpsi.transpose() - mpsi).scaled(half);

    const int ne = static_cast<int>(forms_even.size());
    Matrix a11 = restrict_to(diag, forms_even, forms_even);
    Matrix a22 = restrict_to(diag, forms_odd, forms_odd).scaled(Rational(-1));
    Matrix a21 = restrict_to(dh, forms_odd, forms_even);
    Matrix a12 = restrict_to(dh, forms_even, forms_odd).scaled(Rational(-1));

    Matrix d_op(n, n);
    auto paste = [&](const Matrix& blk, int r0, int c0) {
        for (int r = 0; r < blk.rows(); ++r)
            for (const auto& [col, v] : blk.row(r)) d_op.set(r0 + r, c0 + col, v);
    };
    paste(a11, 0, 0);
    paste(a12, 0, ne);
    paste(a21, ne, 0);
    paste(a22, ne, ne);
    b.d_op = d_op;

    if (!(d_op + d_op.transpose()).is_zero())
        throw ModelError("assembled block operator is not skew-symmetric");
    return b;
}

HodgeEvenResult hodge_even_kernel_dim(const OperatorBundle& b)
{
    HodgeEvenResult r;
    r.kernel_dim = b.hodge_even.cols() - rank(b.hodge_even);
    std::vector<int> betti = cone_betti(b.cone);
    for (int k = 0; k < static_cast<int>(betti.size()); k += 2) r.even_betti_sum += betti[k];
    if (r.kernel_dim != r.even_betti_sum)
        throw ModelError("Hodge kernel dimension " + std::to_string(r.kernel_dim) +
                         " disagrees with even Betti sum " + std::to_string(r.even_betti_sum));
    return r;
}

int D_rank(const OperatorBundle& b) { return rank(b.d_op); }

int D_kernel_dim(const OperatorBundle& b) { return b.d_op.cols() - rank(b.d_op); }

int D_kernel_parity(const OperatorBundle& b) { return D_kernel_dim(b) % 2; }

std::vector<int> laplacian_kernel_dims(const ConeComplex& c)
{
    std::vector<int> out(c.max_degree + 1, 0);
    for (int k = 0; k <= c.max_degree; ++k) {
        Matrix up = c.boundary[k].transpose() * c.boundary[k];
        Matrix lap = (k > 0) ? up + c.boundary[k - 1] * c.boundary[k - 1].transpose() : up;
        out[k] = c.dims[k] - rank(lap);
    }
    return out;
}

}  // namespace filtcoh
