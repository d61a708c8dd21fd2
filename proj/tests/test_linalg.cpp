#include <doctest.h>

#include <random>

#include "filtcoh/matrix.hpp"

using namespace filtcoh;

namespace {

// Independent rank oracle: largest k with a nonsingular k x k minor,
// determinants by cofactor expansion. Exponential, fine for tiny matrices.
Rational minor_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    if (rows.empty()) return Rational(1);
    Rational det(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> sub_rows;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != i) sub_rows.push_back(rows[k]);
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        Rational c = m.at(rows[i], cols[0]);
        if (c == 0) continue;
        Rational cofactor = minor_det(m, sub_rows, sub_cols);
        det += Rational(i % 2 == 0 ? 1 : -1) * c * cofactor;
    }
    return det;
}

void subsets_of_size(int n, int k, int start, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

int brute_force_rank(const Matrix& m)
{
    int bound = std::min(m.rows(), m.cols());
    for (int k = bound; k >= 1; --k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        std::vector<int> cur;
        subsets_of_size(m.rows(), k, 0, cur, row_sets);
        subsets_of_size(m.cols(), k, 0, cur, col_sets);
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets)
                if (minor_det(m, rs, cs) != 0) return k;
    }
    return 0;
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> entry(-4, 4);
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, Rational(entry(rng)));
    return m;
}

}  // namespace

TEST_CASE("rank basics")
{
    CHECK(rank(Matrix(4, 4)) == 0);
    CHECK(rank(Matrix::identity(3)) == 3);
    Matrix m = Matrix::from_rows({{Rational(1), Rational(2)},
                                  {Rational(2), Rational(4)},
                                  {Rational(0), Rational(1)}});
    CHECK(brute_force_rank(m) == 2);
    CHECK(rank(m) == 2);
}

TEST_CASE("rank agrees with minor enumeration on random matrices")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, 3 + trial % 3, 2 + trial % 4);
        CHECK(rank(m) == brute_force_rank(m));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rank survives rational scaling")
{
    Matrix m = Matrix::from_rows({{Rational(1, 3), Rational(2, 7)},
                                  {Rational(1, 6), Rational(1, 7)}});
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel basics")
{
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
    Matrix row = Matrix::from_rows({{Rational(1), Rational(1), Rational(0)}});
    Subspace ker = kernel_basis(row);
    CHECK(ker.dim() == 2);
    for (const auto& v : ker.basis) {
        auto img = row.apply(v);
        CHECK(img[0] == 0);
    }
}

TEST_CASE("rank-nullity on random matrices")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(rng, 2 + trial % 4, 2 + trial % 5);
        Subspace ker = kernel_basis(m);
        CHECK(m.cols() == rank(m) + ker.dim());
        for (const auto& v : ker.basis) {
            auto img = m.apply(v);
            for (const auto& x : img) CHECK(x == 0);
        }
    }
}

TEST_CASE("rank is invariant under column permutation")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, 4, 5);
        std::vector<int> perm{4, 2, 0, 3, 1};
        Matrix shuffled(4, 5);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 5; ++c) shuffled.set(r, perm[c], m.at(r, c));
        CHECK(rank(m) == rank(shuffled));
    }
}

TEST_CASE("solve")
{
    Matrix m = Matrix::from_rows({{Rational(2), Rational(0)}, {Rational(0), Rational(3)}});
    auto x = solve(m, {Rational(4), Rational(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(3));
    // inconsistent system
    Matrix s = Matrix::from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
    CHECK(!solve(s, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("quotient basics")
{
    auto e = [](int n, int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };

    SUBCASE("full mod a line")
    {
        Subspace sub{2, {e(2, 0)}};
        Quotient q = quotient(2, sub, Subspace::full(2));
        CHECK(q.dim() == 1);
    }
    SUBCASE("sub equals super")
    {
        Subspace s{2, {e(2, 0), e(2, 1)}};
        Quotient q = quotient(2, s, s);
        CHECK(q.dim() == 0);
        CHECK(q.representatives.dim() == 0);
    }
    SUBCASE("diagonal line inside a plane in 3-space")
    {
        Subspace super{3, {e(3, 0), e(3, 1)}};
        std::vector<Rational> diag{Rational(1), Rational(1), Rational(0)};
        Subspace sub{3, {diag}};
        Quotient q = quotient(3, sub, super);
        CHECK(q.dim() == 1);
        // projector kills the sub generator and is a bijection on classes
        auto coords = q.projector.apply(diag);
        CHECK(coords[0] == 0);
        auto c0 = q.projector.apply(q.representatives.basis[0]);
        CHECK(c0[0] == 1);
    }
    SUBCASE("containment violation is rejected with the generator index")
    {
        Subspace super{2, {e(2, 0)}};
        Subspace sub{2, {e(2, 1)}};
        CHECK_THROWS_WITH_AS(quotient(2, sub, super),
                             doctest::Contains("sub generator 0"), LinalgError);
    }
    SUBCASE("dimension formula")
    {
        std::mt19937 rng(3);
        Matrix m = random_matrix(rng, 4, 6);
        Subspace super = kernel_basis(m);
        Subspace sub{6, {}};
        if (super.dim() >= 1) sub.basis.push_back(super.basis[0]);
        Quotient q = quotient(6, sub, super);
        CHECK(q.dim() + sub.dim() == super.dim());
    }
}

TEST_CASE("induced map on quotients")
{
    auto e = [](int n, int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    Subspace sub{2, {e(2, 0)}};
    Quotient q = quotient(2, sub, Subspace::full(2));

    SUBCASE("zero map")
    {
        Matrix f(2, 2);
        CHECK(induced_on_quotient(f, q, q).is_zero());
    }
    SUBCASE("identity on equal quotients")
    {
        Matrix id = Matrix::identity(2);
        Matrix ind = induced_on_quotient(id, q, q);
        CHECK(ind == Matrix::identity(1));
    }
    SUBCASE("ill-defined map is rejected")
    {
        // swap of coordinates does not preserve the sub space span{e0}
        Matrix f(2, 2);
        f.set(0, 1, Rational(1));
        f.set(1, 0, Rational(1));
        CHECK_THROWS_AS(induced_on_quotient(f, q, q), LinalgError);
    }
}
