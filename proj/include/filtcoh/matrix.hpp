#ifndef FILTCOH_MATRIX_HPP
#define FILTCOH_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtcoh/rational.hpp"

namespace filtcoh {

// Sparse rational matrix. Entries are stored row-major in ordered maps so
// iteration order (and hence every derived result) is deterministic.
// Elimination densifies internally; cone matrices for 6-dimensional models
// are small but products of wedge matrices can fill in.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const;
    void set(int r, int c, const Rational& value);  // erases on zero

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& s) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const;

    // Fraction of nonzero entries, used to pick dense vs sparse kernels.
    double fill() const;

    const std::map<int, Rational>& row(int r) const { return data_[r]; }

    // Horizontal concatenation [this | other].
    Matrix augment(const Matrix& other) const;
    std::vector<Rational> column(int c) const;

private:
    int rows_, cols_;
    std::vector<std::map<int, Rational>> data_;
};

// Column-vector basis of a subspace of Q^ambientDim. Basis vectors are kept
// linearly independent; insertion order is preserved.
struct Subspace {
    int ambient_dim = 0;
    std::vector<std::vector<Rational>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    static Subspace full(int n);
    static Subspace zero(int n) { return Subspace{n, {}}; }
    Matrix as_matrix() const;  // ambient_dim x dim, basis vectors as columns
};

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rank over Q, fraction-free Bareiss elimination. Pivot choice is the
// smallest-magnitude nonzero entry of the remaining submatrix, ties broken by
// lowest row then lowest column, so results are reproducible.
int rank(const Matrix& m);

// Basis of {v : m v = 0}; dim = cols - rank(m).
Subspace kernel_basis(const Matrix& m);

// Greedy independent-column span of m, columns taken in input order.
Subspace image_basis(const Matrix& m);

// Particular solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

bool contains(const Subspace& space, const std::vector<Rational>& v);

// super/sub with chosen representatives and the coordinate projector.
struct Quotient {
    int ambient_dim = 0;
    Subspace sub;
    Subspace super;
    Subspace representatives;      // completes sub to a basis of super
    Matrix projector;              // dim x ambient_dim; valid on vectors of super

    int dim() const { return representatives.dim(); }
};

// Requires sub <= super; rejects naming the first escaping generator.
Quotient quotient(int ambient_dim, const Subspace& sub, const Subspace& super);

// Matrix of the map induced by f on targetQ-coordinates of sourceQ classes.
// Checks that f maps super into super and sub into sub (chain map descends).
Matrix induced_on_quotient(const Matrix& f, const Quotient& source, const Quotient& target);

}  // namespace filtcoh

#endif
