#include "filtcoh/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace filtcoh {

namespace {
const Rational kZero = Rational(0);
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows)
{
    if (rows < 0 || cols < 0) throw LinalgError("matrix dimensions must be nonnegative");
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw LinalgError("ragged row list");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

const Rational& Matrix::at(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw LinalgError("matrix index out of bounds");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? kZero : it->second;
}

void Matrix::set(int r, int c, const Rational& value)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw LinalgError("matrix index out of bounds");
    if (value == 0)
        data_[r].erase(c);
    else
        data_[r][c] = value;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.set(c, r, v);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_) throw LinalgError("matrix product dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Rational> acc;
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : other.data_[k]) acc[c] += v * w;
        for (const auto& [c, v] : acc)
            if (v != 0) out.data_[r][c] = v;
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("matrix sum dimension mismatch");
    Matrix out = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.data_[r]) {
            Rational s = out.at(r, c) + v;
            out.set(r, c, s);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const { return scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix out(rows_, cols_);
    if (s == 0) return out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.data_[r][c] = v * s;
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != cols_) throw LinalgError("matrix apply dimension mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, w] : data_[r]) out[r] += w * v[c];
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

double Matrix::fill() const
{
    if (rows_ == 0 || cols_ == 0) return 0.0;
    std::size_t nnz = 0;
    for (const auto& row : data_) nnz += row.size();
    return static_cast<double>(nnz) / (static_cast<double>(rows_) * cols_);
}

Matrix Matrix::augment(const Matrix& other) const
{
    if (rows_ != other.rows_) throw LinalgError("augment row mismatch");
    Matrix out(rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        out.data_[r] = data_[r];
        for (const auto& [c, v] : other.data_[r]) out.data_[r][cols_ + c] = v;
    }
    return out;
}

std::vector<Rational> Matrix::column(int c) const
{
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Subspace Subspace::full(int n)
{
    Subspace s{n, {}};
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        s.basis.push_back(std::move(e));
    }
    return s;
}

Matrix Subspace::as_matrix() const
{
    Matrix m(ambient_dim, dim());
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < ambient_dim; ++i) m.set(i, j, basis[j][i]);
    return m;
}

namespace {

// Fraction-free Bareiss elimination on a row-integerized dense copy.
// Full pivoting on the smallest-magnitude nonzero entry (ties: lowest row,
// then lowest column) bounds intermediate growth and fixes the output.
// Columns >= pivot_limit are never chosen as pivots (augmented right side).
struct Echelon {
    int rank = 0;
    int rows = 0, cols = 0;
    int pivot_limit = 0;
    std::vector<int> col_perm;                  // position -> original column
    std::vector<std::vector<Integer>> m;        // echelon state, permuted columns
};

Echelon bareiss(const Matrix& a, int pivot_limit)
{
    Echelon e;
    e.rows = a.rows();
    e.cols = a.cols();
    e.pivot_limit = pivot_limit;
    e.col_perm.resize(e.cols);
    std::iota(e.col_perm.begin(), e.col_perm.end(), 0);

    // Scale each row to integers; row scaling changes neither rank nor
    // the solution set of the associated linear system.
    e.m.assign(e.rows, std::vector<Integer>(e.cols, Integer(0)));
    for (int r = 0; r < e.rows; ++r) {
        Integer l = 1;
        for (const auto& [c, v] : a.row(r)) l = lcm(l, denominator(v));
        for (const auto& [c, v] : a.row(r)) {
            Rational scaled = v * l;
            e.m[r][c] = numerator(scaled);
        }
    }

    Integer prev = 1;
    int k = 0;
    while (k < e.rows && k < e.pivot_limit) {
        int pr = -1, pc = -1;
        Integer best;
        for (int i = k; i < e.rows; ++i) {
            for (int j = k; j < e.pivot_limit; ++j) {
                const Integer& v = e.m[i][j];
                if (v == 0) continue;
                Integer av = abs(v);
                if (pr < 0 || av < best) {
                    best = av;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        std::swap(e.m[k], e.m[pr]);
        if (pc != k) {
            for (auto& row : e.m) std::swap(row[k], row[pc]);
            std::swap(e.col_perm[k], e.col_perm[pc]);
        }
        const Integer pivot = e.m[k][k];
        for (int i = k + 1; i < e.rows; ++i) {
            const Integer mik = e.m[i][k];
            for (int j = k + 1; j < e.cols; ++j) {
                Integer t = pivot * e.m[i][j] - mik * e.m[k][j];
                e.m[i][j] = t / prev;  // exact by the Bareiss identity
            }
            e.m[i][k] = 0;
        }
        prev = pivot;
        ++k;
    }
    e.rank = k;
    return e;
}

// Solve the echelon system U y = c (c may be empty for the homogeneous case)
// for the pivot variables, free variables fixed by the caller.
void back_substitute(const Echelon& e, std::vector<Rational>& y, const std::vector<Rational>& c)
{
    for (int i = e.rank - 1; i >= 0; --i) {
        Rational acc = c.empty() ? Rational(0) : c[i];
        for (int j = i + 1; j < e.pivot_limit; ++j)
            if (e.m[i][j] != 0) acc -= Rational(e.m[i][j]) * y[j];
        y[i] = acc / Rational(e.m[i][i]);
    }
}

}  // namespace

int rank(const Matrix& m) { return bareiss(m, m.cols()).rank; }

Subspace kernel_basis(const Matrix& m)
{
    Echelon e = bareiss(m, m.cols());
    Subspace ker{m.cols(), {}};
    for (int f = e.rank; f < e.cols; ++f) {
        std::vector<Rational> y(e.cols, Rational(0));
        y[f] = 1;
        back_substitute(e, y, {});
        std::vector<Rational> x(e.cols, Rational(0));
        for (int j = 0; j < e.cols; ++j) x[e.col_perm[j]] = y[j];
        ker.basis.push_back(std::move(x));
    }
    return ker;
}

namespace {

// Incremental rational row reduction used for greedy independence scans.
class IndependenceTracker {
public:
    // Returns true (and absorbs the vector) iff v is independent of the span.
    bool insert(std::vector<Rational> v)
    {
        for (const auto& [p, w] : reduced_) {
            if (v[p] != 0) {
                Rational f = v[p] / w[p];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * w[i];
            }
        }
        for (std::size_t p = 0; p < v.size(); ++p) {
            if (v[p] != 0) {
                reduced_.emplace_back(static_cast<int>(p), std::move(v));
                return true;
            }
        }
        return false;
    }

private:
    std::vector<std::pair<int, std::vector<Rational>>> reduced_;
};

}  // namespace

Subspace image_basis(const Matrix& m)
{
    Subspace img{m.rows(), {}};
    IndependenceTracker tracker;
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Rational> col = m.column(c);
        if (tracker.insert(col)) img.basis.push_back(std::move(col));
    }
    return img;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b)
{
    if (static_cast<int>(b.size()) != m.rows()) throw LinalgError("solve rhs dimension mismatch");
    Matrix rhs(m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r) rhs.set(r, 0, b[r]);
    Echelon e = bareiss(m.augment(rhs), m.cols());
    const int bc = m.cols();  // augmented column index (never permuted)
    for (int i = e.rank; i < e.rows; ++i)
        if (e.m[i][bc] != 0) return std::nullopt;
    std::vector<Rational> y(m.cols(), Rational(0));
    std::vector<Rational> c(e.rank);
    for (int i = 0; i < e.rank; ++i) c[i] = Rational(e.m[i][bc]);
    back_substitute(e, y, c);
    std::vector<Rational> x(m.cols(), Rational(0));
    for (int j = 0; j < m.cols(); ++j) x[e.col_perm[j]] = y[j];
    return x;
}

bool contains(const Subspace& space, const std::vector<Rational>& v)
{
    return solve(space.as_matrix(), v).has_value();
}

Quotient quotient(int ambient_dim, const Subspace& sub, const Subspace& super)
{
    if (sub.ambient_dim != ambient_dim || super.ambient_dim != ambient_dim)
        throw LinalgError("quotient: ambient dimension mismatch");
    Matrix super_m = super.as_matrix();
    for (int i = 0; i < sub.dim(); ++i)
        if (!solve(super_m, sub.basis[i]))
            throw LinalgError("quotient: sub generator " + std::to_string(i) + " is not contained in super");

    Quotient q;
    q.ambient_dim = ambient_dim;
    q.sub = sub;
    q.super = super;
    q.representatives = Subspace{ambient_dim, {}};

    IndependenceTracker tracker;
    for (const auto& v : sub.basis)
        if (!tracker.insert(v)) throw LinalgError("quotient: sub basis is dependent");
    for (const auto& v : super.basis)
        if (tracker.insert(v)) q.representatives.basis.push_back(v);
    if (q.representatives.dim() != super.dim() - sub.dim())
        throw LinalgError("quotient: super basis is dependent");

    // Complete to an ambient basis, invert, keep the representative rows.
    std::vector<std::vector<Rational>> columns;
    for (const auto& v : sub.basis) columns.push_back(v);
    for (const auto& v : q.representatives.basis) columns.push_back(v);
    for (int i = 0; i < ambient_dim && static_cast<int>(columns.size()) < ambient_dim; ++i) {
        std::vector<Rational> e(ambient_dim, Rational(0));
        e[i] = 1;
        if (tracker.insert(e)) columns.push_back(std::move(e));
    }
    Matrix change(ambient_dim, ambient_dim);
    for (int j = 0; j < ambient_dim; ++j)
        for (int i = 0; i < ambient_dim; ++i) change.set(i, j, columns[j][i]);

    Echelon e = bareiss(change.augment(Matrix::identity(ambient_dim)), ambient_dim);
    q.projector = Matrix(q.dim(), ambient_dim);
    for (int col = 0; col < ambient_dim; ++col) {
        std::vector<Rational> y(ambient_dim, Rational(0));
        std::vector<Rational> c(e.rank);
        for (int i = 0; i < e.rank; ++i) c[i] = Rational(e.m[i][ambient_dim + col]);
        back_substitute(e, y, c);
        for (int j = 0; j < ambient_dim; ++j) {
            int orig = e.col_perm[j];
            // coordinates of e_col in the (sub | reps | completion) basis
            if (orig >= sub.dim() && orig < super.dim())
                q.projector.set(orig - sub.dim(), col, y[j]);
        }
    }
    return q;
}

Matrix induced_on_quotient(const Matrix& f, const Quotient& source, const Quotient& target)
{
    if (f.cols() != source.ambient_dim || f.rows() != target.ambient_dim)
        throw LinalgError("induced_on_quotient: dimension mismatch");
    Matrix target_sub = target.sub.as_matrix();
    Matrix target_super = target.super.as_matrix();
    for (int i = 0; i < source.sub.dim(); ++i)
        if (!solve(target_sub, f.apply(source.sub.basis[i])))
            throw LinalgError("induced_on_quotient: map is not well defined, sub generator " +
                              std::to_string(i) + " leaves the target sub");
    Matrix out(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        std::vector<Rational> img = f.apply(source.representatives.basis[j]);
        if (!solve(target_super, img))
            throw LinalgError("induced_on_quotient: representative " + std::to_string(j) +
                              " maps outside the target super space");
        std::vector<Rational> coords = target.projector.apply(img);
        for (int i = 0; i < target.dim(); ++i) out.set(i, j, coords[i]);
    }
    return out;
}

}  // namespace filtcoh
