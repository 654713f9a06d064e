#include "contactlie/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace contactlie {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

static void check_same(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    return r += b;
}

Vector& operator+=(Vector& a, const Vector& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vector operator-(const Vector& a, const Vector& b) {
    check_same(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const Vector& a, const Vector& b) {
    check_same(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector cross(const Vector& a, const Vector& b) {
    if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("cross product needs 3-vectors");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::outer(const Vector& col, const Vector& row) {
    Matrix m(col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        if (!col[i].is_zero())
            for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

Vector row_times(const Vector& row, const Matrix& m) {
    if (row.size() != m.rows()) throw std::invalid_argument("covector-matrix shape mismatch");
    Vector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (row[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r[j] += row[i] * m(i, j);
    }
    return r;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Rational determinant(Matrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::vector<Rational> leading_principal_minors(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minors of non-square matrix");
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(determinant(std::move(sub)));
    }
    return out;
}

bool is_symmetric(const Matrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("span: vector length mismatch");
    RowEchelon e = rref(Matrix::from_rows(vectors));
    Matrix b(e.pivots.size(), ambient);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) b(i, j) = e.reduced(i, j);
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vector(ambient, i));
    return span(ambient, e);
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("coordinates: length mismatch");
    // Each basis row has a leading 1 in its pivot column and zeros in the other
    // pivot columns, so the coefficient of row r is v at that pivot.
    Vector coeff(dim());
    Vector rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        std::size_t p = 0;
        while (basis_(r, p).is_zero()) ++p;
        coeff[r] = v[p];
        if (!coeff[r].is_zero()) rest = rest - coeff[r] * basis_.row(r);
    }
    if (!contactlie::is_zero(rest)) return std::nullopt;
    return coeff;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    auto vs = basis();
    for (auto& v : other.basis()) vs.push_back(v);
    return span(ambient_, vs);
}

}  // namespace contactlie
