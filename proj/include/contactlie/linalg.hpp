#pragma once

#include "contactlie/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace contactlie {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector cross(const Vector& a, const Vector& b);

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix outer(const Vector& col, const Vector& row);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix m);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix&, const Matrix&) = default;
    Matrix operator-() const { return Rational(-1) * *this; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Covector applied on the left: (row * M)_j = sum_i row_i M_ij.
Vector row_times(const Vector& row, const Matrix& m);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);
// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::vector<Rational> leading_principal_minors(const Matrix& m);
bool is_symmetric(const Matrix& m);

// Linear subspace of Q^n kept as the nonzero rows of a reduced echelon basis,
// so two subspaces are equal exactly when their bases are equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::vector<Vector> basis() const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;
    Subspace operator+(const Subspace& other) const;
    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    Matrix basis_;
};

}  // namespace contactlie
