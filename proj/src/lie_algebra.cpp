#include "contactlie/lie_algebra.hpp"

#include "contactlie/errors.hpp"

#include <stdexcept>

namespace contactlie {

LieAlgebra::LieAlgebra(std::size_t dim) : n_(dim), c_(dim * dim * dim) {}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets) : LieAlgebra(dim) {
    for (const auto& b : brackets) {
        if (b.i >= n_ || b.j >= n_ || b.coeffs.size() != n_)
            throw std::invalid_argument("bracket entry out of range");
        if (b.i == b.j) {
            if (!is_zero(b.coeffs)) throw std::invalid_argument("nonzero self-bracket");
            continue;
        }
        for (std::size_t k = 0; k < n_; ++k) {
            c_[(b.i * n_ + b.j) * n_ + k] = b.coeffs[k];
            c_[(b.j * n_ + b.i) * n_ + k] = -b.coeffs[k];
        }
    }
}

LieAlgebra LieAlgebra::from_tensor(std::size_t dim, std::vector<Rational> c) {
    if (c.size() != dim * dim * dim) throw std::invalid_argument("structure tensor has wrong size");
    LieAlgebra l(dim);
    l.c_ = std::move(c);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (l.coeff(i, j, k) != -l.coeff(j, i, k))
                    throw std::invalid_argument("structure tensor is not antisymmetric");
    return l;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<long>((i * n_ + j) * n_);
    return Vector(first, first + static_cast<long>(n_));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("bracket: length mismatch");
    Vector r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const Rational& c = coeff(i, j, k);
                if (!c.is_zero()) r[k] += s * c;
            }
        }
    }
    return r;
}

Endomorphism LieAlgebra::ad(const Vector& x) const {
    Endomorphism m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vector col = bracket(x, unit_vector(n_, j));
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<Bracket> LieAlgebra::brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            Vector v = bracket_basis(i, j);
            if (!is_zero(v)) out.push_back({i, j, std::move(v)});
        }
    return out;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
    if (p.rows() != n_ || p.cols() != n_) throw std::invalid_argument("change_basis: shape mismatch");
    auto pinv = inverse(p);
    if (!pinv) throw std::invalid_argument("change_basis: matrix is singular");
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < n_; ++a) cols.push_back(p.column(a));
    std::vector<Bracket> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b) {
            Vector v = *pinv * bracket(cols[a], cols[b]);
            if (!is_zero(v)) out.push_back({a, b, std::move(v)});
        }
    return LieAlgebra(n_, out);
}

std::optional<JacobiViolation> jacobi_check(const LieAlgebra& l) {
    std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector d = l.bracket(l.bracket_basis(i, j), ek) + l.bracket(l.bracket_basis(j, k), ei) +
                           l.bracket(l.bracket_basis(k, i), ej);
                if (!is_zero(d)) return JacobiViolation{i + 1, j + 1, k + 1, d};
            }
    return std::nullopt;
}

Subspace center(const LieAlgebra& l) {
    // x is central iff sum_i x_i c[i][j][k] = 0 for all (j, k).
    std::size_t n = l.dim();
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = l.coeff(i, j, k);
    return Subspace::span(n, kernel(m));
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
    std::vector<Vector> vs;
    auto ab = a.basis();
    auto bb = b.basis();
    for (const auto& x : ab)
        for (const auto& y : bb) vs.push_back(l.bracket(x, y));
    return Subspace::span(l.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) { return s.contains(bracket_span(l, s, s)); }

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
    return s.contains(bracket_span(l, Subspace::whole(l.dim()), s));
}

DerivedSeries derived_series(const LieAlgebra& l) {
    DerivedSeries out;
    Subspace cur = Subspace::whole(l.dim());
    out.terms.push_back(cur);
    while (true) {
        Subspace next = bracket_span(l, cur, cur);
        if (next == cur) break;
        out.terms.push_back(next);
        cur = next;
        if (cur.dim() == 0) break;
    }
    out.is_solvable = out.terms.back().dim() == 0;
    out.is_2step_solvable = out.terms.size() <= 3 && out.is_solvable;

    Subspace whole = Subspace::whole(l.dim());
    Subspace lower = whole;
    while (lower.dim() > 0) {
        Subspace next = bracket_span(l, whole, lower);
        if (next == lower) break;
        lower = next;
    }
    out.is_nilpotent = lower.dim() == 0;
    return out;
}

bool is_derivation(const LieAlgebra& l, const Endomorphism& d) {
    std::size_t n = l.dim();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_derivation: shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = d * l.bracket_basis(i, j);
            Vector rhs = l.bracket(d.column(i), unit_vector(n, j)) + l.bracket(unit_vector(n, i), d.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

Matrix killing_form(const LieAlgebra& l) {
    std::size_t n = l.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(unit_vector(n, i)));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix p = ads[i] * ads[j];
            Rational tr;
            for (std::size_t a = 0; a < n; ++a) tr += p(a, a);
            k(i, j) = tr;
            k(j, i) = tr;
        }
    return k;
}

LieAlgebra restrict_to(const LieAlgebra& l, const std::vector<Vector>& basis) {
    std::size_t m = basis.size();
    Matrix b = Matrix::from_columns(basis, l.dim());
    std::vector<Bracket> out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a + 1; c < m; ++c) {
            auto coords = solve(b, l.bracket(basis[a], basis[c]));
            if (!coords) throw PreconditionError("not-subalgebra", "bracket leaves the given span");
            if (!is_zero(*coords)) out.push_back({a, c, *coords});
        }
    return LieAlgebra(m, out);
}

}  // namespace contactlie
