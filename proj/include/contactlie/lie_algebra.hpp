#pragma once

#include "contactlie/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace contactlie {

using Endomorphism = Matrix;

// A bracket of two basis vectors (0-based indices), coeffs = [e_i, e_j].
struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector coeffs;
};

// Structure constants c[i][j][k] = coefficient of e_k in [e_i, e_j].
// Antisymmetry is enforced at construction; the Jacobi identity is not.
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim = 0);
    LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets);
    // Full tensor in (i, j, k) row-major order; rejected unless antisymmetric.
    static LieAlgebra from_tensor(std::size_t dim, std::vector<Rational> c);

    std::size_t dim() const { return n_; }
    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    // Matrix of ad_x; column j is [x, e_j].
    Endomorphism ad(const Vector& x) const;
    bool is_abelian() const;
    // Nonzero brackets with i < j.
    std::vector<Bracket> brackets() const;

    // Same algebra in the basis f_a = sum_k P(k, a) e_k (columns of P).
    LieAlgebra change_basis(const Matrix& p) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t n_;
    std::vector<Rational> c_;
};

struct JacobiViolation {
    std::size_t i, j, k;  // 1-based labels
    Vector defect;
};

// First triple i < j < k whose Jacobiator is nonzero, if any.
std::optional<JacobiViolation> jacobi_check(const LieAlgebra& l);

Subspace center(const LieAlgebra& l);
// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);

struct DerivedSeries {
    std::vector<Subspace> terms;  // g, g', g'', ... down to the stable term
    bool is_solvable = false;
    bool is_2step_solvable = false;
    bool is_nilpotent = false;
};

DerivedSeries derived_series(const LieAlgebra& l);
bool is_derivation(const LieAlgebra& l, const Endomorphism& d);
Matrix killing_form(const LieAlgebra& l);

// Bracket induced on a subalgebra, written in the given basis of it.
LieAlgebra restrict_to(const LieAlgebra& l, const std::vector<Vector>& basis);

}  // namespace contactlie
