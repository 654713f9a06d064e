#pragma once

#include "contactlie/forms.hpp"
#include "contactlie/lie_algebra.hpp"
#include "contactlie/metric.hpp"
#include "contactlie/three_contact.hpp"

#include <array>
#include <optional>
#include <vector>

namespace contactlie {

// Left-invariant connection: column j of coeff(i) is nabla_{e_i} e_j.
class Connection {
public:
    Connection() = default;
    explicit Connection(std::vector<Matrix> coeff);

    std::size_t dim() const { return n_.size(); }
    const Matrix& coeff(std::size_t i) const { return n_[i]; }
    // Matrix of Y -> nabla_X Y.
    Matrix along(const Vector& x) const;
    Vector apply(const Vector& x, const Vector& y) const { return along(x) * y; }
    bool is_metric(const Metric& g) const;

    friend bool operator==(const Connection&, const Connection&) = default;

private:
    std::vector<Matrix> n_;
};

// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
Connection levi_civita(const LieAlgebra& l, const Metric& g);
// nabla_X Y = nabla^g_X Y + 1/2 T(X, Y)^sharp
Connection with_skew_torsion(const Connection& nabla_g, const Form& torsion, const Metric& g);
// g(nabla_X Y, Z) = -g(X, [Y, Z])
Connection bismut_like(const LieAlgebra& l, const Metric& g);

struct TorsionResult {
    std::optional<Form> form;                         // present iff totally skew
    std::optional<std::array<std::size_t, 3>> witness;  // 1-based (i, j, k) with T_ijk != -T_ikj
};

// T(X, Y, Z) = g(nabla_X Y - nabla_Y X - [X, Y], Z)
TorsionResult torsion_form(const LieAlgebra& l, const Connection& nabla, const Metric& g);

// Derivatives along each basis vector e_0, ..., e_{n-1}.
std::vector<Matrix> covariant_derivative(const Connection& nabla, const Endomorphism& a);
std::vector<Vector> covariant_derivative_vector(const Connection& nabla, const Vector& v);
std::vector<Vector> covariant_derivative_covector(const Connection& nabla, const Vector& eta);
std::vector<Form> covariant_derivative(const Connection& nabla, const Form& w);

class CurvatureTensor {
public:
    CurvatureTensor(std::size_t n, std::vector<Matrix> r) : n_(n), r_(std::move(r)) {}
    std::size_t dim() const { return n_; }
    // Matrix of Z -> R(e_i, e_j) Z.
    const Matrix& at(std::size_t i, std::size_t j) const { return r_[i * n_ + j]; }
    bool is_zero() const;

private:
    std::size_t n_;
    std::vector<Matrix> r_;
};

// R(X, Y) = [nabla_X, nabla_Y] - nabla_{[X, Y]}
CurvatureTensor curvature(const LieAlgebra& l, const Connection& nabla);
// Ric(A, B) = sum_{a,b} g^{ab} g(R(e_a, A) B, e_b)
Matrix ricci(const CurvatureTensor& r, const Metric& g);
// g(R(X,Y)Z,W) = g(R(Z,W)X,Y) on all basis quadruples.
bool pair_symmetry(const CurvatureTensor& r, const Metric& g);

// Throws PreconditionError "torsion-not-skew".
bool is_parallel_torsion(const LieAlgebra& l, const Connection& nabla, const Metric& g);

// Metric, skew torsion and the derivative formulas for phi_i, xi_i, eta_i with the given beta.
// When the vertical space is central, agreement with bismut_like is also asserted.
bool is_canonical_connection(const LieAlgebra& l, const Almost3Contact& t, const Metric& g, const Connection& nabla,
                             const Rational& beta);

}  // namespace contactlie
