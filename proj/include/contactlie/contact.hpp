#pragma once

#include "contactlie/forms.hpp"
#include "contactlie/lie_algebra.hpp"
#include "contactlie/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contactlie {

struct AlmostContact {
    Endomorphism phi;
    Vector xi;
    Vector eta;
    friend bool operator==(const AlmostContact&, const AlmostContact&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    std::size_t h_dim = 0;  // dimension of Ker eta
    bool ok() const { return violations.empty(); }
};

// Checks phi^2 = -I + eta⊗xi, eta(xi) = 1, phi(xi) = 0, eta∘phi = 0 and Ker eta = Im phi.
// Throws PreconditionError "dimension-mismatch".
ValidationReport validate_almost_contact(const LieAlgebra& l, const AlmostContact& s);

// I - xi⊗eta, the projection onto Ker eta along xi.
Matrix horizontal_projector(const AlmostContact& s);
// Basis of Ker eta from the echelon kernel of eta.
std::vector<Vector> horizontal_basis(const AlmostContact& s);
// Same structure in the basis given by the columns of p.
AlmostContact change_basis(const AlmostContact& s, const Matrix& p);

// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y) on all basis pairs.
bool is_compatible(const AlmostContact& s, const Metric& g);
// Phi(X, Y) = g(X, phi Y)
Form fundamental_form(const AlmostContact& s, const Metric& g);

struct NormalityReport {
    Form tensor;  // N(e_i, e_j) as a 2-form with values in the algebra
    bool is_normal = false;
};

// Computes N = [phi, phi] + d eta ⊗ xi and cross-checks the two-condition
// criterion (ad_xi commutes with phi, plus the horizontal bracket identity).
NormalityReport normality_tensor(const LieAlgebra& l, const AlmostContact& s);

struct AbelianCheck {
    bool ok = true;
    std::string failed_identity;        // empty when ok
    std::size_t first = 0, second = 0;  // 1-based horizontal basis indices, when relevant
    explicit operator bool() const { return ok; }
};

// ad_xi∘phi = phi∘ad_xi and [phi X, phi Y] = [X, Y] on a basis of Ker eta.
AbelianCheck is_abelian_contact(const LieAlgebra& l, const AlmostContact& s);

// J^2 = -I and [Jx, Jy] = [x, y] for all basis pairs.
bool is_abelian_complex_structure(const LieAlgebra& h, const Endomorphism& j);

struct ContactClassReport {
    bool normal = false;
    bool deta_closed = false;
    bool dPhi_closed = false;
    std::optional<Rational> alpha_sasaki;
    std::optional<Rational> alpha_kenmotsu;
    std::vector<std::string> labels;
};

// Throws PreconditionError "metric-incompatible". Non-normal input is reported
// with normal = false and no labels beyond "none".
ContactClassReport metric_class(const LieAlgebra& l, const AlmostContact& s, const Metric& g);

struct CharacteristicReport {
    bool exists = false;
    std::optional<Form> torsion;
};

// Throws PreconditionError "not-abelian".
CharacteristicReport characteristic_connection(const LieAlgebra& l, const AlmostContact& s, const Metric& g);

struct Dim3Result {
    std::string label;
    Rational a, b, alpha, beta, gamma;
    std::optional<Rational> lambda;  // only for r'_{3,lambda}
    Matrix basis;                    // columns xi, e1, e2 = phi e1
};

namespace dim3_labels {
inline const std::string R3 = "R^3";
inline const std::string H1R = "h_1^R";
inline const std::string AFFR_R = "aff(R)×R";
inline const std::string SO3 = "so(3)";
inline const std::string SL2R = "sl(2,R)";
inline const std::string R31 = "r_{3,1}";
inline const std::string R3PRIME = "r'_{3,lambda}";
}  // namespace dim3_labels

// Throws PreconditionError "dim-not-3" / "not-abelian" / "invalid-structure".
Dim3Result classify_dim3(const LieAlgebra& l, const AlmostContact& s);

struct CentralDecomposition {
    LieAlgebra h;
    Endomorphism j;
    Form sigma;    // -d eta restricted to Ker eta, in the horizontal basis
    Matrix basis;  // columns xi, then the horizontal basis
};

// Throws PreconditionError "xi-not-central" / "not-abelian".
CentralDecomposition decompose_central_extension(const LieAlgebra& l, const AlmostContact& s);

struct SemidirectDecomposition {
    LieAlgebra h;
    Endomorphism j;
    Endomorphism d;  // ad_xi restricted to Ker eta
    Matrix basis;
};

// Throws PreconditionError "deta-nonzero" / "not-abelian".
SemidirectDecomposition decompose_semidirect(const LieAlgebra& l, const AlmostContact& s);

}  // namespace contactlie
