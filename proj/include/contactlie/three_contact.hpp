#pragma once

#include "contactlie/contact.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace contactlie {

struct Almost3Contact {
    std::array<AlmostContact, 3> s;
    friend bool operator==(const Almost3Contact&, const Almost3Contact&) = default;
};

// Even permutations (i, j, k) of (0, 1, 2).
inline constexpr std::array<std::array<std::size_t, 3>, 3> kEvenPermutations{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

// Throws PreconditionError "dim-not-3-mod-4" / "dimension-mismatch".
ValidationReport validate_almost_3contact(const LieAlgebra& l, const Almost3Contact& t);

// Projection onto the horizontal space along span{xi_1, xi_2, xi_3}.
Matrix horizontal_projector(const Almost3Contact& t);
// Echelon basis of the common kernel of eta_1, eta_2, eta_3.
std::vector<Vector> horizontal_basis(const Almost3Contact& t);
Subspace vertical_space(const Almost3Contact& t);
Almost3Contact change_basis(const Almost3Contact& t, const Matrix& p);
bool is_compatible(const Almost3Contact& t, const Metric& g);

// All three structures abelian; cross-checks that any two abelian force the third.
bool is_abelian_3contact(const LieAlgebra& l, const Almost3Contact& t);

struct StructureInvariants {
    std::array<Vector, 3> zeta;  // zeta_k = [xi_i, xi_j]
    Vector z;                    // phi_i zeta_i
    Rational delta;
    Endomorphism psi;  // (ad_{xi_i}∘phi_i) on the horizontal space, zero on the vertical one
    std::size_t psi_rank = 0;
};

// Throws PreconditionError "not-abelian" / "no-reeb-commutator", or
// InternalError when a quantity that must be index-independent is not.
StructureInvariants structure_invariants(const LieAlgebra& l, const Almost3Contact& t);

// Names of the identities that fail; empty means every identity holds.
// Covers the zeta/Z relations, psi(Z) = 0, ad_Z = 2(psi^2 + delta psi), the
// bracket lemma, the second-order Reeb identities, rank psi in 4Z and the
// phi_i-invariance of Ker psi and Im psi.
std::vector<std::string> lemma_identities(const LieAlgebra& l, const Almost3Contact& t, const StructureInvariants& inv);

// (phi_a, xi_a, eta_a) = sum a_i (phi_i, xi_i, eta_i); throws PreconditionError "not-unit".
AlmostContact sphere_structure(const Almost3Contact& t, const Vector& a);

enum class CaseKind { PsiInvertible, PsiZero_ZZero_DeltaZero, PsiZero_ZZero_DeltaNonzero, PsiZero_ZNonzero, Intermediate };

struct CaseReport {
    CaseKind kind = CaseKind::Intermediate;
    std::size_t rank = 0;
    StructureInvariants invariants;
    std::vector<Vector> h_basis;              // horizontal basis used below
    std::optional<LieAlgebra> h;              // bracket induced on the horizontal ideal
    std::optional<std::array<Endomorphism, 3>> j;  // phi_i restricted, in h_basis coordinates
    std::optional<Form> theta;                // vertical part of the bracket on h, R^3-valued
    std::optional<Subspace> u;                // span{2 delta xi_i - Z_i}
    std::string tag() const;
};

// Throws InternalError if a structural claim of the detected case fails.
CaseReport case_analysis(const LieAlgebra& l, const Almost3Contact& t);

namespace dim7_labels {
inline const std::string SO3_SEMI_R4 = "so(3)⋉R^4";
inline const std::string R3_AFFC = "R^3×aff(C)";
inline const std::string H2R_R2 = "h_2^R×R^2";
inline const std::string H1C_R = "h_1^C×R";
inline const std::string H1H = "h_1^H";
inline const std::string SO3_R4 = "so(3)×R^4";
inline const std::string SO3_AFFC = "so(3)×aff(C)";
inline const std::string N_R = "n×R";
inline const std::string R7 = "R^7";
}  // namespace dim7_labels

struct Dim7Result {
    std::string label;
    std::optional<Matrix> a;  // 3x3 cocycle matrix when the horizontal part is abelian
};

// Throws PreconditionError "dim-not-7" / "not-abelian", TheoremViolation for inputs
// outside the classification.
Dim7Result classify_dim7(const LieAlgebra& l, const Almost3Contact& t);

// beta with Z = 0 and 2 psi = -beta I, if the structure is canonical.
std::optional<Rational> canonical_check(const LieAlgebra& l, const Almost3Contact& t);

struct ReebKillingReport {
    std::array<std::array<Matrix, 3>, 3> a;  // A_ij as bilinear forms on projected basis vectors
    bool normal_skew = false;                // each N_{phi_i} skew on the horizontal space
    bool killing = false;                    // each ad_{xi_i} skew with respect to g
    bool condition_iii = false;
    bool aii_zero = false;
    std::optional<Rational> beta;  // A_ij = -A_ji = beta Phi_k
    bool canonical = false;
};

// Throws PreconditionError "metric-incompatible".
ReebKillingReport reeb_killing_tensors(const LieAlgebra& l, const Almost3Contact& t, const Metric& g);

// c + sum eta_i ∧ d eta_i + 2(beta + 2 delta) eta_1 ∧ eta_2 ∧ eta_3.
// Throws PreconditionError "not-canonical" / "metric-incompatible".
Form canonical_torsion(const LieAlgebra& l, const Almost3Contact& t, const Metric& g);
// The horizontal 3-form c(X,Y,Z) = -g([X,Y],Z) - g([Y,Z],X) - g([Z,X],Y), zero along the vertical space.
Form horizontal_bracket_form(const LieAlgebra& l, const Matrix& projector, const Metric& g);

// (alpha, delta) with d eta_i = 2 alpha Phi_i + 2(alpha - delta) eta_j ∧ eta_k and alpha != 0.
std::optional<std::pair<Rational, Rational>> alpha_delta_sasaki(const LieAlgebra& l, const Almost3Contact& t, const Metric& g);

}  // namespace contactlie
