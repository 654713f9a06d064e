#pragma once

#include "contactlie/contact.hpp"
#include "contactlie/three_contact.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace contactlie {

using Structure = std::variant<AlmostContact, Almost3Contact>;

struct CatalogEntry {
    std::string name;
    std::map<std::string, std::string> params;
    LieAlgebra algebra;
    Structure structure;
    Metric metric;
    std::map<std::string, std::string> expected;  // invariant name -> expected value

    bool is_3contact() const { return std::holds_alternative<Almost3Contact>(structure); }
    const AlmostContact& contact() const { return std::get<AlmostContact>(structure); }
    const Almost3Contact& three_contact() const { return std::get<Almost3Contact>(structure); }
};

// V ⊕_theta h with V central, dim V = theta.target() in {1, 3}; basis (V, h).
// Throws PreconditionError "structure-count", "J-not-abelian-complex",
// "J-not-quaternionic", "theta-not-cocycle", "theta-not-J-invariant".
CatalogEntry central_extension(const LieAlgebra& h, const Form& theta, const std::vector<Endomorphism>& j);

// R xi ⋉_D h with [xi, X] = D X; basis (xi, h).
// Throws PreconditionError "D-not-derivation", "D-J-not-commuting", "J-not-abelian-complex".
CatalogEntry semidirect_by_derivation(const LieAlgebra& h, const Endomorphism& j, const Endomorphism& d);

// [xi_i, xi_j] = 2 delta xi_k, [xi_i, X] = delta phi_i X on R^{4n}. Throws "delta-zero".
CatalogEntry so3_semidirect(std::size_t n, const Rational& delta);

// The standard triple on span{xi_i} ⊕ R^{4n}: phi_i xi_j = xi_k and
// phi_i tau_r = tau_{in+r}, phi_i tau_{jn+r} = tau_{kn+r}.
Almost3Contact quaternionic_structures(std::size_t n);
// The same vertical part with the given horizontal hypercomplex matrices.
Almost3Contact vertical_plus(const std::array<Endomorphism, 3>& j);

// Standard hypercomplex matrices on R^4 and the abelian hypercomplex structure on aff(C).
std::array<Endomorphism, 3> hypercomplex_r4();
std::array<Endomorphism, 3> hypercomplex_affc();
LieAlgebra aff_c();

struct HypercomplexCheck {
    bool is_hypercomplex = false;
    bool is_abelian_hypercomplex = false;
    bool integrable = false;  // Nijenhuis tensor of each J_i vanishes
};

// Throws PreconditionError "dim-not-multiple-of-4".
HypercomplexCheck hypercomplex_check(const LieAlgebra& h, const std::array<Endomorphism, 3>& j);

enum class FourDimType { R4, AffC, Neither };
FourDimType recognize_4d(const LieAlgebra& h, const std::array<Endomorphism, 3>& j);

// For covectors f_1..f_m on h the extension by theta = sum d f_i ⊗ v_i is
// isomorphic to the product V × h through T(v + X) = v + sum f_i(X) v_i + X.
struct ExactExtension {
    LieAlgebra extension;
    LieAlgebra product;
    Matrix t;  // extension basis -> product basis
    bool is_isomorphism = false;
};
ExactExtension exact_extension_isomorphism(const LieAlgebra& h, const std::vector<Vector>& f,
                                           const std::vector<Endomorphism>& j);

// aff(R)^k × R^{2s} fingerprint: h' abelian of dim k, center of dim 2s,
// h' ∩ center = 0 and 2k + 2s = dim h.
bool matches_affr_power_fingerprint(const LieAlgebra& h);

// Named examples. Throws PreconditionError "unknown-name" / "parameter-out-of-range" /
// "unknown-parameter".
CatalogEntry catalog(const std::string& name, const std::map<std::string, std::string>& params = {});
std::vector<std::string> catalog_names();

struct ExpectationMismatch {
    std::string key, expected, actual;
};
// Recomputes every key of entry.expected; empty result means all match.
// Keys: abelian, normal, xi_central, metric_class, dim3_label, dim7_label, case,
// delta, psi_rank, Z_zero, beta, parallel_torsion, ricci_symmetric,
// two_step_solvable, center_dim, affr_fingerprint.
std::vector<ExpectationMismatch> check_expected(const CatalogEntry& entry);
std::string evaluate_invariant(const CatalogEntry& entry, const std::string& key);

}  // namespace contactlie
