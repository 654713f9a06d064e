#include "contactlie/three_contact.hpp"

#include "contactlie/errors.hpp"

#include <algorithm>

namespace contactlie {

namespace {

std::string perm_label(const std::array<std::size_t, 3>& p) {
    return "(" + std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," + std::to_string(p[2] + 1) + ")";
}

Matrix eta_rows(const Almost3Contact& t) { return Matrix::from_rows({t.s[0].eta, t.s[1].eta, t.s[2].eta}); }

void require_abelian(const LieAlgebra& l, const Almost3Contact& t) {
    auto rep = validate_almost_3contact(l, t);
    if (!rep.ok()) throw PreconditionError("invalid-structure", rep.violations.front());
    if (!is_abelian_3contact(l, t)) throw PreconditionError("not-abelian", "the 3-contact structure is not abelian");
}

int levi_civita_symbol(std::size_t r, std::size_t s, std::size_t t) {
    for (const auto& p : kEvenPermutations)
        if (p[0] == r && p[1] == s && p[2] == t) return 1;
    for (const auto& p : kEvenPermutations)
        if (p[1] == r && p[0] == s && p[2] == t) return -1;
    return 0;
}

// Full basis (xi_1, xi_2, xi_3, h_1, ...) with inverse, for reading off coordinates.
struct Frame {
    std::vector<Vector> h;
    Matrix basis, inv;
    Vector h_coords(const Vector& v) const {
        Vector c = inv * v;
        return Vector(c.begin() + 3, c.end());
    }
    Vector v_coords(const Vector& v) const {
        Vector c = inv * v;
        return Vector(c.begin(), c.begin() + 3);
    }
};

Frame frame(const Almost3Contact& t) {
    Frame f;
    f.h = horizontal_basis(t);
    std::vector<Vector> cols{t.s[0].xi, t.s[1].xi, t.s[2].xi};
    cols.insert(cols.end(), f.h.begin(), f.h.end());
    f.basis = Matrix::from_columns(cols, t.s[0].xi.size());
    f.inv = *inverse(f.basis);
    return f;
}

Matrix restrict_endo(const Frame& f, const Endomorphism& e) {
    std::size_t m = f.h.size();
    Matrix out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        Vector c = f.h_coords(e * f.h[j]);
        for (std::size_t i = 0; i < m; ++i) out(i, j) = c[i];
    }
    return out;
}

}  // namespace

Matrix horizontal_projector(const Almost3Contact& t) {
    Matrix p = Matrix::identity(t.s[0].xi.size());
    for (const auto& s : t.s) p -= Matrix::outer(s.xi, s.eta);
    return p;
}

std::vector<Vector> horizontal_basis(const Almost3Contact& t) { return kernel(eta_rows(t)); }

Subspace vertical_space(const Almost3Contact& t) {
    return Subspace::span(t.s[0].xi.size(), {t.s[0].xi, t.s[1].xi, t.s[2].xi});
}

Almost3Contact change_basis(const Almost3Contact& t, const Matrix& p) {
    return {{change_basis(t.s[0], p), change_basis(t.s[1], p), change_basis(t.s[2], p)}};
}

bool is_compatible(const Almost3Contact& t, const Metric& g) {
    for (const auto& s : t.s)
        if (!is_compatible(s, g)) return false;
    return true;
}

ValidationReport validate_almost_3contact(const LieAlgebra& l, const Almost3Contact& t) {
    std::size_t n = l.dim();
    if (n % 4 != 3) throw PreconditionError("dim-not-3-mod-4", "dimension must be congruent to 3 mod 4");
    ValidationReport rep;
    for (std::size_t i = 0; i < 3; ++i) {
        auto r = validate_almost_contact(l, t.s[i]);
        for (const auto& v : r.violations) rep.violations.push_back("structure " + std::to_string(i + 1) + ": " + v);
    }
    if (!rep.ok()) return rep;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (dot(t.s[i].eta, t.s[j].xi) != Rational(i == j ? 1 : 0))
                rep.violations.push_back("eta_i(xi_j) = delta_ij at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (const auto& p : kEvenPermutations) {
        const auto &a = t.s[p[0]], &b = t.s[p[1]], &c = t.s[p[2]];
        std::string tag = perm_label(p) + ": ";
        if (c.phi != a.phi * b.phi - Matrix::outer(a.xi, b.eta)) rep.violations.push_back(tag + "phi_k = phi_i phi_j - eta_j⊗xi_i");
        if (c.phi != -(b.phi * a.phi) + Matrix::outer(b.xi, a.eta)) rep.violations.push_back(tag + "phi_k = -phi_j phi_i + eta_i⊗xi_j");
        if (c.xi != a.phi * b.xi) rep.violations.push_back(tag + "xi_k = phi_i xi_j");
        if (c.xi != -(b.phi * a.xi)) rep.violations.push_back(tag + "xi_k = -phi_j xi_i");
        if (c.eta != row_times(a.eta, b.phi)) rep.violations.push_back(tag + "eta_k = eta_i∘phi_j");
        if (c.eta != -row_times(b.eta, a.phi)) rep.violations.push_back(tag + "eta_k = -eta_j∘phi_i");
    }
    rep.h_dim = horizontal_basis(t).size();
    if (rep.h_dim != n - 3) rep.violations.push_back("dim h = dim g - 3");
    return rep;
}

bool is_abelian_3contact(const LieAlgebra& l, const Almost3Contact& t) {
    bool a[3];
    for (std::size_t i = 0; i < 3; ++i) a[i] = is_abelian_contact(l, t.s[i]).ok;
    for (std::size_t i = 0; i < 3; ++i)
        if (a[(i + 1) % 3] && a[(i + 2) % 3] && !a[i])
            throw InternalError("two structures are abelian but the third is not");
    return a[0] && a[1] && a[2];
}

StructureInvariants structure_invariants(const LieAlgebra& l, const Almost3Contact& t) {
    require_abelian(l, t);
    std::size_t n = l.dim();
    StructureInvariants inv;
    for (const auto& p : kEvenPermutations) inv.zeta[p[2]] = l.bracket(t.s[p[0]].xi, t.s[p[1]].xi);
    inv.z = t.s[0].phi * inv.zeta[0];
    for (std::size_t i = 1; i < 3; ++i)
        if (t.s[i].phi * inv.zeta[i] != inv.z) throw InternalError("phi_i zeta_i depends on i");

    Rational two_delta = dot(t.s[0].eta, l.bracket(t.s[1].xi, t.s[2].xi));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                if (dot(t.s[r].eta, l.bracket(t.s[a].xi, t.s[b].xi)) != Rational(levi_civita_symbol(r, a, b)) * two_delta)
                    throw PreconditionError("no-reeb-commutator", "eta_r([xi_s, xi_t]) is not 2 delta epsilon_rst");
    inv.delta = two_delta / Rational(2);

    Matrix p = horizontal_projector(t);
    inv.psi = l.ad(t.s[0].xi) * t.s[0].phi * p;
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix adx = l.ad(t.s[i].xi);
        if (adx * t.s[i].phi * p != inv.psi) throw InternalError("ad_{xi_i}∘phi_i depends on i");
        if (t.s[i].phi * adx * p != inv.psi) throw InternalError("ad_{xi_i} and phi_i do not commute on h");
    }
    inv.psi_rank = rank(inv.psi);
    (void)n;
    return inv;
}

std::vector<std::string> lemma_identities(const LieAlgebra& l, const Almost3Contact& t, const StructureInvariants& inv) {
    std::vector<std::string> failed;
    auto check = [&](bool ok, const std::string& name) {
        if (!ok) failed.push_back(name);
    };
    std::size_t n = l.dim();
    Matrix p = horizontal_projector(t);
    auto hb = horizontal_basis(t);
    const Matrix& psi = inv.psi;
    const Rational& d = inv.delta;
    Matrix etas = eta_rows(t);
    std::array<Matrix, 3> ad;
    for (std::size_t i = 0; i < 3; ++i) ad[i] = l.ad(t.s[i].xi);

    for (std::size_t i = 0; i < 3; ++i)
        check(inv.zeta[i] == -(t.s[i].phi * inv.z) + (Rational(2) * d) * t.s[i].xi, "zeta_i = -phi_i Z + 2 delta xi_i");
    check(is_zero(psi * inv.z), "psi(Z) = 0");
    for (std::size_t i = 0; i < 3; ++i) check(is_zero(ad[i] * inv.z), "[xi_i, Z] = 0");
    check(l.ad(inv.z) * p == Rational(2) * (psi * psi + d * psi), "ad_Z = 2(psi^2 + delta psi) on h");
    for (std::size_t i = 0; i < 3; ++i) {
        check(psi * t.s[i].phi == t.s[i].phi * psi, "psi∘phi_i = phi_i∘psi");
        check(psi * ad[i] * p == ad[i] * psi, "psi∘ad_{xi_i} = ad_{xi_i}∘psi on h");
    }
    check(inv.psi_rank % 4 == 0, "rank psi divisible by 4");

    std::vector<Vector> image;
    for (std::size_t j = 0; j < n; ++j) image.push_back(psi.column(j));
    Subspace im = Subspace::span(n, image);
    std::vector<Vector> krows;
    for (std::size_t r = 0; r < n; ++r) krows.push_back(psi.row(r));
    for (std::size_t r = 0; r < 3; ++r) krows.push_back(etas.row(r));
    Subspace ker = Subspace::span(n, kernel(Matrix::from_rows(krows)));
    for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& v : im.basis()) check(im.contains(t.s[i].phi * v), "Im psi is phi_i-invariant");
        for (const auto& v : ker.basis()) check(ker.contains(t.s[i].phi * v), "Ker psi is phi_i-invariant");
    }

    for (const auto& pm : kEvenPermutations) {
        std::size_t i = pm[0], j = pm[1], k = pm[2];
        const auto &si = t.s[i], &sj = t.s[j];
        check(si.phi * inv.zeta[j] == inv.zeta[k], "phi_i zeta_j = zeta_k");
        check(-(sj.phi * inv.zeta[i]) == inv.zeta[k], "-phi_j zeta_i = zeta_k");
        for (const auto& x : hb) {
            Vector xk = ad[k] * x;
            check(is_zero(etas * (ad[i] * x)), "[xi_i, X] in h");
            check(ad[i] * (si.phi * x) == ad[j] * (sj.phi * x), "[xi_i, phi_i X] = [xi_j, phi_j X]");
            check(ad[i] * (sj.phi * x) == xk, "[xi_i, phi_j X] = [xi_k, X]");
            check(-(ad[j] * (si.phi * x)) == xk, "-[xi_j, phi_i X] = [xi_k, X]");
            check(si.phi * (ad[j] * x) == xk, "phi_i [xi_j, X] = [xi_k, X]");
            check(-(sj.phi * (ad[i] * x)) == xk, "-phi_j [xi_i, X] = [xi_k, X]");
            check(ad[i] * (ad[i] * x) == -(psi * (psi * x)), "[xi_i, [xi_i, X]] = -psi^2 X");
            check(ad[i] * (ad[j] * x) == -(psi * xk), "[xi_i, [xi_j, X]] = -psi [xi_k, X]");
            for (const auto& y : hb)
                check(l.bracket(si.phi * x, sj.phi * y) == l.bracket(t.s[k].phi * x, y), "[phi_i X, phi_j Y] = [phi_k X, Y]");
        }
    }

    bool v_sub = is_subalgebra(l, vertical_space(t));
    check(v_sub == is_zero(inv.z), "v subalgebra iff Z = 0");
    if (is_zero(inv.z))
        for (const auto& pm : kEvenPermutations)
            check(inv.zeta[pm[2]] == (Rational(2) * d) * t.s[pm[2]].xi, "[xi_i, xi_j] = 2 delta xi_k when Z = 0");

    std::sort(failed.begin(), failed.end());
    failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
    return failed;
}

AlmostContact sphere_structure(const Almost3Contact& t, const Vector& a) {
    if (a.size() != 3 || dot(a, a) != Rational(1)) throw PreconditionError("not-unit", "a must be a rational unit 3-vector");
    std::size_t n = t.s[0].xi.size();
    AlmostContact out{Matrix(n, n), Vector(n), Vector(n)};
    for (std::size_t i = 0; i < 3; ++i) {
        out.phi += a[i] * t.s[i].phi;
        out.xi += a[i] * t.s[i].xi;
        out.eta += a[i] * t.s[i].eta;
    }
    return out;
}

std::string CaseReport::tag() const {
    switch (kind) {
        case CaseKind::PsiInvertible: return "PsiInvertible";
        case CaseKind::PsiZero_ZZero_DeltaZero: return "PsiZero_ZZero_DeltaZero";
        case CaseKind::PsiZero_ZZero_DeltaNonzero: return "PsiZero_ZZero_DeltaNonzero";
        case CaseKind::PsiZero_ZNonzero: return "PsiZero_ZNonzero";
        case CaseKind::Intermediate: return "Intermediate(" + std::to_string(rank) + ")";
    }
    return "";
}

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw InternalError("case analysis: " + what);
}

std::array<Endomorphism, 3> restricted_structures(const Frame& f, const Almost3Contact& t) {
    return {restrict_endo(f, t.s[0].phi), restrict_endo(f, t.s[1].phi), restrict_endo(f, t.s[2].phi)};
}

bool is_abelian_hypercomplex(const LieAlgebra& h, const std::array<Endomorphism, 3>& j) {
    for (const auto& x : j)
        if (!is_abelian_complex_structure(h, x)) return false;
    return j[0] * j[1] == j[2] && j[1] * j[0] == -j[2];
}

}  // namespace

CaseReport case_analysis(const LieAlgebra& l, const Almost3Contact& t) {
    CaseReport rep;
    rep.invariants = structure_invariants(l, t);
    const auto& inv = rep.invariants;
    rep.rank = inv.psi_rank;
    Frame f = frame(t);
    rep.h_basis = f.h;
    std::size_t n = l.dim(), m = f.h.size();
    Subspace hs = Subspace::span(n, f.h);
    Subspace vs = vertical_space(t);
    Matrix p = horizontal_projector(t);
    const Rational& d = inv.delta;
    bool z_zero = is_zero(inv.z);

    if (rep.rank == 0 && z_zero) {
        for (const auto& pm : kEvenPermutations)
            expect(l.bracket(t.s[pm[0]].xi, t.s[pm[1]].xi) == (Rational(2) * d) * t.s[pm[2]].xi, "[xi_i, xi_j] = 2 delta xi_k");
        if (d.is_zero()) {
            rep.kind = CaseKind::PsiZero_ZZero_DeltaZero;
            expect(center(l).contains(vs), "v is central");
            std::vector<Bracket> br;
            Form theta(m, 2, 3);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) {
                    Vector xy = l.bracket(f.h[a], f.h[b]);
                    Vector hc = f.h_coords(xy);
                    if (!is_zero(hc)) br.push_back({a, b, hc});
                    theta.set({a, b}, f.v_coords(xy));
                }
            rep.h = LieAlgebra(m, br);
            rep.theta = theta;
            rep.j = restricted_structures(f, t);
            expect(!jacobi_check(*rep.h), "induced bracket on h satisfies Jacobi");
            expect(is_abelian_hypercomplex(*rep.h, *rep.j), "restricted phi_i form an abelian hypercomplex structure");
            expect(m < 3 || is_cocycle(*rep.h, theta), "theta is a cocycle");
            for (const auto& j : *rep.j) expect(pullback(theta, j) == theta, "theta is J_i-invariant");
        } else {
            rep.kind = CaseKind::PsiZero_ZZero_DeltaNonzero;
            expect(is_ideal(l, hs), "h is an ideal");
            expect(is_ideal(l, vs), "v is an ideal");
            expect(bracket_span(l, vs, hs).dim() == 0, "[v, h] = 0");
            rep.h = restrict_to(l, f.h);
            rep.j = restricted_structures(f, t);
            expect(is_abelian_hypercomplex(*rep.h, *rep.j), "restricted phi_i form an abelian hypercomplex structure");
        }
    } else if (rep.rank == 0) {
        rep.kind = CaseKind::PsiZero_ZNonzero;
        expect(is_ideal(l, hs), "h is an ideal");
        rep.h = restrict_to(l, f.h);
        rep.j = restricted_structures(f, t);
        for (std::size_t i = 0; i < 3; ++i) {
            Vector zi = t.s[i].phi * inv.z;
            for (const auto& x : f.h) {
                expect(is_zero(l.bracket(zi, x)), "Z_i is central in h");
                expect(is_zero(l.bracket(t.s[i].xi, x)), "[xi_i, h] = 0");
            }
        }
        for (const auto& x : f.h) expect(is_zero(l.bracket(inv.z, x)), "Z is central in h");
        for (const auto& pm : kEvenPermutations) {
            Vector zk = t.s[pm[2]].phi * inv.z;
            expect(l.bracket(t.s[pm[0]].xi, t.s[pm[1]].xi) == (Rational(2) * d) * t.s[pm[2]].xi - zk,
                   "[xi_i, xi_j] = 2 delta xi_k - Z_k");
        }
        if (!d.is_zero()) {
            std::array<Vector, 3> u;
            for (std::size_t i = 0; i < 3; ++i) u[i] = (Rational(2) * d) * t.s[i].xi - t.s[i].phi * inv.z;
            rep.u = Subspace::span(n, {u[0], u[1], u[2]});
            expect(rep.u->dim() == 3, "u is 3-dimensional");
            for (const auto& pm : kEvenPermutations)
                expect(l.bracket(u[pm[0]], u[pm[1]]) == (Rational(4) * d * d) * u[pm[2]], "u has so(3) brackets");
            expect(bracket_span(l, *rep.u, hs).dim() == 0, "[u, h] = 0");
        }
    } else if (rep.rank == m) {
        rep.kind = CaseKind::PsiInvertible;
        expect(!d.is_zero(), "delta != 0");
        expect(inv.psi == -(d * p), "psi = -delta I");
        expect(is_ideal(l, hs) && bracket_span(l, hs, hs).dim() == 0, "h is an abelian ideal");
        for (const auto& pm : kEvenPermutations)
            expect(l.bracket(t.s[pm[0]].xi, t.s[pm[1]].xi) == (Rational(2) * d) * t.s[pm[2]].xi, "[xi_i, xi_j] = 2 delta xi_k");
        for (std::size_t i = 0; i < 3; ++i)
            for (const auto& x : f.h) expect(l.bracket(t.s[i].xi, x) == d * (t.s[i].phi * x), "[xi_i, X] = delta phi_i X");
        rep.h = restrict_to(l, f.h);
        rep.j = restricted_structures(f, t);
    } else {
        rep.kind = CaseKind::Intermediate;
    }
    return rep;
}

namespace {

bool is_affc_fingerprint(const LieAlgebra& h) {
    if (h.dim() != 4 || h.is_abelian()) return false;
    auto ds = derived_series(h);
    return ds.terms.size() > 1 && ds.terms[1].dim() == 2 && ds.is_2step_solvable && center(h).dim() == 0;
}

}  // namespace

Dim7Result classify_dim7(const LieAlgebra& l, const Almost3Contact& t) {
    using namespace dim7_labels;
    if (l.dim() != 7) throw PreconditionError("dim-not-7", "classify_dim7 needs a 7-dimensional algebra");
    require_abelian(l, t);
    Dim7Result out;
    if (l.is_abelian()) {
        out.label = R7;
        return out;
    }
    CaseReport rep = case_analysis(l, t);
    const Rational& d = rep.invariants.delta;
    switch (rep.kind) {
        case CaseKind::PsiInvertible: out.label = SO3_SEMI_R4; break;
        case CaseKind::PsiZero_ZNonzero: out.label = d.is_zero() ? N_R : SO3_R4; break;
        case CaseKind::PsiZero_ZZero_DeltaNonzero:
            if (rep.h->is_abelian()) out.label = SO3_R4;
            else if (is_affc_fingerprint(*rep.h)) out.label = SO3_AFFC;
            else throw TheoremViolation("horizontal ideal is neither R^4 nor aff(C)");
            break;
        case CaseKind::PsiZero_ZZero_DeltaZero: {
            if (!rep.h->is_abelian()) {
                if (!is_affc_fingerprint(*rep.h)) throw TheoremViolation("horizontal algebra is neither R^4 nor aff(C)");
                out.label = R3_AFFC;
                break;
            }
            // Adapted basis W, J1 W, J2 W, J3 W with W the first horizontal vector.
            const auto& j = *rep.j;
            Vector w = unit_vector(4, 0);
            std::array<Vector, 4> fb{w, j[0] * w, j[1] * w, j[2] * w};
            auto th = [&](std::size_t a, std::size_t b) { return rep.theta->evaluate({fb[a], fb[b]}); };
            Matrix a = Matrix::from_columns({th(0, 1), th(0, 2), th(0, 3)}, 3);
            if (th(0, 1) != -th(2, 3) || th(0, 2) != th(1, 3) || th(0, 3) != -th(1, 2))
                throw InternalError("cocycle is not of the hypercomplex-invariant shape");
            out.a = a;
            switch (rank(a)) {
                case 1: out.label = H2R_R2; break;
                case 2: out.label = H1C_R; break;
                case 3: out.label = H1H; break;
                default: throw TheoremViolation("non-abelian algebra with zero cocycle matrix");
            }
            break;
        }
        case CaseKind::Intermediate:
            throw TheoremViolation("psi has intermediate rank " + std::to_string(rep.rank) + " in dimension 7");
    }
    return out;
}

std::optional<Rational> canonical_check(const LieAlgebra& l, const Almost3Contact& t) {
    StructureInvariants inv = structure_invariants(l, t);
    if (!is_zero(inv.z)) return std::nullopt;
    Matrix p = horizontal_projector(t);
    auto hb = horizontal_basis(t);
    Rational beta;
    if (!hb.empty()) {
        Vector img = inv.psi * hb[0];
        std::size_t k = 0;
        while (hb[0][k].is_zero()) ++k;
        beta = Rational(-2) * img[k] / hb[0][k];
    }
    if (Rational(2) * inv.psi != -(beta * p)) return std::nullopt;
    for (const auto& pm : kEvenPermutations)
        if (l.bracket(t.s[pm[0]].xi, t.s[pm[1]].xi) != (Rational(2) * inv.delta) * t.s[pm[2]].xi)
            throw InternalError("Z = 0 but [xi_i, xi_j] != 2 delta xi_k");
    for (std::size_t i = 0; i < 3; ++i)
        if (l.ad(t.s[i].xi) * p != (beta / Rational(2)) * t.s[i].phi * p)
            throw InternalError("2 psi = -beta I but ad_{xi_i} != (beta/2) phi_i on h");
    return beta;
}

ReebKillingReport reeb_killing_tensors(const LieAlgebra& l, const Almost3Contact& t, const Metric& g) {
    if (!is_compatible(t, g)) throw PreconditionError("metric-incompatible", "g is not compatible with all three structures");
    std::size_t n = l.dim();
    Matrix p = horizontal_projector(t);
    std::vector<Vector> x(n);
    for (std::size_t a = 0; a < n; ++a) x[a] = p.column(a);
    std::array<Matrix, 3> ad;
    for (std::size_t i = 0; i < 3; ++i) ad[i] = l.ad(t.s[i].xi);

    ReebKillingReport rep;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Matrix& phi = t.s[i].phi;
            Matrix lie = ad[j] * phi - phi * ad[j];
            Matrix a(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const Vector &u = x[r], &v = x[c];
                    Rational val = g(lie * u, v);
                    val -= dot(t.s[j].eta, l.bracket(u, phi * v));
                    val -= dot(t.s[j].eta, l.bracket(phi * u, v));
                    a(r, c) = val;
                }
            rep.a[i][j] = a;
        }

    rep.aii_zero = rep.a[0][0].is_zero() && rep.a[1][1].is_zero() && rep.a[2][2].is_zero();
    std::array<Matrix, 3> big_phi;
    for (std::size_t k = 0; k < 3; ++k) big_phi[k] = p.transpose() * g.matrix() * t.s[k].phi * p;
    std::optional<Rational> beta;
    const Matrix& a12 = rep.a[0][1];
    const Matrix& f3 = big_phi[2];
    beta = Rational(0);
    for (std::size_t r = 0; r < n && beta->is_zero(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!f3(r, c).is_zero()) {
                beta = a12(r, c) / f3(r, c);
                break;
            }
    for (const auto& pm : kEvenPermutations) {
        const Matrix& fk = big_phi[pm[2]];
        if (rep.a[pm[0]][pm[1]] != *beta * fk || rep.a[pm[1]][pm[0]] != -(*beta * fk)) beta.reset();
        if (!beta) break;
    }
    rep.beta = beta;

    rep.killing = true;
    for (std::size_t i = 0; i < 3; ++i)
        if (!(ad[i].transpose() * g.matrix() + g.matrix() * ad[i]).is_zero()) rep.killing = false;

    // N_{phi_i}(X, Y, Z) = g(N(X, Y), Z) and d Phi_i(phi_i X, phi_i Y, phi_i Z) on horizontal vectors.
    auto hb = horizontal_basis(t);
    std::size_t m = hb.size();
    Matrix hbm = Matrix::from_columns(hb, n);
    std::array<std::vector<Rational>, 3> q;
    rep.normal_skew = true;
    for (std::size_t i = 0; i < 3; ++i) {
        Form nt = normality_tensor(l, t.s[i]).tensor;
        Form dphi = ce_differential(l, fundamental_form(t.s[i], g));
        Form pulled = pullback(dphi, t.s[i].phi * hbm);
        q[i].resize(m * m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vector nxy = nt.evaluate({hb[a], hb[b]});
                for (std::size_t c = 0; c < m; ++c) {
                    Rational nv = g(nxy, hb[c]);
                    if (nv != -g(nt.evaluate({hb[a], hb[c]}), hb[b])) rep.normal_skew = false;
                    q[i][(a * m + b) * m + c] = nv - (m >= 3 ? pulled.scalar_at({a, b, c}) : Rational(0));
                }
            }
    }
    rep.condition_iii = q[0] == q[1] && q[1] == q[2];
    rep.canonical = rep.normal_skew && rep.killing && rep.condition_iii && rep.aii_zero && rep.beta.has_value();
    return rep;
}

Form horizontal_bracket_form(const LieAlgebra& l, const Matrix& proj, const Metric& g) {
    std::size_t n = l.dim();
    Form c(n, 3);
    for (const auto& idx : increasing_tuples(n, 3)) {
        Vector x = proj.column(idx[0]), y = proj.column(idx[1]), z = proj.column(idx[2]);
        c.set(idx, -g(l.bracket(x, y), z) - g(l.bracket(y, z), x) - g(l.bracket(z, x), y));
    }
    return c;
}

Form canonical_torsion(const LieAlgebra& l, const Almost3Contact& t, const Metric& g) {
    if (!is_compatible(t, g)) throw PreconditionError("metric-incompatible", "g is not compatible with all three structures");
    auto beta = canonical_check(l, t);
    if (!beta) throw PreconditionError("not-canonical", "the structure is not canonical");
    Rational delta = structure_invariants(l, t).delta;
    std::size_t n = l.dim();
    Form out = horizontal_bracket_form(l, horizontal_projector(t), g);
    std::array<Form, 3> eta;
    for (std::size_t i = 0; i < 3; ++i) {
        eta[i] = Form::covector(t.s[i].eta);
        out += wedge(eta[i], ce_differential(l, eta[i]));
    }
    out += (Rational(2) * (*beta + Rational(2) * delta)) * wedge(eta[0], wedge(eta[1], eta[2]));
    (void)n;
    return out;
}

std::optional<std::pair<Rational, Rational>> alpha_delta_sasaki(const LieAlgebra& l, const Almost3Contact& t, const Metric& g) {
    std::size_t n = l.dim();
    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& pm : kEvenPermutations) {
        Form ei = Form::covector(t.s[pm[0]].eta);
        Form ejk = wedge(Form::covector(t.s[pm[1]].eta), Form::covector(t.s[pm[2]].eta));
        Form phi = fundamental_form(t.s[pm[0]], g);
        Form deta = ce_differential(l, ei);
        for (const auto& idx : increasing_tuples(n, 2)) {
            Rational p = phi.scalar_at(idx), e = ejk.scalar_at(idx);
            rows.push_back({Rational(2) * (p + e), Rational(-2) * e});
            rhs.push_back(deta.scalar_at(idx));
        }
    }
    Matrix m = Matrix::from_rows(rows);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    if ((*x)[0].is_zero()) {
        for (const auto& k : kernel(m))
            if (!k[0].is_zero()) {
                x = *x + k;
                break;
            }
    }
    if ((*x)[0].is_zero()) return std::nullopt;
    return std::make_pair((*x)[0], (*x)[1]);
}

}  // namespace contactlie
