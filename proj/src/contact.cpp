#include "contactlie/contact.hpp"

#include "contactlie/errors.hpp"

namespace contactlie {

namespace {

void check_dims(const LieAlgebra& l, const AlmostContact& s) {
    std::size_t n = l.dim();
    if (s.phi.rows() != n || s.phi.cols() != n || s.xi.size() != n || s.eta.size() != n)
        throw PreconditionError("dimension-mismatch", "structure tensors do not match the algebra dimension");
}

void require_valid(const LieAlgebra& l, const AlmostContact& s) {
    auto rep = validate_almost_contact(l, s);
    if (!rep.ok()) throw PreconditionError("invalid-structure", rep.violations.front());
}

void require_abelian(const LieAlgebra& l, const AlmostContact& s) {
    require_valid(l, s);
    auto ab = is_abelian_contact(l, s);
    if (!ab) throw PreconditionError("not-abelian", ab.failed_identity);
}

// Basis (xi, h_1, ..., h_{n-1}) as columns, with its inverse.
struct Adapted {
    Matrix basis;
    Matrix inv;
    std::vector<Vector> h;
};

Adapted adapted_basis(const AlmostContact& s) {
    Adapted a;
    a.h = horizontal_basis(s);
    std::vector<Vector> cols{s.xi};
    cols.insert(cols.end(), a.h.begin(), a.h.end());
    a.basis = Matrix::from_columns(cols, s.xi.size());
    a.inv = *inverse(a.basis);
    return a;
}

// Coordinates of a horizontal vector in the horizontal basis.
Vector h_coords(const Adapted& a, const Vector& v) {
    Vector full = a.inv * v;
    return Vector(full.begin() + 1, full.end());
}

}  // namespace

Matrix horizontal_projector(const AlmostContact& s) {
    return Matrix::identity(s.xi.size()) - Matrix::outer(s.xi, s.eta);
}

std::vector<Vector> horizontal_basis(const AlmostContact& s) {
    return kernel(Matrix::from_rows({s.eta}));
}

AlmostContact change_basis(const AlmostContact& s, const Matrix& p) {
    Matrix pinv = *inverse(p);
    return {pinv * s.phi * p, pinv * s.xi, row_times(s.eta, p)};
}

ValidationReport validate_almost_contact(const LieAlgebra& l, const AlmostContact& s) {
    check_dims(l, s);
    std::size_t n = l.dim();
    ValidationReport rep;
    if (n % 2 == 0) rep.warnings.push_back("even-dimensional algebra");
    if (s.phi * s.phi != -Matrix::identity(n) + Matrix::outer(s.xi, s.eta))
        rep.violations.push_back("phi^2 = -I + eta⊗xi");
    if (dot(s.eta, s.xi) != Rational(1)) rep.violations.push_back("eta(xi) = 1");
    if (!is_zero(s.phi * s.xi)) rep.violations.push_back("phi(xi) = 0");
    if (!is_zero(row_times(s.eta, s.phi))) rep.violations.push_back("eta∘phi = 0");
    std::vector<Vector> image;
    for (std::size_t j = 0; j < n; ++j) image.push_back(s.phi.column(j));
    Subspace ker = Subspace::span(n, horizontal_basis(s));
    if (ker != Subspace::span(n, image)) rep.violations.push_back("Ker eta = Im phi");
    rep.h_dim = ker.dim();
    return rep;
}

bool is_compatible(const AlmostContact& s, const Metric& g) {
    if (g.dim() != s.xi.size()) throw PreconditionError("dimension-mismatch", "metric dimension");
    return s.phi.transpose() * g.matrix() * s.phi == g.matrix() - Matrix::outer(s.eta, s.eta);
}

Form fundamental_form(const AlmostContact& s, const Metric& g) {
    Matrix b = g.matrix() * s.phi;
    std::size_t n = b.rows();
    Form f(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) f.set({i, j}, b(i, j));
    return f;
}

NormalityReport normality_tensor(const LieAlgebra& l, const AlmostContact& s) {
    require_valid(l, s);
    std::size_t n = l.dim();
    const Matrix& phi = s.phi;
    NormalityReport rep;
    rep.tensor = Form(n, 2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector x = unit_vector(n, i), y = unit_vector(n, j);
            Vector px = phi.column(i), py = phi.column(j);
            Vector xy = l.bracket_basis(i, j);
            Vector v = l.bracket(px, py) + phi * (phi * xy) - phi * (l.bracket(px, y) + l.bracket(x, py));
            v += (-dot(s.eta, xy)) * s.xi;
            rep.tensor.set({i, j}, v);
        }
    rep.is_normal = rep.tensor.is_zero();

    Matrix adxi = l.ad(s.xi);
    bool crit = adxi * phi == phi * adxi;
    auto h = horizontal_basis(s);
    for (std::size_t a = 0; crit && a < h.size(); ++a)
        for (std::size_t b = a + 1; crit && b < h.size(); ++b) {
            Vector pa = phi * h[a], pb = phi * h[b];
            Vector lhs = l.bracket(pa, pb) - l.bracket(h[a], h[b]);
            Vector rhs = phi * (l.bracket(pa, h[b]) + l.bracket(h[a], pb));
            crit = lhs == rhs;
        }
    if (crit != rep.is_normal)
        throw InternalError("normality tensor and the two-condition criterion disagree");
    return rep;
}

AbelianCheck is_abelian_contact(const LieAlgebra& l, const AlmostContact& s) {
    check_dims(l, s);
    AbelianCheck out;
    Matrix adxi = l.ad(s.xi);
    if (adxi * s.phi != s.phi * adxi) {
        out.ok = false;
        out.failed_identity = "ad_xi∘phi = phi∘ad_xi";
        return out;
    }
    auto h = horizontal_basis(s);
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = a + 1; b < h.size(); ++b)
            if (l.bracket(s.phi * h[a], s.phi * h[b]) != l.bracket(h[a], h[b])) {
                out.ok = false;
                out.failed_identity = "[phi X, phi Y] = [X, Y]";
                out.first = a + 1;
                out.second = b + 1;
                return out;
            }
    return out;
}

bool is_abelian_complex_structure(const LieAlgebra& h, const Endomorphism& j) {
    std::size_t n = h.dim();
    if (j.rows() != n || j.cols() != n) return false;
    if (j * j != -Matrix::identity(n)) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (h.bracket(j.column(a), j.column(b)) != h.bracket_basis(a, b)) return false;
    return true;
}

namespace {

// Exact alpha with lhs = 2 alpha rhs, alpha != 0, if it exists.
std::optional<Rational> proportionality(const Form& lhs, const Form& rhs) {
    std::optional<Rational> alpha;
    rhs.for_each([&](const Indices& idx, const Vector& v) {
        if (!alpha && !v[0].is_zero()) alpha = lhs.scalar_at(idx) / (Rational(2) * v[0]);
    });
    if (!alpha || alpha->is_zero()) return std::nullopt;
    if (lhs != Rational(2) * *alpha * rhs) return std::nullopt;
    return alpha;
}

}  // namespace

ContactClassReport metric_class(const LieAlgebra& l, const AlmostContact& s, const Metric& g) {
    require_valid(l, s);
    if (!is_compatible(s, g)) throw PreconditionError("metric-incompatible", "g(phi X, phi Y) != g(X, Y) - eta(X) eta(Y)");
    ContactClassReport rep;
    rep.normal = normality_tensor(l, s).is_normal;
    Form eta = Form::covector(s.eta);
    Form phi2 = fundamental_form(s, g);
    Form deta = ce_differential(l, eta);
    Form dphi = l.dim() > 2 ? ce_differential(l, phi2) : Form(l.dim(), 3);
    rep.deta_closed = deta.is_zero();
    rep.dPhi_closed = dphi.is_zero();
    rep.alpha_sasaki = proportionality(deta, phi2);
    if (rep.deta_closed && l.dim() >= 3) rep.alpha_kenmotsu = proportionality(dphi, wedge(eta, phi2));
    if (!rep.normal) {
        rep.labels.push_back("none");
        return rep;
    }
    if (rep.dPhi_closed) rep.labels.push_back("quasi-Sasakian");
    if (rep.dPhi_closed && rep.deta_closed) rep.labels.push_back("coKähler");
    if (rep.alpha_sasaki) {
        rep.labels.push_back("α-Sasakian(" + rep.alpha_sasaki->str() + ")");
        if (*rep.alpha_sasaki == Rational(1)) rep.labels.push_back("Sasakian");
    }
    if (rep.alpha_kenmotsu) {
        rep.labels.push_back("α-Kenmotsu(" + rep.alpha_kenmotsu->str() + ")");
        if (*rep.alpha_kenmotsu == Rational(1)) rep.labels.push_back("Kenmotsu");
    }
    if (rep.labels.empty()) rep.labels.push_back("none");
    return rep;
}

CharacteristicReport characteristic_connection(const LieAlgebra& l, const AlmostContact& s, const Metric& g) {
    require_abelian(l, s);
    if (!is_compatible(s, g)) throw PreconditionError("metric-incompatible", "g(phi X, phi Y) != g(X, Y) - eta(X) eta(Y)");
    std::size_t n = l.dim();
    auto h = horizontal_basis(s);
    Matrix adxi = l.ad(s.xi);
    bool skew = true;
    for (std::size_t a = 0; skew && a < h.size(); ++a)
        for (std::size_t b = a; skew && b < h.size(); ++b)
            skew = (g(adxi * h[a], h[b]) + g(h[a], adxi * h[b])).is_zero();
    Form dphi = ce_differential(l, fundamental_form(s, g));
    bool killing_form_test = interior(s.xi, dphi).is_zero();
    if (skew != killing_form_test)
        throw InternalError("skewness of ad_xi on Ker eta disagrees with xi ⌟ dPhi = 0");

    CharacteristicReport rep;
    rep.exists = skew;
    if (!skew) return rep;
    Matrix p = horizontal_projector(s);
    Form c(n, 3);
    for (const auto& idx : increasing_tuples(n, 3)) {
        Vector x = p.column(idx[0]), y = p.column(idx[1]), z = p.column(idx[2]);
        c.set(idx, -g(l.bracket(x, y), z) - g(l.bracket(y, z), x) - g(l.bracket(z, x), y));
    }
    Form eta = Form::covector(s.eta);
    rep.torsion = wedge(eta, ce_differential(l, eta)) + c;
    return rep;
}

Dim3Result classify_dim3(const LieAlgebra& l, const AlmostContact& s) {
    if (l.dim() != 3) throw PreconditionError("dim-not-3", "classify_dim3 needs a 3-dimensional algebra");
    require_abelian(l, s);
    Matrix p = horizontal_projector(s);
    Vector e1;
    for (std::size_t k = 0; k < 3; ++k)
        if (!is_zero(p.column(k))) {
            e1 = p.column(k);
            break;
        }
    Vector e2 = s.phi * e1;
    Dim3Result r;
    r.basis = Matrix::from_columns({s.xi, e1, e2}, 3);
    LieAlgebra m = l.change_basis(r.basis);
    Vector x1 = m.bracket_basis(0, 1), x2 = m.bracket_basis(0, 2), top = m.bracket_basis(1, 2);
    r.a = x1[1];
    r.b = x1[2];
    if (!x1[0].is_zero() || x2 != Vector{0, -r.b, r.a})
        throw InternalError("ad_xi does not have the rotation-dilation shape on an abelian structure");
    r.alpha = top[0];
    r.beta = top[1];
    r.gamma = top[2];
    const Rational &a = r.a, &b = r.b, &al = r.alpha, &be = r.beta, &ga = r.gamma;
    bool system = (a * al).is_zero() && (a * be + b * ga).is_zero() && (a * ga - b * be).is_zero();
    if (!system) {
        if (jacobi_check(l)) throw PreconditionError("jacobi", "the algebra violates the Jacobi identity");
        throw InternalError("Jacobi holds but the dim-3 parameter system fails");
    }
    using namespace dim3_labels;
    if (a.is_zero() && b.is_zero()) {
        if (!(be * be + ga * ga).is_zero()) r.label = AFFR_R;
        else r.label = al.is_zero() ? R3 : H1R;
    } else if (!al.is_zero()) {
        r.label = (b * al).sign() > 0 ? SO3 : SL2R;
    } else if (b.is_zero()) {
        r.label = R31;
    } else {
        r.label = R3PRIME;
        r.lambda = abs(a / b);
    }
    return r;
}

CentralDecomposition decompose_central_extension(const LieAlgebra& l, const AlmostContact& s) {
    require_abelian(l, s);
    if (!center(l).contains(s.xi)) throw PreconditionError("xi-not-central", "xi is not in the center");
    Adapted a = adapted_basis(s);
    std::size_t m = a.h.size();
    std::vector<Bracket> br;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vector v = h_coords(a, l.bracket(a.h[i], a.h[j]));
            if (!is_zero(v)) br.push_back({i, j, v});
        }
    CentralDecomposition out{LieAlgebra(m, br), Matrix(m, m), Form(m, 2), a.basis};
    for (std::size_t j = 0; j < m; ++j) {
        Vector c = h_coords(a, s.phi * a.h[j]);
        for (std::size_t i = 0; i < m; ++i) out.j(i, j) = c[i];
    }
    Matrix hb = Matrix::from_columns(a.h, l.dim());
    out.sigma = Rational(-1) * pullback(ce_differential(l, Form::covector(s.eta)), hb);
    if (!is_abelian_complex_structure(out.h, out.j))
        throw InternalError("restriction of phi is not an abelian complex structure");
    if (m > 2 && !is_cocycle(out.h, out.sigma)) throw InternalError("sigma is not a cocycle");
    if (pullback(out.sigma, out.j) != out.sigma) throw InternalError("sigma is not J-invariant");
    return out;
}

SemidirectDecomposition decompose_semidirect(const LieAlgebra& l, const AlmostContact& s) {
    require_abelian(l, s);
    if (!ce_differential(l, Form::covector(s.eta)).is_zero())
        throw PreconditionError("deta-nonzero", "Ker eta is not a subalgebra");
    Adapted a = adapted_basis(s);
    std::size_t m = a.h.size();
    SemidirectDecomposition out{restrict_to(l, a.h), Matrix(m, m), Matrix(m, m), a.basis};
    for (std::size_t j = 0; j < m; ++j) {
        Vector c = h_coords(a, s.phi * a.h[j]);
        Vector d = h_coords(a, l.bracket(s.xi, a.h[j]));
        for (std::size_t i = 0; i < m; ++i) {
            out.j(i, j) = c[i];
            out.d(i, j) = d[i];
        }
    }
    if (out.d * out.j != out.j * out.d) throw InternalError("D does not commute with J");
    if (!is_derivation(out.h, out.d)) throw InternalError("D is not a derivation");
    return out;
}

}  // namespace contactlie
