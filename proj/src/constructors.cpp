#include "contactlie/constructors.hpp"

#include "contactlie/connection.hpp"
#include "contactlie/errors.hpp"

#include <algorithm>

namespace contactlie {

namespace {

// Block diag(0_m, b) of size m + b.rows().
Matrix pad(std::size_t m, const Matrix& b) {
    Matrix out(m + b.rows(), m + b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(m + i, m + j) = b(i, j);
    return out;
}

// Inner product on h making every J orthogonal: the average of J^T J over the
// group generated by the J's. For a single J or a quaternionic triple this is exact.
Matrix averaged_metric(const std::vector<Endomorphism>& js, std::size_t d) {
    Matrix g = Matrix::identity(d);
    for (const auto& j : js) g += j.transpose() * j;
    return Rational(1, static_cast<long>(js.size() + 1)) * g;
}

bool quaternion_relations(const std::array<Endomorphism, 3>& j) {
    std::size_t d = j[0].rows();
    Matrix minus_id = -Matrix::identity(d);
    for (const auto& ji : j)
        if (ji * ji != minus_id) return false;
    return j[0] * j[1] == j[2] && j[1] * j[0] == -j[2];
}

bool invariant_under(const Form& theta, const Endomorphism& j) {
    std::size_t d = theta.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            if (theta.evaluate({j.column(a), j.column(b)}) != theta.at({a, b})) return false;
    return true;
}

std::string yes(bool b) { return b ? "true" : "false"; }


// Polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

Poly trimmed(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly remainder(Poly a, const Poly& b) {
    a = trimmed(std::move(a));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trimmed(std::move(a));
    }
    return a;
}

Poly quotient(Poly a, const Poly& b) {
    a = trimmed(std::move(a));
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = trimmed(std::move(a));
    }
    return q;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    return trimmed(d);
}

Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Faddeev-LeVerrier.
Poly characteristic_polynomial(const Matrix& a) {
    std::size_t n = a.rows();
    Poly c(n + 1);
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * Matrix::identity(n);
        Matrix am = a * m;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

// Number of distinct real roots of p, by Sturm's theorem.
std::size_t real_root_count(const Poly& p) {
    std::vector<Poly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        Poly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(r);
    }
    auto changes = [&](bool at_plus) {
        std::size_t count = 0;
        int last = 0;
        for (const auto& q : seq) {
            if (q.empty()) continue;
            int s = q.back().sign();
            if (!at_plus && (q.size() - 1) % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

// Diagonalizable over R: squarefree part of the characteristic polynomial kills A
// and has only real roots.
bool real_diagonalizable(const Matrix& a) {
    if (a.rows() == 0) return true;
    Poly p = characteristic_polynomial(a);
    Poly q = quotient(p, gcd(p, derivative(p)));
    Matrix value(a.rows(), a.cols());
    for (std::size_t i = q.size(); i-- > 0;) value = a * value + q[i] * Matrix::identity(a.rows());
    return value.is_zero() && real_root_count(q) == q.size() - 1;
}

}  // namespace

Almost3Contact vertical_plus(const std::array<Endomorphism, 3>& j) {
    std::size_t d = j[0].rows();
    std::size_t n = d + 3;
    Almost3Contact t;
    for (auto [i, a, b] : kEvenPermutations) {
        AlmostContact& s = t.s[i];
        s.phi = pad(3, j[i]);
        s.phi(b, a) = 1;   // phi_i xi_j = xi_k
        s.phi(a, b) = -1;  // phi_i xi_k = -xi_j
        s.xi = unit_vector(n, i);
        s.eta = unit_vector(n, i);
    }
    return t;
}

Almost3Contact quaternionic_structures(std::size_t n) {
    std::array<Endomorphism, 3> j;
    for (std::size_t i = 0; i < 3; ++i) j[i] = Matrix(4 * n, 4 * n);
    for (auto [i, a, b] : kEvenPermutations) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t ti = (i + 1) * n + r, tj = (a + 1) * n + r, tk = (b + 1) * n + r;
            j[i](ti, r) = 1;    // tau_r -> tau_{in+r}
            j[i](r, ti) = -1;   // tau_{in+r} -> -tau_r
            j[i](tk, tj) = 1;   // tau_{jn+r} -> tau_{kn+r}
            j[i](tj, tk) = -1;  // tau_{kn+r} -> -tau_{jn+r}
        }
    }
    return vertical_plus(j);
}

std::array<Endomorphism, 3> hypercomplex_r4() {
    Almost3Contact q = quaternionic_structures(1);
    std::array<Endomorphism, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = Matrix(4, 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) out[i](a, b) = q.s[i].phi(3 + a, 3 + b);
    }
    return out;
}

std::array<Endomorphism, 3> hypercomplex_affc() {
    std::array<Endomorphism, 3> j{Matrix(4, 4), Matrix(4, 4), Matrix(4, 4)};
    // J1 e1 = -e2, J1 e3 = e4
    j[0](1, 0) = -1; j[0](0, 1) = 1; j[0](3, 2) = 1; j[0](2, 3) = -1;
    // J2 e1 = e3, J2 e2 = e4
    j[1](2, 0) = 1; j[1](3, 1) = 1; j[1](0, 2) = -1; j[1](1, 3) = -1;
    // J3 e1 = e4, J3 e2 = -e3
    j[2](3, 0) = 1; j[2](2, 1) = -1; j[2](1, 2) = 1; j[2](0, 3) = -1;
    return j;
}

LieAlgebra aff_c() {
    auto e = [](std::size_t k, int c) { Vector v = zero_vector(4); v[k] = c; return v; };
    return LieAlgebra(4, {{0, 2, e(2, 1)}, {0, 3, e(3, 1)}, {1, 2, e(3, 1)}, {1, 3, e(2, -1)}});
}

HypercomplexCheck hypercomplex_check(const LieAlgebra& h, const std::array<Endomorphism, 3>& j) {
    if (h.dim() % 4 != 0) throw PreconditionError("dim-not-multiple-of-4", "dim h = " + std::to_string(h.dim()));
    HypercomplexCheck out;
    bool quaternionic = quaternion_relations(j);
    out.integrable = true;
    std::size_t d = h.dim();
    for (const auto& ji : j) {
        for (std::size_t a = 0; a < d && out.integrable; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                Vector x = unit_vector(d, a), y = unit_vector(d, b);
                Vector jx = ji * x, jy = ji * y;
                Vector nij = h.bracket(jx, jy) - ji * h.bracket(jx, y) - ji * h.bracket(x, jy) - h.bracket(x, y);
                if (!is_zero(nij)) {
                    out.integrable = false;
                    break;
                }
            }
        }
    }
    out.is_hypercomplex = quaternionic && out.integrable;
    out.is_abelian_hypercomplex = quaternionic && std::all_of(j.begin(), j.end(), [&](const Endomorphism& ji) {
        return is_abelian_complex_structure(h, ji);
    });
    if (out.is_abelian_hypercomplex && !out.integrable)
        throw InternalError("abelian hypercomplex structure with nonzero Nijenhuis tensor");
    return out;
}

FourDimType recognize_4d(const LieAlgebra& h, const std::array<Endomorphism, 3>& j) {
    if (h.dim() != 4) throw PreconditionError("dim-not-4", "dim h = " + std::to_string(h.dim()));
    if (!hypercomplex_check(h, j).is_abelian_hypercomplex) return FourDimType::Neither;
    if (h.is_abelian()) return FourDimType::R4;
    DerivedSeries ds = derived_series(h);
    if (ds.terms.size() > 1 && ds.terms[1].dim() == 2 && ds.is_2step_solvable && center(h).dim() == 0)
        return FourDimType::AffC;
    return FourDimType::Neither;
}

CatalogEntry central_extension(const LieAlgebra& h, const Form& theta, const std::vector<Endomorphism>& j) {
    std::size_t m = theta.target();
    std::size_t d = h.dim();
    if ((m != 1 && m != 3) || j.size() != m)
        throw PreconditionError("structure-count", "need one J for m = 1 or three for m = 3");
    if (theta.dim() != d || theta.degree() != 2)
        throw PreconditionError("dimension-mismatch", "theta must be a 2-form on h");
    if (m == 1) {
        if (!is_abelian_complex_structure(h, j[0]))
            throw PreconditionError("J-not-abelian-complex", "J^2 = -I and [Jx, Jy] = [x, y] required");
    } else {
        std::array<Endomorphism, 3> arr{j[0], j[1], j[2]};
        if (!quaternion_relations(arr)) throw PreconditionError("J-not-quaternionic", "J1 J2 = -J2 J1 = J3 fails");
        for (const auto& ji : j)
            if (!is_abelian_complex_structure(h, ji))
                throw PreconditionError("J-not-abelian-complex", "[J_i x, J_i y] = [x, y] fails");
    }
    if (d > 2 && !is_cocycle(h, theta)) throw PreconditionError("theta-not-cocycle", "d theta != 0");
    for (std::size_t i = 0; i < m; ++i)
        if (!invariant_under(theta, j[i]))
            throw PreconditionError("theta-not-J-invariant", "theta(J_" + std::to_string(i + 1) + " x, J y) != theta(x, y)");

    std::size_t n = m + d;
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            Vector v = zero_vector(n);
            Vector th = theta.at({a, b});
            Vector hb = h.bracket_basis(a, b);
            for (std::size_t r = 0; r < m; ++r) v[r] = th[r];
            for (std::size_t r = 0; r < d; ++r) v[m + r] = hb[r];
            if (!is_zero(v)) br.push_back({m + a, m + b, v});
        }
    }
    LieAlgebra g(n, br);
    Matrix metric = Matrix::identity(n);
    Matrix gh = averaged_metric(j, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) metric(m + a, m + b) = gh(a, b);

    if (m == 1) {
        AlmostContact s{pad(1, j[0]), unit_vector(n, 0), unit_vector(n, 0)};
        return CatalogEntry{"central_extension", {}, g, s, Metric(metric), {}};
    }
    return CatalogEntry{"central_extension", {}, g, vertical_plus({j[0], j[1], j[2]}), Metric(metric), {}};
}

CatalogEntry semidirect_by_derivation(const LieAlgebra& h, const Endomorphism& j, const Endomorphism& d) {
    std::size_t k = h.dim();
    if (!is_abelian_complex_structure(h, j))
        throw PreconditionError("J-not-abelian-complex", "J^2 = -I and [Jx, Jy] = [x, y] required");
    if (!is_derivation(h, d)) throw PreconditionError("D-not-derivation", "D[x, y] != [Dx, y] + [x, Dy]");
    if (d * j != j * d) throw PreconditionError("D-J-not-commuting", "DJ != JD");
    std::size_t n = k + 1;
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < k; ++a) {
        Vector v = zero_vector(n);
        for (std::size_t r = 0; r < k; ++r) v[1 + r] = d(r, a);
        if (!is_zero(v)) br.push_back({0, 1 + a, v});
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            Vector hb = h.bracket_basis(a, b);
            if (is_zero(hb)) continue;
            Vector v = zero_vector(n);
            for (std::size_t r = 0; r < k; ++r) v[1 + r] = hb[r];
            br.push_back({1 + a, 1 + b, v});
        }
    }
    LieAlgebra g(n, br);
    Matrix metric = pad(1, averaged_metric({j}, k));
    metric(0, 0) = 1;
    AlmostContact s{pad(1, j), unit_vector(n, 0), unit_vector(n, 0)};
    return CatalogEntry{"semidirect_by_derivation", {}, g, s, Metric(metric), {}};
}

CatalogEntry so3_semidirect(std::size_t n, const Rational& delta) {
    if (delta.is_zero()) throw PreconditionError("delta-zero", "delta must be nonzero");
    if (n == 0) throw PreconditionError("parameter-out-of-range", "n must be positive");
    Almost3Contact t = quaternionic_structures(n);
    std::size_t dim = 4 * n + 3;
    std::vector<Bracket> br;
    for (auto [i, j, k] : kEvenPermutations) {
        Vector v = Rational(2) * delta * unit_vector(dim, k);
        if (i < j) br.push_back({i, j, v});
        else br.push_back({j, i, -v});
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t a = 3; a < dim; ++a) {
            Vector v = delta * t.s[i].phi.column(a);
            br.push_back({i, a, v});
        }
    }
    CatalogEntry e{"so3_semidirect", {}, LieAlgebra(dim, br), t, Metric::identity(dim), {}};
    e.expected = {{"case", "PsiInvertible"},
                  {"delta", delta.str()},
                  {"psi_rank", std::to_string(4 * n)},
                  {"Z_zero", "true"},
                  {"beta", (Rational(2) * delta).str()},
                  {"parallel_torsion", "true"}};
    if (n == 1) e.expected["dim7_label"] = dim7_labels::SO3_SEMI_R4;
    return e;
}

ExactExtension exact_extension_isomorphism(const LieAlgebra& h, const std::vector<Vector>& f,
                                           const std::vector<Endomorphism>& j) {
    std::size_t m = f.size();
    std::size_t d = h.dim();
    if (d < 2) throw PreconditionError("dimension-mismatch", "dim h must be at least 2");
    std::vector<Form> comps;
    for (const auto& fi : f) comps.push_back(ce_differential(h, Form::covector(fi)));
    Form theta = Form::stack(comps);
    CatalogEntry ext = central_extension(h, theta, j);
    CatalogEntry prod = central_extension(h, Form(d, 2, m), j);

    std::size_t n = m + d;
    Matrix t = Matrix::identity(n);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t r = 0; r < m; ++r) t(r, m + a) = f[r][a];

    ExactExtension out{ext.algebra, prod.algebra, t, false};
    bool ok = inverse(t).has_value();
    for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            Vector lhs = t * ext.algebra.bracket_basis(a, b);
            Vector rhs = prod.algebra.bracket(t.column(a), t.column(b));
            if (lhs != rhs) {
                ok = false;
                break;
            }
        }
    }
    out.is_isomorphism = ok;
    return out;
}

bool matches_affr_power_fingerprint(const LieAlgebra& h) {
    DerivedSeries ds = derived_series(h);
    Subspace hp = ds.terms.size() > 1 ? ds.terms[1] : Subspace(h.dim());
    Subspace z = center(h);
    std::size_t k = hp.dim();
    if (bracket_span(h, hp, hp).dim() != 0) return false;
    if ((hp + z).dim() != k + z.dim()) return false;
    if (z.dim() % 2 != 0 || 2 * k + z.dim() != h.dim()) return false;
    // aff(R) factors act on h' with real weights; this separates aff(R)^2 from aff(C)
    auto hb = hp.basis();
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix a(k, k);
        for (std::size_t c = 0; c < k; ++c) {
            Vector v = *hp.coordinates(h.bracket(unit_vector(h.dim(), i), hb[c]));
            for (std::size_t r = 0; r < k; ++r) a(r, c) = v[r];
        }
        if (!real_diagonalizable(a)) return false;
    }
    return true;
}

std::string evaluate_invariant(const CatalogEntry& e, const std::string& key) {
    const LieAlgebra& l = e.algebra;
    if (key == "two_step_solvable") return yes(derived_series(l).is_2step_solvable);
    if (key == "center_dim") return std::to_string(center(l).dim());
    if (!e.is_3contact()) {
        const AlmostContact& s = e.contact();
        if (key == "abelian") return yes(is_abelian_contact(l, s).ok);
        if (key == "normal") return yes(normality_tensor(l, s).is_normal);
        if (key == "xi_central") return yes(l.ad(s.xi).is_zero());
        if (key == "metric_class") {
            std::string out;
            for (const auto& lab : metric_class(l, s, e.metric).labels) out += (out.empty() ? "" : ",") + lab;
            return out;
        }
        if (key == "dim3_label") return classify_dim3(l, s).label;
        if (key == "affr_fingerprint") {
            if (l.ad(s.xi).is_zero()) return yes(matches_affr_power_fingerprint(decompose_central_extension(l, s).h));
            return yes(matches_affr_power_fingerprint(decompose_semidirect(l, s).h));
        }
        throw PreconditionError("unknown-invariant", key);
    }
    const Almost3Contact& t = e.three_contact();
    if (key == "abelian") return yes(is_abelian_3contact(l, t));
    if (key == "normal") {
        for (const auto& s : t.s)
            if (!normality_tensor(l, s).is_normal) return "false";
        return "true";
    }
    if (key == "dim7_label") return classify_dim7(l, t).label;
    if (key == "case") return case_analysis(l, t).tag();
    if (key == "delta" || key == "psi_rank" || key == "Z_zero") {
        StructureInvariants inv = structure_invariants(l, t);
        if (key == "delta") return inv.delta.str();
        if (key == "psi_rank") return std::to_string(inv.psi_rank);
        return yes(is_zero(inv.z));
    }
    if (key == "beta") {
        auto b = canonical_check(l, t);
        return b ? b->str() : "none";
    }
    if (key == "parallel_torsion" || key == "ricci_symmetric") {
        Connection nabla = with_skew_torsion(levi_civita(l, e.metric), canonical_torsion(l, t, e.metric), e.metric);
        if (key == "parallel_torsion") return yes(is_parallel_torsion(l, nabla, e.metric));
        return yes(is_symmetric(ricci(curvature(l, nabla), e.metric)));
    }
    throw PreconditionError("unknown-invariant", key);
}

std::vector<ExpectationMismatch> check_expected(const CatalogEntry& e) {
    std::vector<ExpectationMismatch> out;
    for (const auto& [key, want] : e.expected) {
        std::string got;
        try {
            got = evaluate_invariant(e, key);
        } catch (const std::exception& ex) {
            got = std::string("error: ") + ex.what();
        }
        if (got != want) out.push_back({key, want, got});
    }
    return out;
}

}  // namespace contactlie
