// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "support.hpp"

#include "contactlie/connection.hpp"
#include "contactlie/errors.hpp"
#include "contactlie/lattice.hpp"

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace contactlie;
using namespace testing_support;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void check(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

std::string describe(const std::string& name, const Params& p) {
    std::string s = name;
    for (const auto& [k, v] : p) s += " " + k + "=" + v;
    return s;
}

Vector x_i(const Almost3Contact& t, std::size_t i) { return t.s[i].xi; }

// [phi, phi](X, Y) - eta([X, Y]) xi, straight from the definition.
bool normal_by_hand(const LieAlgebra& l, const AlmostContact& s) {
    std::size_t n = l.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vector x = unit_vector(n, a), y = unit_vector(n, b);
            Vector px = s.phi * x, py = s.phi * y, xy = l.bracket(x, y);
            Vector v = s.phi * (s.phi * xy) + l.bracket(px, py) - s.phi * l.bracket(px, y) - s.phi * l.bracket(x, py) -
                       dot(s.eta, xy) * s.xi;
            if (!is_zero(v)) return false;
        }
    return true;
}

Connection canonical_connection(const CatalogEntry& e) {
    return with_skew_torsion(levi_civita(e.algebra, e.metric), canonical_torsion(e.algebra, e.three_contact(), e.metric),
                             e.metric);
}

Form eta_form(const Almost3Contact& t, std::size_t i) { return Form::covector(t.s[i].eta); }

// ---------------------------------------------------------------------------

Outcome abelian_implies_normal() {
    Outcome out;
    std::size_t count = 0;
    auto run = [&](const std::string& what, const LieAlgebra& l, const AlmostContact& s) {
        if (!is_abelian_contact(l, s).ok) {
            out.fail(what + ": fixture is not abelian");
            return;
        }
        bool lib = normality_tensor(l, s).is_normal;
        bool hand = normal_by_hand(l, s);
        out.check(lib && hand, what + ": N_phi != 0");
        ++count;
    };
    std::mt19937 rng(101);
    for (const auto& [name, p] : contact_fixtures()) {
        CatalogEntry e = catalog(name, p);
        run(describe(name, p), e.algebra, e.contact());
        Matrix q = random_invertible(rng, e.algebra.dim());
        run(describe(name, p) + " (rebased)", e.algebra.change_basis(q), change_basis(e.contact(), q));
    }
    const Vector sphere_point{Rational(2, 7), Rational(3, 7), Rational(6, 7)};
    for (const auto& [name, p] : three_contact_fixtures()) {
        CatalogEntry e = catalog(name, p);
        for (std::size_t i = 0; i < 3; ++i) run(describe(name, p) + " phi_" + std::to_string(i + 1), e.algebra, e.three_contact().s[i]);
        run(describe(name, p) + " sphere", e.algebra, sphere_structure(e.three_contact(), sphere_point));
    }
    out.check(count >= 12, "fewer than 12 fixtures");
    if (out.ok) out.detail = std::to_string(count) + " abelian structures";
    return out;
}

Outcome dim3_classification() {
    Outcome out;
    std::set<std::string> labels;
    std::size_t checked = 0;
    const int vals[] = {-1, 0, 1, 2};
    for (int a : vals)
        for (int b : vals)
            for (int al : vals)
                for (int be : vals)
                    for (int ga : vals) {
                        Params p{{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"alpha", std::to_string(al)},
                                 {"beta", std::to_string(be)}, {"gamma", std::to_string(ga)}};
                        std::optional<CatalogEntry> entry;
                        try {
                            entry = catalog("dim3_family", p);
                        } catch (const PreconditionError&) {
                            continue;
                        }
                        const CatalogEntry& e = *entry;
                        auto got = classify_dim3(e.algebra, e.contact());
                        auto want = oracles::dim3_oracle(e.algebra);
                        ++checked;
                        labels.insert(got.label);
                        out.check(got.label == want.label, describe("dim3", p) + ": " + got.label + " vs oracle " + want.label);
                        if (want.lambda_squared)
                            out.check(got.lambda && *got.lambda * *got.lambda == *want.lambda_squared,
                                      describe("dim3", p) + ": lambda mismatch");
                    }
    out.check(labels.size() == 7, "only " + std::to_string(labels.size()) + " of 7 labels reached");
    if (out.ok) out.detail = std::to_string(checked) + " Jacobi-valid grid points, 7 labels";
    return out;
}

Outcome dim7_classification() {
    Outcome out;
    std::vector<std::tuple<std::string, Params, std::string>> reps{
        {"so3_semidirect", {{"delta", "1"}}, dim7_labels::SO3_SEMI_R4},
        {"so3_semidirect", {{"delta", "-3"}}, dim7_labels::SO3_SEMI_R4},
        {"aff_C_hypercomplex", {}, dim7_labels::R3_AFFC},
        {"aff_C_hypercomplex", {{"x", "2"}, {"y", "-1"}}, dim7_labels::R3_AFFC},
        {"real_heisenberg_times_R2", {}, dim7_labels::H2R_R2},
        {"complex_heisenberg_times_R", {}, dim7_labels::H1C_R},
        {"quaternionic_heisenberg", {{"lambda", "3"}}, dim7_labels::H1H},
        {"so3_product", {{"h", "R4"}}, dim7_labels::SO3_R4},
        {"so3_product", {{"h", "affC"}}, dim7_labels::SO3_AFFC},
        {"reeb_twisted", {{"delta", "0"}}, dim7_labels::N_R},
        {"hypercomplex_R4", {}, dim7_labels::R7},
    };
    std::mt19937 rng(103);
    for (const auto& [name, p, want] : reps) {
        CatalogEntry e = catalog(name, p);
        std::string got = classify_dim7(e.algebra, e.three_contact()).label;
        out.check(got == want, describe(name, p) + ": " + got + " vs " + want);
        Matrix q = random_invertible(rng, 7);
        std::string moved = classify_dim7(e.algebra.change_basis(q), change_basis(e.three_contact(), q)).label;
        out.check(moved == want, describe(name, p) + " rebased: " + moved);
    }
    // random J-invariant cocycles on R^4: the derived algebra has dimension rank A
    const std::string by_rank[] = {dim7_labels::R7, dim7_labels::H2R_R2, dim7_labels::H1C_R, dim7_labels::H1H};
    std::size_t random_count = 0;
    for (std::size_t r = 1; r <= 3; ++r)
        for (int k = 0; k < 10; ++k) {
            CatalogEntry e = r4_extension_from_matrix(random_rank_matrix(rng, r));
            Subspace all = Subspace::whole(7);
            std::size_t derived = bracket_span(e.algebra, all, all).dim();
            out.check(derived == r, "derived algebra of a rank " + std::to_string(r) + " extension has dim " + std::to_string(derived));
            Matrix q = random_invertible(rng, 7);
            auto res = classify_dim7(e.algebra.change_basis(q), change_basis(e.three_contact(), q));
            out.check(res.label == by_rank[r], "random rank " + std::to_string(r) + " cocycle gave " + res.label);
            ++random_count;
        }
    if (out.ok) out.detail = std::to_string(reps.size()) + " representatives, " + std::to_string(random_count) + " random cocycles";
    return out;
}

Outcome structural_lemmas() {
    Outcome out;
    std::size_t count = 0;
    auto run = [&](const std::string& what, const LieAlgebra& l, const Almost3Contact& t) {
        auto inv = structure_invariants(l, t);
        auto bad = lemma_identities(l, t, inv);
        out.check(bad.empty(), what + ": " + (bad.empty() ? "" : bad.front()));
        out.check(inv.psi_rank % 4 == 0, what + ": rank psi = " + std::to_string(inv.psi_rank));
        if (l.dim() == 7) out.check(inv.psi_rank == 0 || inv.psi_rank == 4, what + ": rank psi in dim 7");
        ++count;
    };
    std::mt19937 rng(104);
    for (const auto& [name, p] : three_contact_fixtures()) {
        CatalogEntry e = catalog(name, p);
        run(describe(name, p), e.algebra, e.three_contact());
        Matrix q = random_invertible(rng, e.algebra.dim());
        run(describe(name, p) + " rebased", e.algebra.change_basis(q), change_basis(e.three_contact(), q));
    }
    for (std::size_t r = 1; r <= 3; ++r) {
        CatalogEntry e = r4_extension_from_matrix(random_rank_matrix(rng, r));
        run("random extension", e.algebra, e.three_contact());
    }
    for (std::size_t active = 1; active <= 2; ++active) {
        Params p{{"active", std::to_string(active)}, {"passive", "1"}, {"delta", "2"}};
        CatalogEntry e = catalog("so3_partial", p);
        run(describe("so3_partial", p), e.algebra, e.three_contact());
    }
    if (out.ok) out.detail = std::to_string(count) + " structures";
    return out;
}

Outcome canonical_structures() {
    Outcome out;
    for (const auto& [name, p] : three_contact_fixtures()) {
        CatalogEntry e = catalog(name, p);
        auto beta = canonical_check(e.algebra, e.three_contact());
        auto rk = reeb_killing_tensors(e.algebra, e.three_contact(), e.metric);
        out.check(beta.has_value() == rk.canonical, describe(name, p) + ": canonical_check and A_ij tensors disagree");
        if (beta && rk.beta) out.check(*beta == *rk.beta, describe(name, p) + ": beta differs");
    }
    for (const auto& [name, p] : heisenberg_type_fixtures()) {
        CatalogEntry e = catalog(name, p);
        auto beta = canonical_check(e.algebra, e.three_contact());
        out.check(beta && beta->is_zero(), describe(name, p) + ": beta != 0");
    }
    for (std::size_t n = 1; n <= 2; ++n)
        for (int d : {1, 2, -1}) {
            CatalogEntry e = so3_semidirect(n, d);
            auto beta = canonical_check(e.algebra, e.three_contact());
            out.check(beta && *beta == Rational(2 * d), "so3 semidirect: beta != 2 delta");
        }
    if (out.ok) out.detail = "beta = 0 on the Heisenberg families, beta = 2 delta on so(3) ⋉ R^{4n}";
    return out;
}

Outcome canonical_torsion_formulas() {
    Outcome out;
    auto common = [&](const std::string& what, const CatalogEntry& e, const Form& expected, const Rational& beta) {
        const auto& t = e.three_contact();
        Form tor = canonical_torsion(e.algebra, t, e.metric);
        out.check(tor == expected, what + ": torsion differs from the closed form");
        Connection c = canonical_connection(e);
        out.check(is_canonical_connection(e.algebra, t, e.metric, c, beta), what + ": not canonical");
        // nabla_X xi_i = beta (eta_k(X) xi_j - eta_j(X) xi_k)
        for (auto [i, j, k] : kEvenPermutations) {
            auto dxi = covariant_derivative_vector(c, x_i(t, i));
            auto deta = covariant_derivative_covector(c, t.s[i].eta);
            for (std::size_t a = 0; a < e.algebra.dim(); ++a) {
                Vector want = beta * (t.s[k].eta[a] * t.s[j].xi - t.s[j].eta[a] * t.s[k].xi);
                out.check(dxi[a] == want, what + ": nabla xi formula");
                Vector want_eta = beta * (t.s[k].eta[a] * t.s[j].eta - t.s[j].eta[a] * t.s[k].eta);
                out.check(deta[a] == want_eta, what + ": nabla eta formula");
            }
        }
    };
    for (const auto& [name, p] : heisenberg_type_fixtures()) {
        CatalogEntry e = catalog(name, p);
        const auto& t = e.three_contact();
        Form expected(e.algebra.dim(), 3);
        for (std::size_t i = 0; i < 3; ++i) expected += wedge(eta_form(t, i), ce_differential(e.algebra, eta_form(t, i)));
        common(describe(name, p), e, expected, 0);
        out.check(bismut_like(e.algebra, e.metric) == canonical_connection(e), describe(name, p) + ": differs from g(∇XY,Z) = -g(X,[Y,Z])");
    }
    std::mt19937 rng(106);
    for (std::size_t r = 1; r <= 3; ++r) {
        CatalogEntry e = r4_extension_from_matrix(random_rank_matrix(rng, r));
        out.check(bismut_like(e.algebra, e.metric) == canonical_connection(e), "random extension: differs from bismut-like");
    }
    for (std::size_t n = 1; n <= 2; ++n)
        for (int d : {1, 2, -1}) {
            CatalogEntry e = so3_semidirect(n, d);
            const auto& t = e.three_contact();
            Form expected = Rational(2 * d) * wedge(eta_form(t, 0), wedge(eta_form(t, 1), eta_form(t, 2)));
            common("so3 n=" + std::to_string(n) + " delta=" + std::to_string(d), e, expected, 2 * d);
        }
    if (out.ok) out.detail = "T = Σ η_i∧dη_i and T = 2δ η123, nabla xi and nabla eta formulas hold";
    return out;
}

Outcome parallel_torsion() {
    Outcome out;
    for (const auto& [name, p] : heisenberg_type_fixtures()) {
        CatalogEntry e = catalog(name, p);
        bool want = name == "real_heisenberg_times_R2";
        bool got = is_parallel_torsion(e.algebra, canonical_connection(e), e.metric);
        out.check(got == want, describe(name, p) + ": parallel torsion " + (got ? "true" : "false"));
    }
    // nabla_{xi_2} d eta_1 = -2 lambda^2 Σ (θ_r ∧ θ_{3n+r} - θ_{n+r} ∧ θ_{2n+r}) on the quaternionic family
    for (std::size_t n = 1; n <= 2; ++n)
        for (int lam : {1, 2}) {
            Params p{{"n", std::to_string(n)}, {"lambda", std::to_string(lam)}};
            CatalogEntry e = catalog("quaternionic_heisenberg", p);
            const auto& t = e.three_contact();
            std::size_t dim = e.algebra.dim();
            auto theta = [&](std::size_t r) { return Form::covector(unit_vector(dim, 3 + r)); };
            Form want(dim, 2);
            for (std::size_t r = 0; r < n; ++r)
                want += wedge(theta(r), theta(3 * n + r)) - wedge(theta(n + r), theta(2 * n + r));
            want = Rational(-2 * lam * lam) * want;
            auto dd = covariant_derivative(canonical_connection(e), ce_differential(e.algebra, eta_form(t, 0)));
            Form along_xi2(dim, 2);
            for (std::size_t a = 0; a < dim; ++a)
                if (!t.s[1].xi[a].is_zero()) along_xi2 += t.s[1].xi[a] * dd[a];
            out.check(along_xi2 == want, describe("quaternionic_heisenberg", p) + ": nabla_{xi_2} d eta_1");
        }
    for (std::size_t n = 1; n <= 2; ++n)
        for (int d : {1, 2, -1}) {
            CatalogEntry e = so3_semidirect(n, d);
            out.check(is_parallel_torsion(e.algebra, canonical_connection(e), e.metric), "so3 semidirect: torsion not parallel");
        }
    if (out.ok) out.detail = "false on the quaternionic and complex families, true on the real family and so(3) ⋉ R^{4n}";
    return out;
}

Outcome ricci_and_pair_symmetry() {
    Outcome out;
    std::vector<std::pair<std::string, Params>> all = heisenberg_type_fixtures();
    for (const auto& [name, p] : three_contact_fixtures())
        if (name == "so3_semidirect" || name == "aff_C_hypercomplex" || name == "so3_product") all.push_back({name, p});
    std::size_t parallel = 0;
    for (const auto& [name, p] : all) {
        CatalogEntry e = catalog(name, p);
        Connection c = canonical_connection(e);
        auto r = curvature(e.algebra, c);
        Matrix ric = ricci(r, e.metric);
        bool heis = name.find("heisenberg") != std::string::npos;
        if (heis) out.check(ric == ric.transpose(), describe(name, p) + ": Ricci not symmetric");
        if (is_parallel_torsion(e.algebra, c, e.metric)) {
            ++parallel;
            out.check(pair_symmetry(r, e.metric), describe(name, p) + ": parallel torsion without pair symmetry");
            out.check(ric == ric.transpose(), describe(name, p) + ": parallel torsion with non-symmetric Ricci");
        }
    }
    if (out.ok) out.detail = std::to_string(parallel) + " parallel-torsion cases with pair symmetry";
    return out;
}

Outcome homology() {
    Outcome out;
    auto factors = [](const AbelianizationResult& r) {
        std::vector<long> f;
        for (const auto& d : r.invariant_factors) f.push_back(d.get_si());
        return f;
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        std::string sn = " n=" + std::to_string(n);
        auto one = gamma_abelianization(1, n);
        out.check(one.invariant_factors.empty() && one.free_rank == 4 * n, "m=1" + sn + ": " + one.str());
        out.check(factors(gamma_abelianization(2, n)) == std::vector<long>(4 * n + 1, 2), "m=2" + sn);
        out.check(factors(gamma_abelianization(3, n)) == std::vector<long>(2 * n + 1, 3), "m=3" + sn);
        std::vector<long> four(2 * n, 2);
        four.push_back(4);
        out.check(factors(gamma_abelianization(4, n)) == four, "m=4" + sn);
        out.check(factors(gamma_abelianization(6, n)) == std::vector<long>{6}, "m=6" + sn);
        auto q8 = semidirect_abelianization(q8_presentation(n));
        out.check(factors(q8) == std::vector<long>(n + 2, 2) && q8.free_rank == 0, "Q8" + sn + ": " + q8.str());
        // torsion order m · Φ_m(1)^(4n / deg Φ_m), computed from cyclotomic polynomials
        for (unsigned long m : {2ul, 3ul, 4ul, 6ul}) {
            auto phi = oracles::cyclotomic(m);
            long at_one = 0;
            for (long c : phi) at_one += c;
            mpz_class order = m;
            for (std::size_t b = 0; b < 4 * n / (phi.size() - 1); ++b) order *= at_one;
            mpz_class prod = 1;
            for (const auto& d : gamma_abelianization(m, n).invariant_factors) prod *= d;
            out.check(prod == order && gamma_abelianization(m, n).free_rank == 0, "torsion order m=" + std::to_string(m) + sn);
        }
    }
    for (unsigned long m = 1; m <= 100; ++m) {
        auto phi = oracles::cyclotomic(m);
        std::size_t deg = phi.size() - 1;
        auto e = rotation_integer_form(m);
        out.check(e.has_value() == (deg <= 2), "rotation form existence for m=" + std::to_string(m));
        if (!e) continue;
        IntegerMatrix id = IntegerMatrix::identity(e->rows());
        out.check(power(*e, m) == id, "E^m != I for m=" + std::to_string(m));
        for (unsigned long d = 1; d < m; ++d) out.check(power(*e, d) != id, "order below m for m=" + std::to_string(m));
    }
    if (out.ok) out.detail = "Z^{4n}, Z_2^{4n+1}, Z_3^{2n+1}, Z_4+Z_2^{2n}, Z_6, Z_2^{n+2} for n = 1..3; m <= 100 forms";
    return out;
}

Outcome algebraic_consistency() {
    Outcome out;
    std::mt19937 rng(110);
    for (int t = 0; t < 200; ++t) {
        LieAlgebra l = random_valid_algebra(rng, 7);
        out.check(!jacobi_check(l).has_value(), "random algebra fails Jacobi");
        for (std::size_t k = 1; k + 1 < l.dim(); ++k) {
            Form w(l.dim(), k);
            for (const auto& idx : increasing_tuples(l.dim(), k)) w.set(idx, small_int(rng, -2, 2));
            out.check(ce_differential(l, ce_differential(l, w)).is_zero(), "d^2 != 0 on a random algebra");
        }
    }
    for (unsigned long m : {2ul, 3ul, 4ul, 6ul})
        for (std::size_t n = 1; n <= 3; ++n)
            out.check(gamma_abelianization(m, n) == semidirect_abelianization(gamma_presentation(m, n)),
                      "closed form and generic abelianization differ");

    std::vector<std::pair<std::string, Params>> central{{"heisenberg_real", {{"n", "2"}}},
                                                         {"quasi_sasaki_gk", {{"n", "3"}, {"k", "2"}}},
                                                         {"sasaki5_center", {{"variant", "affRxaffR"}, {"r", "2"}, {"s", "1"}}},
                                                         {"aff_C_extension", {}},
                                                         {"aff_R", {}}};
    for (const auto& [name, p] : central) {
        CatalogEntry e = catalog(name, p);
        auto dec = decompose_central_extension(e.algebra, e.contact());
        CatalogEntry back = central_extension(dec.h, dec.sigma, {dec.j});
        out.check(back.algebra == e.algebra.change_basis(dec.basis), describe(name, p) + ": central round trip");
    }
    std::vector<std::pair<std::string, Params>> semi{
        {"alpha_kenmotsu", {{"n", "2"}, {"alpha", "-1/2"}}}, {"semidirect_h1R_x_R", {}}, {"aff_R", {{"r", "3"}}}};
    for (const auto& [name, p] : semi) {
        CatalogEntry e = catalog(name, p);
        auto dec = decompose_semidirect(e.algebra, e.contact());
        CatalogEntry back = semidirect_by_derivation(dec.h, dec.j, dec.d);
        out.check(back.algebra == e.algebra.change_basis(dec.basis), describe(name, p) + ": semidirect round trip");
    }
    for (const auto& [name, p] : heisenberg_type_fixtures()) {
        CatalogEntry e = catalog(name, p);
        auto rep = case_analysis(e.algebra, e.three_contact());
        if (!(rep.h && rep.j && rep.theta)) {
            out.fail(describe(name, p) + ": no decomposition");
            continue;
        }
        CatalogEntry back = central_extension(*rep.h, *rep.theta, {(*rep.j)[0], (*rep.j)[1], (*rep.j)[2]});
        std::vector<Vector> cols;
        for (const auto& s : e.three_contact().s) cols.push_back(s.xi);
        cols.insert(cols.end(), rep.h_basis.begin(), rep.h_basis.end());
        out.check(back.algebra == e.algebra.change_basis(Matrix::from_columns(cols, e.algebra.dim())),
                  describe(name, p) + ": 3-contact round trip");
    }
    if (out.ok) out.detail = "200 random algebras, abelianization paths agree, decompositions round-trip";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"abelian almost contact structures are normal", abelian_implies_normal},
        {"dimension 3 classification", dim3_classification},
        {"dimension 7 classification", dim7_classification},
        {"structure lemmas and rank of psi", structural_lemmas},
        {"canonical abelian almost 3-contact structures", canonical_structures},
        {"canonical connection and torsion", canonical_torsion_formulas},
        {"parallel torsion", parallel_torsion},
        {"Ricci symmetry and pair symmetry", ricci_and_pair_symmetry},
        {"first integral homology of the lattices", homology},
        {"algebraic consistency", algebraic_consistency},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.ok;
        std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
