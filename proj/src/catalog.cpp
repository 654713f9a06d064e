#include "contactlie/constructors.hpp"
#include "contactlie/errors.hpp"

#include <functional>
#include <set>

namespace contactlie {

namespace {

using Params = std::map<std::string, std::string>;

class ParamReader {
public:
    ParamReader(const std::string& entry, const Params& p) : entry_(entry), p_(p) {}

    Rational rational(const std::string& key, const Rational& fallback) {
        used_.insert(key);
        auto it = p_.find(key);
        if (it == p_.end()) return fallback;
        try {
            return Rational::parse(it->second);
        } catch (const std::invalid_argument&) {
            throw PreconditionError("parameter-out-of-range", entry_ + ": " + key + " is not a rational");
        }
    }

    std::size_t count(const std::string& key, std::size_t fallback, std::size_t lo, std::size_t hi) {
        Rational r = rational(key, Rational(static_cast<long>(fallback)));
        if (!r.is_integer() || r < Rational(static_cast<long>(lo)) || r > Rational(static_cast<long>(hi)))
            throw PreconditionError("parameter-out-of-range",
                                    entry_ + ": " + key + " must be an integer in [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
        return static_cast<std::size_t>(r.numerator().get_ui());
    }

    std::string word(const std::string& key, const std::string& fallback) {
        used_.insert(key);
        auto it = p_.find(key);
        return it == p_.end() ? fallback : it->second;
    }

    void nonzero(const std::string& key, const Rational& v) const {
        if (v.is_zero()) throw PreconditionError("parameter-out-of-range", entry_ + ": " + key + " must be nonzero");
    }

    // Parameters as they were effectively used, for the entry record.
    Params finish(const Params& resolved) const {
        for (const auto& [k, v] : p_)
            if (!used_.count(k)) throw PreconditionError("unknown-parameter", entry_ + ": " + k);
        return resolved;
    }

private:
    std::string entry_;
    const Params& p_;
    std::set<std::string> used_;
};

Vector basis_vec(std::size_t n, std::size_t k, const Rational& c) {
    Vector v = zero_vector(n);
    v[k] = c;
    return v;
}

// Brackets from the differentials of the dual basis: each (k, i, j, c) adds c e^{ij}
// to d e^k, i.e. -c e_k to [e_i, e_j].
LieAlgebra from_differentials(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& terms) {
    std::vector<Rational> c(n * n * n);
    for (const auto& [k, i, j, coef] : terms) {
        c[(i * n + j) * n + k] -= coef;
        c[(j * n + i) * n + k] += coef;
    }
    return LieAlgebra::from_tensor(n, std::move(c));
}

// J X_i = Y_i on R^{2n} with basis (X_1..X_n, Y_1..Y_n).
Endomorphism standard_j(std::size_t n) {
    Matrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(n + i, i) = 1;
        j(i, n + i) = -1;
    }
    return j;
}

std::array<Endomorphism, 3> phi_q(std::size_t n) {
    Almost3Contact q = quaternionic_structures(n);
    std::array<Endomorphism, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = Matrix(4 * n, 4 * n);
        for (std::size_t a = 0; a < 4 * n; ++a)
            for (std::size_t b = 0; b < 4 * n; ++b) out[i](a, b) = q.s[i].phi(3 + a, 3 + b);
    }
    return out;
}

std::vector<Endomorphism> as_vector(const std::array<Endomorphism, 3>& j) { return {j[0], j[1], j[2]}; }

CatalogEntry finish(CatalogEntry e, std::string name, Params params, std::map<std::string, std::string> expected) {
    e.name = std::move(name);
    e.params = std::move(params);
    for (auto& [k, v] : expected) e.expected[k] = v;
    return e;
}

const std::string kSasakian = "quasi-Sasakian,α-Sasakian(1),Sasakian";

CatalogEntry heisenberg_real(const Params& p) {
    ParamReader r("heisenberg_real", p);
    std::size_t n = r.count("n", 1, 1, 16);
    Form sigma(2 * n, 2);
    for (std::size_t i = 0; i < n; ++i) sigma.set({i, n + i}, Rational(2));
    CatalogEntry e = central_extension(LieAlgebra(2 * n), sigma, {standard_j(n)});
    std::map<std::string, std::string> ex{{"abelian", "true"},         {"normal", "true"},
                                          {"xi_central", "true"},      {"metric_class", kSasakian},
                                          {"affr_fingerprint", "true"}};
    if (n == 1) ex["dim3_label"] = dim3_labels::H1R;
    return finish(e, "heisenberg_real", r.finish({{"n", std::to_string(n)}}), ex);
}

CatalogEntry aff_r(const Params& p) {
    ParamReader rd("aff_R", p);
    Rational r = rd.rational("r", 1);
    rd.nonzero("r", r);
    LieAlgebra h(2, {{0, 1, basis_vec(2, 1, r)}});
    CatalogEntry e = semidirect_by_derivation(h, standard_j(1), Matrix(2, 2));
    return finish(e, "aff_R", rd.finish({{"r", r.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"xi_central", "true"},
                   {"metric_class", "quasi-Sasakian,coKähler"},
                   {"dim3_label", dim3_labels::AFFR_R},
                   {"affr_fingerprint", "true"}});
}

CatalogEntry aff_c_extension(const Params& p) {
    ParamReader r("aff_C_extension", p);
    Form sigma = Form::monomial(4, {0, 1});
    CatalogEntry e = central_extension(aff_c(), sigma, {hypercomplex_affc()[0]});
    return finish(e, "aff_C_extension", r.finish({}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"xi_central", "true"},
                   {"metric_class", "none"},
                   {"center_dim", "1"}});
}

CatalogEntry aff_c_hypercomplex(const Params& p) {
    ParamReader r("aff_C_hypercomplex", p);
    Rational x = r.rational("x", 0), y = r.rational("y", 0);
    // The J-invariant cocycles of aff(C) are x(e^13 - e^24) + y(e^14 + e^23), all exact.
    auto sigma = [](const Rational& a, const Rational& b) {
        Form s(4, 2);
        s.set({0, 2}, a);
        s.set({1, 3}, -a);
        s.set({0, 3}, b);
        s.set({1, 2}, b);
        return s;
    };
    Form theta = Form::stack({sigma(x, y), sigma(y, x), sigma(x + y, x - y)});
    CatalogEntry e = central_extension(aff_c(), theta, as_vector(hypercomplex_affc()));
    return finish(e, "aff_C_hypercomplex", r.finish({{"x", x.str()}, {"y", y.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"case", "PsiZero_ZZero_DeltaZero"},
                   {"delta", "0"},
                   {"psi_rank", "0"},
                   {"Z_zero", "true"},
                   {"beta", "0"},
                   {"dim7_label", dim7_labels::R3_AFFC}});
}

// ex1 / ex2 / ex3: `terms` selects how many of xi_1, xi_2, xi_3 receive a cocycle component.
CatalogEntry heisenberg_family(const std::string& name, std::size_t terms, const Params& p) {
    ParamReader rd(name, p);
    std::size_t n = rd.count("n", 1, 1, 8);
    Rational lambda = rd.rational("lambda", 1);
    rd.nonzero("lambda", lambda);
    std::vector<Form> comps(3, Form(4 * n, 2));
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t t0 = r, t1 = n + r, t2 = 2 * n + r, t3 = 3 * n + r;
        comps[0].set({t0, t2}, lambda);
        comps[0].set({t1, t3}, lambda);
        if (terms >= 2) {
            comps[1].set({t0, t1}, lambda);
            comps[1].set({t2, t3}, -lambda);
        }
        if (terms >= 3) {
            comps[2].set({t0, t3}, lambda);
            comps[2].set({t1, t2}, -lambda);
        }
    }
    CatalogEntry e = central_extension(LieAlgebra(4 * n), Form::stack(comps), as_vector(phi_q(n)));
    std::map<std::string, std::string> ex{{"abelian", "true"},
                                          {"normal", "true"},
                                          {"case", "PsiZero_ZZero_DeltaZero"},
                                          {"delta", "0"},
                                          {"psi_rank", "0"},
                                          {"Z_zero", "true"},
                                          {"beta", "0"},
                                          {"parallel_torsion", terms == 1 ? "true" : "false"},
                                          {"ricci_symmetric", "true"}};
    if (n == 1) {
        const std::string labels[] = {dim7_labels::H2R_R2, dim7_labels::H1C_R, dim7_labels::H1H};
        ex["dim7_label"] = labels[terms - 1];
    }
    return finish(e, name, rd.finish({{"n", std::to_string(n)}, {"lambda", lambda.str()}}), ex);
}

CatalogEntry hypercomplex_r4_entry(const Params& p) {
    ParamReader r("hypercomplex_R4", p);
    CatalogEntry e = central_extension(LieAlgebra(4), Form(4, 2, 3), as_vector(hypercomplex_r4()));
    return finish(e, "hypercomplex_R4", r.finish({}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"case", "PsiZero_ZZero_DeltaZero"},
                   {"beta", "0"},
                   {"dim7_label", dim7_labels::R7},
                   {"parallel_torsion", "true"},
                   {"ricci_symmetric", "true"}});
}

CatalogEntry sasaki5_center(const Params& p) {
    ParamReader rd("sasaki5_center", p);
    std::string variant = rd.word("variant", "R4");
    Rational r = rd.rational("r", 1), s = rd.rational("s", 1);
    std::vector<Bracket> hb;
    if (variant == "R4") {
    } else if (variant == "affRxR2" || variant == "affR×R2") {
        rd.nonzero("r", r);
        hb.push_back({0, 1, basis_vec(4, 1, r)});
        variant = "affR×R2";
    } else if (variant == "affRxaffR" || variant == "affR×affR") {
        rd.nonzero("r", r);
        rd.nonzero("s", s);
        hb.push_back({0, 1, basis_vec(4, 1, r)});
        hb.push_back({2, 3, basis_vec(4, 3, s)});
        variant = "affR×affR";
    } else {
        throw PreconditionError("parameter-out-of-range", "sasaki5_center: unknown variant " + variant);
    }
    Form sigma(4, 2);
    sigma.set({0, 1}, Rational(2));
    sigma.set({2, 3}, Rational(2));
    Matrix j(4, 4);
    j(1, 0) = 1; j(0, 1) = -1; j(3, 2) = 1; j(2, 3) = -1;
    CatalogEntry e = central_extension(LieAlgebra(4, hb), sigma, {j});
    return finish(e, "sasaki5_center", rd.finish({{"variant", variant}, {"r", r.str()}, {"s", s.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"xi_central", "true"},
                   {"metric_class", kSasakian},
                   {"affr_fingerprint", "true"}});
}

CatalogEntry sasaki5_g0(const Params& p) {
    ParamReader rd("sasaki5_g0", p);
    Rational c = rd.rational("cos", 1), s = rd.rational("sin", 0);
    if (c * c + s * s != Rational(1))
        throw PreconditionError("parameter-out-of-range", "sasaki5_g0: (cos, sin) must lie on the unit circle");
    using T = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;
    Rational two(2);
    std::vector<T> terms{
        {0, 0, 1, two * c}, {0, 2, 3, two * c},                     // de1 = 2c(e12 + e34)
        {1, 0, 1, two * s}, {1, 2, 3, two * s},                     // de2 = 2s(e12 + e34)
        {2, 3, 4, 1},       {2, 0, 2, s}, {2, 1, 3, s}, {2, 0, 3, c}, {2, 1, 2, -c},  // de3
        {3, 2, 4, -1},      {3, 0, 2, -c}, {3, 1, 3, -c}, {3, 0, 3, s}, {3, 1, 2, -s},  // de4
        {4, 0, 1, two},     {4, 2, 3, two},                         // de5 = 2(e12 + e34)
    };
    LieAlgebra g = from_differentials(5, terms);
    Matrix phi(5, 5);
    phi(1, 0) = -1; phi(0, 1) = 1; phi(3, 2) = -1; phi(2, 3) = 1;
    AlmostContact st{phi, unit_vector(5, 4), unit_vector(5, 4)};
    CatalogEntry e{"", {}, g, st, Metric::identity(5), {}};
    return finish(e, "sasaki5_g0", rd.finish({{"cos", c.str()}, {"sin", s.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"xi_central", "false"},
                   {"center_dim", "0"},
                   {"metric_class", kSasakian}});
}

CatalogEntry dim3_family(const Params& p) {
    ParamReader rd("dim3_family", p);
    Rational a = rd.rational("a", 0), b = rd.rational("b", 0), al = rd.rational("alpha", 0),
             be = rd.rational("beta", 0), ga = rd.rational("gamma", 0);
    // basis (xi, e1, e2): [xi,e1] = a e1 + b e2, [xi,e2] = -b e1 + a e2, [e1,e2] = alpha xi + beta e1 + gamma e2
    std::vector<Bracket> br{{0, 1, Vector{0, a, b}}, {0, 2, Vector{0, -b, a}}, {1, 2, Vector{al, be, ga}}};
    LieAlgebra g(3, br);
    if (jacobi_check(g))
        throw PreconditionError("parameter-out-of-range", "dim3_family: parameters violate the Jacobi identity");
    Matrix phi(3, 3);
    phi(2, 1) = 1;
    phi(1, 2) = -1;
    AlmostContact st{phi, unit_vector(3, 0), unit_vector(3, 0)};
    CatalogEntry e{"", {}, g, st, Metric::identity(3), {}};
    return finish(e, "dim3_family",
                  rd.finish({{"a", a.str()}, {"b", b.str()}, {"alpha", al.str()}, {"beta", be.str()}, {"gamma", ga.str()}}),
                  {{"abelian", "true"}, {"normal", "true"}});
}

CatalogEntry quasi_sasaki_gk(const Params& p) {
    ParamReader rd("quasi_sasaki_gk", p);
    std::size_t n = rd.count("n", 2, 1, 16);
    std::size_t k = rd.count("k", 1, 0, n);
    Form sigma(2 * n, 2);
    for (std::size_t i = 0; i < k; ++i) sigma.set({i, n + i}, Rational(2));
    CatalogEntry e = central_extension(LieAlgebra(2 * n), sigma, {standard_j(n)});
    std::string cls = k == n ? kSasakian : (k == 0 ? "quasi-Sasakian,coKähler" : "quasi-Sasakian");
    return finish(e, "quasi_sasaki_gk", rd.finish({{"n", std::to_string(n)}, {"k", std::to_string(k)}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"xi_central", "true"},
                   {"metric_class", cls},
                   {"center_dim", std::to_string(k == 0 ? 2 * n + 1 : 2 * (n - k) + 1)},
                   {"affr_fingerprint", "true"}});
}

CatalogEntry alpha_kenmotsu(const Params& p) {
    ParamReader rd("alpha_kenmotsu", p);
    std::size_t n = rd.count("n", 1, 1, 16);
    Rational alpha = rd.rational("alpha", 1);
    CatalogEntry e = semidirect_by_derivation(LieAlgebra(2 * n), standard_j(n), -alpha * Matrix::identity(2 * n));
    std::string cls = "quasi-Sasakian,coKähler";
    if (!alpha.is_zero()) {
        cls = "α-Kenmotsu(" + alpha.str() + ")";
        if (alpha == Rational(1)) cls += ",Kenmotsu";
    }
    return finish(e, "alpha_kenmotsu", rd.finish({{"n", std::to_string(n)}, {"alpha", alpha.str()}}),
                  {{"abelian", "true"}, {"normal", "true"}, {"metric_class", cls}, {"affr_fingerprint", "true"}});
}

CatalogEntry semidirect_h1r_x_r(const Params& p) {
    ParamReader rd("semidirect_h1R_x_R", p);
    // h_1^R × R with basis (x, y, z, w), [x, y] = z; J x = y, J z = w; D = diag(1, 1, 2, 2)
    LieAlgebra h(4, {{0, 1, Vector{0, 0, 1, 0}}});
    Matrix j(4, 4);
    j(1, 0) = 1; j(0, 1) = -1; j(3, 2) = 1; j(2, 3) = -1;
    Matrix d(4, 4);
    d(0, 0) = 1; d(1, 1) = 1; d(2, 2) = 2; d(3, 3) = 2;
    CatalogEntry e = semidirect_by_derivation(h, j, d);
    return finish(e, "semidirect_h1R_x_R", rd.finish({}),
                  {{"abelian", "true"}, {"normal", "true"}, {"two_step_solvable", "false"}});
}

CatalogEntry so3_semidirect_entry(const Params& p) {
    ParamReader rd("so3_semidirect", p);
    std::size_t n = rd.count("n", 1, 1, 8);
    Rational delta = rd.rational("delta", 1);
    rd.nonzero("delta", delta);
    CatalogEntry e = so3_semidirect(n, delta);
    return finish(e, "so3_semidirect", rd.finish({{"n", std::to_string(n)}, {"delta", delta.str()}}),
                  {{"abelian", "true"}, {"normal", "true"}});
}

// so(3) × h with h = R^{4n} or aff(C) and the Reeb vectors spanning so(3).
CatalogEntry so3_product(const Params& p) {
    ParamReader rd("so3_product", p);
    Rational delta = rd.rational("delta", 1);
    rd.nonzero("delta", delta);
    std::string which = rd.word("h", "R4");
    std::size_t n = rd.count("n", 1, 1, 8);
    LieAlgebra h;
    std::array<Endomorphism, 3> j;
    if (which == "R4") {
        h = LieAlgebra(4 * n);
        j = phi_q(n);
    } else if (which == "affC") {
        if (n != 1) throw PreconditionError("parameter-out-of-range", "so3_product: aff(C) needs n = 1");
        h = aff_c();
        j = hypercomplex_affc();
    } else {
        throw PreconditionError("parameter-out-of-range", "so3_product: h must be R4 or affC");
    }
    std::size_t dim = h.dim() + 3;
    std::vector<Bracket> br;
    for (auto [a, b, c] : kEvenPermutations) {
        Vector v = Rational(2) * delta * unit_vector(dim, c);
        if (a < b) br.push_back({a, b, v});
        else br.push_back({b, a, -v});
    }
    for (const auto& hb : h.brackets()) {
        Vector v = zero_vector(dim);
        for (std::size_t r = 0; r < h.dim(); ++r) v[3 + r] = hb.coeffs[r];
        br.push_back({3 + hb.i, 3 + hb.j, v});
    }
    CatalogEntry e{"", {}, LieAlgebra(dim, br), vertical_plus(j), Metric::identity(dim), {}};
    std::map<std::string, std::string> ex{{"abelian", "true"},
                                          {"normal", "true"},
                                          {"case", "PsiZero_ZZero_DeltaNonzero"},
                                          {"delta", delta.str()},
                                          {"psi_rank", "0"},
                                          {"Z_zero", "true"},
                                          {"beta", "0"}};
    if (dim == 7) ex["dim7_label"] = which == "R4" ? dim7_labels::SO3_R4 : dim7_labels::SO3_AFFC;
    return finish(e, "so3_product", rd.finish({{"delta", delta.str()}, {"h", which}, {"n", std::to_string(n)}}), ex);
}

// [xi_i, xi_j] = 2 delta xi_k - Z_k with Z = tau_1 and Z_k = phi_k Z; everything else zero.
CatalogEntry reeb_twisted(const Params& p) {
    ParamReader rd("reeb_twisted", p);
    Rational delta = rd.rational("delta", 0);
    Almost3Contact t = quaternionic_structures(1);
    Vector z = unit_vector(7, 3);
    std::vector<Bracket> br;
    for (auto [a, b, c] : kEvenPermutations) {
        Vector v = Rational(2) * delta * unit_vector(7, c) - t.s[c].phi * z;
        if (a < b) br.push_back({a, b, v});
        else br.push_back({b, a, -v});
    }
    CatalogEntry e{"", {}, LieAlgebra(7, br), t, Metric::identity(7), {}};
    return finish(e, "reeb_twisted", rd.finish({{"delta", delta.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"case", "PsiZero_ZNonzero"},
                   {"delta", delta.str()},
                   {"psi_rank", "0"},
                   {"Z_zero", "false"},
                   {"beta", "none"},
                   {"dim7_label", delta.is_zero() ? dim7_labels::N_R : dim7_labels::SO3_R4}});
}

// so(3) acting through delta phi_i on the first `active` quaternionic blocks and trivially on the rest.
CatalogEntry so3_partial(const Params& p) {
    ParamReader rd("so3_partial", p);
    std::size_t active = rd.count("active", 1, 1, 4);
    std::size_t passive = rd.count("passive", 1, 1, 4);
    Rational delta = rd.rational("delta", 1);
    rd.nonzero("delta", delta);
    std::size_t n = active + passive;
    std::size_t dim = 4 * n + 3;
    // Blocks are interleaved by the phi_q layout, so act on the quaternionic lines r < active.
    Almost3Contact t = quaternionic_structures(n);
    std::vector<Bracket> br;
    for (auto [a, b, c] : kEvenPermutations) {
        Vector v = Rational(2) * delta * unit_vector(dim, c);
        if (a < b) br.push_back({a, b, v});
        else br.push_back({b, a, -v});
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t q = 0; q < 4; ++q) {
            for (std::size_t r = 0; r < active; ++r) {
                std::size_t col = 3 + q * n + r;
                br.push_back({i, col, delta * t.s[i].phi.column(col)});
            }
        }
    }
    CatalogEntry e{"", {}, LieAlgebra(dim, br), t, Metric::identity(dim), {}};
    return finish(e, "so3_partial",
                  rd.finish({{"active", std::to_string(active)}, {"passive", std::to_string(passive)}, {"delta", delta.str()}}),
                  {{"abelian", "true"},
                   {"normal", "true"},
                   {"case", "Intermediate(" + std::to_string(4 * active) + ")"},
                   {"psi_rank", std::to_string(4 * active)},
                   {"Z_zero", "true"},
                   {"beta", "none"}});
}

const std::map<std::string, std::function<CatalogEntry(const Params&)>>& registry() {
    static const std::map<std::string, std::function<CatalogEntry(const Params&)>> r{
        {"heisenberg_real", heisenberg_real},
        {"aff_R", aff_r},
        {"aff_C_extension", aff_c_extension},
        {"aff_C_hypercomplex", aff_c_hypercomplex},
        {"quaternionic_heisenberg", [](const Params& p) { return heisenberg_family("quaternionic_heisenberg", 3, p); }},
        {"complex_heisenberg_times_R", [](const Params& p) { return heisenberg_family("complex_heisenberg_times_R", 2, p); }},
        {"real_heisenberg_times_R2", [](const Params& p) { return heisenberg_family("real_heisenberg_times_R2", 1, p); }},
        {"hypercomplex_R4", hypercomplex_r4_entry},
        {"sasaki5_center", sasaki5_center},
        {"sasaki5_g0", sasaki5_g0},
        {"dim3_family", dim3_family},
        {"quasi_sasaki_gk", quasi_sasaki_gk},
        {"alpha_kenmotsu", alpha_kenmotsu},
        {"semidirect_h1R_x_R", semidirect_h1r_x_r},
        {"so3_semidirect", so3_semidirect_entry},
        {"so3_product", so3_product},
        {"reeb_twisted", reeb_twisted},
        {"so3_partial", so3_partial},
    };
    return r;
}

}  // namespace

CatalogEntry catalog(const std::string& name, const Params& params) {
    auto it = registry().find(name);
    if (it == registry().end()) throw PreconditionError("unknown-name", "no catalog entry named " + name);
    return it->second(params);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace contactlie
