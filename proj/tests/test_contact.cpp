#include "oracles.hpp"
#include "support.hpp"

#include "contactlie/errors.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace contactlie;
using namespace testing_support;

namespace {

// Basis (xi, e1, e2) with [xi, e1] = e1 and phi e1 = e2: ad_xi does not commute with phi.
CatalogEntry reeb_not_commuting() {
    LieAlgebra l(3, {{0, 1, Vector{0, 1, 0}}});
    Matrix phi(3, 3);
    phi(2, 1) = 1;
    phi(1, 2) = -1;
    return CatalogEntry{"", {}, l, AlmostContact{phi, unit_vector(3, 0), unit_vector(3, 0)}, Metric::identity(3), {}};
}

// R ⊕ (h_1^R × R) with J x = z, J y = w: [Jx, Jy] = 0 but [x, y] = z.
CatalogEntry not_abelian() {
    LieAlgebra l(5, {{1, 2, Vector{0, 0, 0, 1, 0}}});
    Matrix phi(5, 5);
    phi(3, 1) = 1;
    phi(1, 3) = -1;
    phi(4, 2) = 1;
    phi(2, 4) = -1;
    return CatalogEntry{"", {}, l, AlmostContact{phi, unit_vector(5, 0), unit_vector(5, 0)}, Metric::identity(5), {}};
}

std::string error_name(const std::function<void()>& f) {
    try {
        f();
    } catch (const PreconditionError& e) {
        return e.name();
    }
    return "";
}

}  // namespace

TEST(Contact, CatalogFixturesAreAbelianNormalAndCompatible) {
    for (const auto& [name, params] : contact_fixtures()) {
        CatalogEntry e = catalog(name, params);
        const auto& s = e.contact();
        SCOPED_TRACE(name);
        EXPECT_TRUE(validate_almost_contact(e.algebra, s).ok());
        EXPECT_TRUE(is_compatible(s, e.metric));
        EXPECT_TRUE(is_abelian_contact(e.algebra, s).ok);
        EXPECT_TRUE(normality_tensor(e.algebra, s).is_normal);
        for (const auto& m : check_expected(e)) ADD_FAILURE() << m.key << ": expected " << m.expected << ", got " << m.actual;
    }
}

TEST(Contact, ValidationReportsBrokenIdentities) {
    CatalogEntry e = catalog("heisenberg_real", {{"n", "1"}});
    AlmostContact s = e.contact();
    s.phi = Rational(2) * s.phi;
    EXPECT_FALSE(validate_almost_contact(e.algebra, s).ok());

    AlmostContact t = e.contact();
    t.eta = Rational(2) * t.eta;
    EXPECT_FALSE(validate_almost_contact(e.algebra, t).ok());

    LieAlgebra even(4);
    AlmostContact u{Matrix(4, 4), unit_vector(4, 0), unit_vector(4, 0)};
    EXPECT_FALSE(validate_almost_contact(even, u).ok());
}

TEST(Contact, ReebNotCommutingIsNeitherAbelianNorNormal) {
    CatalogEntry e = reeb_not_commuting();
    auto ab = is_abelian_contact(e.algebra, e.contact());
    EXPECT_FALSE(ab.ok);
    EXPECT_EQ(ab.failed_identity, "ad_xi∘phi = phi∘ad_xi");
    auto n = normality_tensor(e.algebra, e.contact());
    EXPECT_FALSE(n.is_normal);
    EXPECT_FALSE(n.tensor.is_zero());
    EXPECT_EQ(metric_class(e.algebra, e.contact(), e.metric).labels, std::vector<std::string>{"none"});
}

TEST(Contact, NonAbelianStructureIsReported) {
    CatalogEntry e = not_abelian();
    ASSERT_TRUE(validate_almost_contact(e.algebra, e.contact()).ok());
    auto ab = is_abelian_contact(e.algebra, e.contact());
    EXPECT_FALSE(ab.ok);
    EXPECT_FALSE(ab.failed_identity.empty());
    EXPECT_EQ(error_name([&] { classify_dim3(e.algebra, e.contact()); }), "dim-not-3");
    EXPECT_EQ(error_name([&] { decompose_central_extension(e.algebra, e.contact()); }), "not-abelian");
}

TEST(Contact, NormalityIsBasisIndependent) {
    std::mt19937 rng(21);
    for (const auto& [name, params] : contact_fixtures()) {
        CatalogEntry e = catalog(name, params);
        Matrix p = random_invertible(rng, e.algebra.dim());
        LieAlgebra l = e.algebra.change_basis(p);
        AlmostContact s = change_basis(e.contact(), p);
        EXPECT_TRUE(validate_almost_contact(l, s).ok()) << name;
        EXPECT_TRUE(is_abelian_contact(l, s).ok) << name;
        EXPECT_TRUE(normality_tensor(l, s).is_normal) << name;
    }
    CatalogEntry bad = reeb_not_commuting();
    Matrix p = random_invertible(rng, 3);
    EXPECT_FALSE(normality_tensor(bad.algebra.change_basis(p), change_basis(bad.contact(), p)).is_normal);
}

TEST(Contact, Dim3AgreesWithOracleOnSmallGrid) {
    std::set<std::string> labels;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int al = -1; al <= 1; ++al)
                for (int be = -1; be <= 1; ++be) {
                    Params p{{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"alpha", std::to_string(al)}, {"beta", std::to_string(be)}};
                    std::optional<CatalogEntry> entry;
                    try {
                        entry = catalog("dim3_family", p);
                    } catch (const PreconditionError&) {
                        continue;
                    }
                    const CatalogEntry& e = *entry;
                    auto got = classify_dim3(e.algebra, e.contact());
                    auto want = oracles::dim3_oracle(e.algebra);
                    EXPECT_EQ(got.label, want.label) << a << b << al << be;
                    if (want.lambda_squared) {
                        ASSERT_TRUE(got.lambda);
                        EXPECT_EQ(*got.lambda * *got.lambda, *want.lambda_squared);
                    }
                    EXPECT_EQ(got.basis.column(0), e.contact().xi);
                    labels.insert(got.label);
                }
    EXPECT_GE(labels.size(), 5u);
}

TEST(Contact, Dim3NamedExamples) {
    auto label = [](Params p) {
        CatalogEntry e = catalog("dim3_family", p);
        return classify_dim3(e.algebra, e.contact()).label;
    };
    EXPECT_EQ(label({}), dim3_labels::R3);
    EXPECT_EQ(label({{"alpha", "1"}}), dim3_labels::H1R);
    EXPECT_EQ(label({{"gamma", "1"}}), dim3_labels::AFFR_R);
    EXPECT_EQ(label({{"b", "1"}, {"alpha", "1"}}), dim3_labels::SO3);
    EXPECT_EQ(label({{"b", "1"}, {"alpha", "-1"}}), dim3_labels::SL2R);
    EXPECT_EQ(label({{"a", "1"}}), dim3_labels::R31);
    EXPECT_EQ(label({{"a", "1"}, {"b", "2"}}), dim3_labels::R3PRIME);
}

TEST(Contact, CentralDecompositionRebuildsTheAlgebra) {
    for (const auto& [name, params] : contact_fixtures()) {
        CatalogEntry e = catalog(name, params);
        if (!center(e.algebra).contains(e.contact().xi)) continue;
        SCOPED_TRACE(name);
        auto dec = decompose_central_extension(e.algebra, e.contact());
        CatalogEntry back = central_extension(dec.h, dec.sigma, {dec.j});
        EXPECT_EQ(back.algebra, e.algebra.change_basis(dec.basis));
        EXPECT_EQ(back.contact(), change_basis(e.contact(), dec.basis));
    }
}

TEST(Contact, SemidirectDecompositionRebuildsTheAlgebra) {
    for (const auto& [name, params] : contact_fixtures()) {
        CatalogEntry e = catalog(name, params);
        if (!ce_differential(e.algebra, Form::covector(e.contact().eta)).is_zero()) continue;
        SCOPED_TRACE(name);
        auto dec = decompose_semidirect(e.algebra, e.contact());
        CatalogEntry back = semidirect_by_derivation(dec.h, dec.j, dec.d);
        EXPECT_EQ(back.algebra, e.algebra.change_basis(dec.basis));
    }
}

TEST(Contact, DecompositionPreconditions) {
    EXPECT_EQ(error_name([] {
                  auto e = catalog("sasaki5_g0");
                  decompose_central_extension(e.algebra, e.contact());
              }),
              "xi-not-central");
    EXPECT_EQ(error_name([] {
                  auto e = catalog("heisenberg_real");
                  decompose_semidirect(e.algebra, e.contact());
              }),
              "deta-nonzero");
}

TEST(Contact, SasakianCharacteristicTorsion) {
    CatalogEntry e = catalog("heisenberg_real", {{"n", "2"}});
    auto rep = characteristic_connection(e.algebra, e.contact(), e.metric);
    ASSERT_TRUE(rep.exists);
    Form eta = Form::covector(e.contact().eta);
    EXPECT_EQ(*rep.torsion, wedge(eta, ce_differential(e.algebra, eta)));

    CatalogEntry k = catalog("alpha_kenmotsu", {{"n", "1"}, {"alpha", "1"}});
    EXPECT_FALSE(characteristic_connection(k.algebra, k.contact(), k.metric).exists);
}

TEST(Contact, MetricClassOfKenmotsu) {
    CatalogEntry k = catalog("alpha_kenmotsu", {{"n", "2"}, {"alpha", "3"}});
    auto rep = metric_class(k.algebra, k.contact(), k.metric);
    ASSERT_TRUE(rep.alpha_kenmotsu);
    EXPECT_EQ(*rep.alpha_kenmotsu, Rational(3));
    EXPECT_TRUE(rep.deta_closed);
    EXPECT_FALSE(rep.alpha_sasaki);
}
