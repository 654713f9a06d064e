#include "support.hpp"

#include "contactlie/forms.hpp"

#include <gtest/gtest.h>

using namespace contactlie;
using namespace testing_support;

namespace {

// Jacobi via structure constants only.
bool jacobi_by_hand(const LieAlgebra& l) {
    std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t r = 0; r < n; ++r) {
                    Rational s;
                    for (std::size_t m = 0; m < n; ++m)
                        s += l.coeff(i, j, m) * l.coeff(m, k, r) + l.coeff(j, k, m) * l.coeff(m, i, r) +
                             l.coeff(k, i, m) * l.coeff(m, j, r);
                    if (!s.is_zero()) return false;
                }
    return true;
}

bool d_squared_vanishes_on_covectors(const LieAlgebra& l) {
    for (std::size_t k = 0; k < l.dim(); ++k) {
        Form e = Form::covector(unit_vector(l.dim(), k));
        if (!ce_differential(l, ce_differential(l, e)).is_zero()) return false;
    }
    return true;
}

Form random_form(std::mt19937& rng, std::size_t n, std::size_t k) {
    Form w(n, k);
    for (const auto& idx : increasing_tuples(n, k)) w.set(idx, small_int(rng, -2, 2));
    return w;
}

}  // namespace

TEST(Forms, AlternatingSigns) {
    Form w = Form::monomial(4, {0, 2, 3}, 5);
    EXPECT_EQ(w.scalar_at({0, 2, 3}), Rational(5));
    EXPECT_EQ(w.scalar_at({2, 0, 3}), Rational(-5));
    EXPECT_EQ(w.scalar_at({3, 0, 2}), Rational(5));
    EXPECT_EQ(w.scalar_at({0, 0, 3}), Rational(0));
}

TEST(Forms, WedgeIsDeterminant) {
    Form a = Form::covector({1, 2, 0});
    Form b = Form::covector({0, 1, 3});
    Form ab = wedge(a, b);
    // (a ∧ b)(x, y) = a(x) b(y) - a(y) b(x)
    Vector x{1, 1, 1}, y{2, 0, -1};
    EXPECT_EQ(ab.evaluate_scalar({x, y}), Rational(3 * (-3) - 2 * 4));
    EXPECT_EQ(wedge(b, a), Rational(-1) * ab);
    EXPECT_TRUE(wedge(a, a).is_zero());
}

TEST(Forms, WedgeIsAssociativeAndGradedCommutative) {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        Form a = random_form(rng, 5, 1), b = random_form(rng, 5, 2), c = random_form(rng, 5, 1);
        EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
        EXPECT_EQ(wedge(a, c), Rational(-1) * wedge(c, a));
        EXPECT_EQ(wedge(a, b), wedge(b, a));
    }
}

TEST(Forms, DifferentialOfCovectorIsMinusDualBracket) {
    std::mt19937 rng(4);
    for (int t = 0; t < 20; ++t) {
        LieAlgebra l = random_valid_algebra(rng, 5);
        std::size_t n = l.dim();
        if (n < 2) continue;
        for (std::size_t k = 0; k < n; ++k) {
            Form d = ce_differential(l, Form::covector(unit_vector(n, k)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(d.scalar_at({i, j}), -l.coeff(i, j, k));
        }
    }
}

TEST(Forms, HeisenbergContactForm) {
    // [e2, e3] = e1 gives d e^1 = -e^{23}
    LieAlgebra h = heisenberg(1);
    EXPECT_EQ(ce_differential(h, Form::covector({1, 0, 0})), Form::monomial(3, {1, 2}, -1));
    EXPECT_TRUE(is_cocycle(h, Form::covector({0, 1, 0})));
}

TEST(Forms, DSquaredVanishesOnRandomLieAlgebras) {
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        LieAlgebra l = random_valid_algebra(rng, 6);
        for (std::size_t k = 1; k + 1 < l.dim(); ++k) {
            Form w = random_form(rng, l.dim(), k);
            EXPECT_TRUE(ce_differential(l, ce_differential(l, w)).is_zero());
        }
    }
}

TEST(Forms, DSquaredDetectsJacobiFailure) {
    std::mt19937 rng(6);
    int failures = 0, successes = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 3 + t % 3;
        LieAlgebra l = t % 4 == 0 ? random_valid_algebra(rng, n) : random_antisymmetric(rng, n, 4);
        if (l.dim() < 3) continue;
        bool hand = jacobi_by_hand(l);
        EXPECT_EQ(hand, d_squared_vanishes_on_covectors(l));
        EXPECT_EQ(hand, !jacobi_check(l).has_value());
        (hand ? successes : failures)++;
    }
    EXPECT_GT(failures, 20);
    EXPECT_GT(successes, 20);
}

TEST(Forms, VectorValuedDifferentialActsComponentwise) {
    std::mt19937 rng(8);
    LieAlgebra l = random_valid_algebra(rng, 5);
    Form a = random_form(rng, l.dim(), 1), b = random_form(rng, l.dim(), 1);
    Form s = Form::stack({a, b});
    Form ds = ce_differential(l, s);
    EXPECT_EQ(ds.component(0), ce_differential(l, a));
    EXPECT_EQ(ds.component(1), ce_differential(l, b));
}

TEST(Forms, InteriorAndPullback) {
    Form w = Form::monomial(3, {0, 1}) + Form::monomial(3, {1, 2}, 2);
    Form iw = interior(Vector{0, 1, 0}, w);
    EXPECT_EQ(iw, Form::covector({-1, 0, 2}));
    Matrix swap = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    EXPECT_EQ(pullback(w, swap).scalar_at({0, 1}), Rational(-1));
    EXPECT_EQ(pullback(w, Matrix::identity(3)), w);
}

TEST(Forms, DifferentialCommutesWithBasisChange) {
    std::mt19937 rng(9);
    for (int t = 0; t < 15; ++t) {
        LieAlgebra l = random_valid_algebra(rng, 5);
        if (l.dim() < 3) continue;
        Matrix p = random_invertible(rng, l.dim());
        Form w = random_form(rng, l.dim(), 1);
        EXPECT_EQ(pullback(ce_differential(l, w), p), ce_differential(l.change_basis(p), pullback(w, p)));
    }
}
