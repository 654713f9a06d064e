#pragma once

#include "contactlie/constructors.hpp"
#include "contactlie/lie_algebra.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

using namespace contactlie;
using Params = std::map<std::string, std::string>;

inline Rational small_int(std::mt19937& rng, int lo, int hi) {
    return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small_int(rng, lo, hi);
    return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        Matrix p = random_matrix(rng, n, n);
        if (!determinant(p).is_zero()) return p;
    }
}

// Structure constants written out by hand, so the generators below never rely on
// the library's own Jacobi or bracket code.
inline LieAlgebra tensor_algebra(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& c) {
    std::vector<Rational> t(n * n * n);
    for (const auto& [i, j, k, v] : c) {
        t[(i * n + j) * n + k] += v;
        t[(j * n + i) * n + k] -= v;
    }
    return LieAlgebra::from_tensor(n, std::move(t));
}

inline LieAlgebra so3() { return tensor_algebra(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}); }
// [h, e] = 2e, [h, f] = -2f, [e, f] = h with basis (h, e, f)
inline LieAlgebra sl2() { return tensor_algebra(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }
inline LieAlgebra heisenberg(std::size_t k) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> c;
    for (std::size_t i = 0; i < k; ++i) c.push_back({1 + i, 1 + k + i, 0, 1});
    return tensor_algebra(2 * k + 1, c);
}
inline LieAlgebra affr() { return tensor_algebra(2, {{0, 1, 1, 1}}); }

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::size_t n = a.dim() + b.dim();
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) t[(i * n + j) * n + k] = a.coeff(i, j, k);
    std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) t[((o + i) * n + o + j) * n + o + k] = b.coeff(i, j, k);
    return LieAlgebra::from_tensor(n, std::move(t));
}

// R ⋉_D R^m: every endomorphism is a derivation of an abelian algebra.
inline LieAlgebra semidirect_abelian(const Matrix& d) {
    std::size_t m = d.rows();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> c;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t r = 0; r < m; ++r)
            if (!d(r, a).is_zero()) c.push_back({0, 1 + a, 1 + r, d(r, a)});
    return tensor_algebra(m + 1, c);
}

// c'_{ab}^c for the basis f_a = sum_k P(k, a) e_k, computed entrywise.
inline LieAlgebra rebase(const LieAlgebra& l, const Matrix& p) {
    std::size_t n = l.dim();
    Matrix inv = *inverse(p);
    std::vector<Rational> t(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t i = 0; i < n; ++i) {
                if (p(i, a).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (p(j, b).is_zero()) continue;
                    Rational w = p(i, a) * p(j, b);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (l.coeff(i, j, k).is_zero()) continue;
                        for (std::size_t c = 0; c < n; ++c) t[(a * n + b) * n + c] += w * l.coeff(i, j, k) * inv(c, k);
                    }
                }
            }
    return LieAlgebra::from_tensor(n, std::move(t));
}

// A Lie algebra of dimension <= max_dim from known-valid building blocks, in a random basis.
inline LieAlgebra random_valid_algebra(std::mt19937& rng, std::size_t max_dim = 6) {
    std::vector<LieAlgebra> blocks;
    std::size_t used = 0;
    auto budget = [&] { return max_dim - used; };
    int pieces = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int p = 0; p < pieces && budget() > 0; ++p) {
        int kind = std::uniform_int_distribution<int>(0, 5)(rng);
        LieAlgebra b;
        if (kind == 0 && budget() >= 3) b = so3();
        else if (kind == 1 && budget() >= 3) b = sl2();
        else if (kind == 2 && budget() >= 3) b = heisenberg(budget() >= 5 && rng() % 2 ? 2 : 1);
        else if (kind == 3 && budget() >= 2) {
            std::size_t m = std::uniform_int_distribution<std::size_t>(1, budget() - 1)(rng);
            b = semidirect_abelian(random_matrix(rng, m, m));
        } else if (kind == 4 && budget() >= 2) b = affr();
        else b = LieAlgebra(1);
        used += b.dim();
        blocks.push_back(b);
    }
    LieAlgebra l = blocks[0];
    for (std::size_t i = 1; i < blocks.size(); ++i) l = direct_sum(l, blocks[i]);
    return rebase(l, random_invertible(rng, l.dim()));
}

// Antisymmetric tensor with random small entries; usually not a Lie algebra.
inline LieAlgebra random_antisymmetric(std::mt19937& rng, std::size_t n, int density = 3) {
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (std::uniform_int_distribution<int>(0, density)(rng) != 0) continue;
                Rational v = small_int(rng, -2, 2);
                t[(i * n + j) * n + k] = v;
                t[(j * n + i) * n + k] = -v;
            }
    return LieAlgebra::from_tensor(n, std::move(t));
}

// 3x3 integer matrix of exactly the given rank (1..3).
inline Matrix random_rank_matrix(std::mt19937& rng, std::size_t r) {
    for (;;) {
        Matrix m = random_matrix(rng, 3, r, -3, 3) * random_matrix(rng, r, 3, -3, 3);
        if (rank(m) == r) return m;
    }
}

// R^3 ⊕_theta R^4 with the cocycle encoded by A:
// [e1,e2] = -[e3,e4] = A col 1, [e1,e3] = [e2,e4] = A col 2, [e1,e4] = -[e2,e3] = A col 3.
inline CatalogEntry r4_extension_from_matrix(const Matrix& a) {
    Form theta(4, 2, 3);
    Vector c1 = a.column(0), c2 = a.column(1), c3 = a.column(2);
    theta.set({0, 1}, c1);
    theta.set({2, 3}, -c1);
    theta.set({0, 2}, c2);
    theta.set({1, 3}, c2);
    theta.set({0, 3}, c3);
    theta.set({1, 2}, -c3);
    auto j = hypercomplex_r4();
    return central_extension(LieAlgebra(4), theta, {j[0], j[1], j[2]});
}

inline std::vector<std::pair<std::string, Params>> contact_fixtures() {
    return {{"heisenberg_real", {{"n", "1"}}},
            {"heisenberg_real", {{"n", "2"}}},
            {"heisenberg_real", {{"n", "3"}}},
            {"aff_R", {}},
            {"aff_R", {{"r", "-3/2"}}},
            {"aff_C_extension", {}},
            {"sasaki5_center", {{"variant", "R4"}}},
            {"sasaki5_center", {{"variant", "affRxR2"}, {"r", "2"}}},
            {"sasaki5_center", {{"variant", "affRxaffR"}, {"r", "1"}, {"s", "-1"}}},
            {"sasaki5_g0", {{"cos", "1"}, {"sin", "0"}}},
            {"sasaki5_g0", {{"cos", "3/5"}, {"sin", "4/5"}}},
            {"sasaki5_g0", {{"cos", "-5/13"}, {"sin", "12/13"}}},
            {"quasi_sasaki_gk", {{"n", "2"}, {"k", "1"}}},
            {"quasi_sasaki_gk", {{"n", "3"}, {"k", "0"}}},
            {"alpha_kenmotsu", {{"n", "2"}, {"alpha", "1"}}},
            {"alpha_kenmotsu", {{"n", "1"}, {"alpha", "-2"}}},
            {"semidirect_h1R_x_R", {}},
            {"dim3_family", {{"a", "0"}, {"b", "1"}, {"alpha", "1"}}}};
}

inline std::vector<std::pair<std::string, Params>> heisenberg_type_fixtures() {
    std::vector<std::pair<std::string, Params>> out;
    for (const char* name : {"quaternionic_heisenberg", "complex_heisenberg_times_R", "real_heisenberg_times_R2"})
        for (const char* n : {"1", "2"})
            for (const char* lambda : {"1", "2"}) out.push_back({name, {{"n", n}, {"lambda", lambda}}});
    return out;
}

inline std::vector<std::pair<std::string, Params>> three_contact_fixtures() {
    std::vector<std::pair<std::string, Params>> out = heisenberg_type_fixtures();
    for (const char* n : {"1", "2"})
        for (const char* d : {"1", "2", "-1"}) out.push_back({"so3_semidirect", {{"n", n}, {"delta", d}}});
    out.push_back({"hypercomplex_R4", {}});
    out.push_back({"aff_C_hypercomplex", {}});
    out.push_back({"aff_C_hypercomplex", {{"x", "1"}, {"y", "-2"}}});
    out.push_back({"so3_product", {{"h", "R4"}, {"delta", "1"}}});
    out.push_back({"so3_product", {{"h", "R4"}, {"delta", "1/2"}, {"n", "2"}}});
    out.push_back({"so3_product", {{"h", "affC"}, {"delta", "-1"}}});
    out.push_back({"reeb_twisted", {{"delta", "0"}}});
    out.push_back({"reeb_twisted", {{"delta", "3"}}});
    out.push_back({"so3_partial", {{"active", "1"}, {"passive", "1"}, {"delta", "1"}}});
    return out;
}

}  // namespace testing_support
