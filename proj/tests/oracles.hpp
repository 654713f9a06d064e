#pragma once

// Reference computations that avoid the library's own classification code.

#include "contactlie/contact.hpp"
#include "contactlie/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oracles {

using namespace contactlie;

struct Dim3Oracle {
    std::string label;
    std::optional<Rational> lambda_squared;  // only for r'_{3,lambda}
};

// Isomorphism type of a 3-dimensional Lie algebra carrying an abelian almost contact
// structure, read off from the derived algebra, the center, the Killing form and the
// action of a complement on the derived algebra.
inline Dim3Oracle dim3_oracle(const LieAlgebra& l) {
    Subspace all = Subspace::whole(3);
    Subspace der = bracket_span(l, all, all);
    Subspace z = center(l);
    switch (der.dim()) {
        case 0:
            return {dim3_labels::R3, std::nullopt};
        case 1:
            return {z.contains(der) && z.dim() == 1 ? dim3_labels::H1R : dim3_labels::AFFR_R, std::nullopt};
        case 3: {
            Matrix k = killing_form(l);
            auto minors = leading_principal_minors(Rational(-1) * k);
            bool negative_definite = true;
            for (const auto& m : minors) negative_definite = negative_definite && m.sign() > 0;
            return {negative_definite ? dim3_labels::SO3 : dim3_labels::SL2R, std::nullopt};
        }
        default:
            break;
    }
    auto basis = der.basis();
    Vector x;
    for (std::size_t i = 0; i < 3 && x.empty(); ++i)
        if (!der.contains(unit_vector(3, i))) x = unit_vector(3, i);
    Matrix a(2, 2);
    for (std::size_t c = 0; c < 2; ++c) {
        auto coords = der.coordinates(l.bracket(x, basis[c]));
        a(0, c) = (*coords)[0];
        a(1, c) = (*coords)[1];
    }
    Rational tr = a(0, 0) + a(1, 1);
    Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (a(0, 1).is_zero() && a(1, 0).is_zero() && a(0, 0) == a(1, 1)) return {dim3_labels::R31, std::nullopt};
    Rational disc = tr * tr - Rational(4) * det;
    if (disc.sign() < 0) {
        Rational half = tr / Rational(2);
        return {dim3_labels::R3PRIME, half * half / (det - half * half)};
    }
    return {"unexpected", std::nullopt};
}

// Integer polynomials as coefficient vectors, lowest degree first.
using Poly = std::vector<long>;

inline Poly poly_divide(Poly num, const Poly& den) {
    Poly q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

inline Poly cyclotomic(unsigned long m) {
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) p = poly_divide(p, cyclotomic(d));
    return p;
}

}  // namespace oracles
