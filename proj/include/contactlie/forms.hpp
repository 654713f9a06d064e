#pragma once

#include "contactlie/lie_algebra.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace contactlie {

using Indices = std::vector<std::size_t>;

// Alternating k-linear map from (Q^n)^k to Q^m, stored by its values on
// strictly increasing index tuples. Convention: e^{i_1...i_k}(e_{i_1},...,e_{i_k}) = 1.
class Form {
public:
    Form() : Form(0, 0, 1) {}
    Form(std::size_t dim, std::size_t degree, std::size_t target = 1);
    static Form covector(const Vector& eta);
    // 2-form with the values of an antisymmetric matrix.
    static Form from_bilinear(const Matrix& b);
    // Scalar form equal to the basis monomial e^{idx} (idx increasing, 0-based).
    static Form monomial(std::size_t dim, const Indices& idx, const Rational& c = 1);
    // Vector-valued form whose r-th component is components[r].
    static Form stack(const std::vector<Form>& components);

    std::size_t dim() const { return n_; }
    std::size_t degree() const { return k_; }
    std::size_t target() const { return m_; }

    // Value on basis vectors in any order; zero on repeated indices.
    Vector at(const Indices& idx) const;
    Rational scalar_at(const Indices& idx) const;
    void set(const Indices& increasing, const Vector& value);
    void set(const Indices& increasing, const Rational& value);

    Vector evaluate(const std::vector<Vector>& args) const;
    Rational evaluate_scalar(const std::vector<Vector>& args) const;

    Form component(std::size_t r) const;
    bool is_zero() const;
    // Visits every increasing index tuple with its value.
    void for_each(const std::function<void(const Indices&, const Vector&)>& f) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& s, Form f);
    friend bool operator==(const Form&, const Form&) = default;

private:
    std::size_t slot(const Indices& increasing) const;

    std::size_t n_, k_, m_;
    std::vector<Rational> c_;
};

// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<Indices> increasing_tuples(std::size_t n, std::size_t k);

Form wedge(const Form& a, const Form& b);  // a scalar, b of any target
Form ce_differential(const LieAlgebra& l, const Form& w);
bool is_cocycle(const LieAlgebra& l, const Form& w);
// (v ⌟ w)(x_1, ...) = w(v, x_1, ...)
Form interior(const Vector& v, const Form& w);
// (B^* w)(f_1, ...) = w(B f_1, ...); B is n x n' for a form on Q^n.
Form pullback(const Form& w, const Matrix& b);
// Composes the target with a linear map: (M w)(x...) = M (w(x...)).
Form apply_to_target(const Matrix& m, const Form& w);

}  // namespace contactlie
