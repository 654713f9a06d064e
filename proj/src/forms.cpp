#include "contactlie/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace contactlie {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(Indices& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

void tuples_rec(std::size_t n, std::size_t k, std::size_t start, Indices& cur, std::vector<Indices>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        tuples_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Indices> increasing_tuples(std::size_t n, std::size_t k) {
    std::vector<Indices> out;
    Indices cur;
    tuples_rec(n, k, 0, cur, out);
    return out;
}

Form::Form(std::size_t dim, std::size_t degree, std::size_t target)
    : n_(dim), k_(degree), m_(target), c_(binom(dim, degree) * target) {
    if (target == 0) throw std::invalid_argument("form target dimension must be positive");
}

Form Form::covector(const Vector& eta) {
    Form f(eta.size(), 1);
    for (std::size_t i = 0; i < eta.size(); ++i) f.c_[i] = eta[i];
    return f;
}

Form Form::from_bilinear(const Matrix& b) {
    if (!b.is_square()) throw std::invalid_argument("from_bilinear: matrix not square");
    Form f(b.rows(), 2);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (!b(i, i).is_zero()) throw std::invalid_argument("from_bilinear: matrix not antisymmetric");
        for (std::size_t j = i + 1; j < b.rows(); ++j) {
            if (b(i, j) != -b(j, i)) throw std::invalid_argument("from_bilinear: matrix not antisymmetric");
            f.set({i, j}, b(i, j));
        }
    }
    return f;
}

Form Form::monomial(std::size_t dim, const Indices& idx, const Rational& c) {
    Form f(dim, idx.size());
    f.set(idx, c);
    return f;
}

Form Form::stack(const std::vector<Form>& components) {
    if (components.empty()) throw std::invalid_argument("stack: no components");
    const Form& f0 = components[0];
    Form out(f0.n_, f0.k_, components.size());
    for (std::size_t r = 0; r < components.size(); ++r) {
        const Form& f = components[r];
        if (f.n_ != f0.n_ || f.k_ != f0.k_ || f.m_ != 1) throw std::invalid_argument("stack: incompatible components");
        for (std::size_t s = 0; s < f.c_.size(); ++s) out.c_[s * out.m_ + r] = f.c_[s];
    }
    return out;
}

std::size_t Form::slot(const Indices& inc) const {
    // Colexicographic rank of the tuple.
    std::size_t r = 0;
    for (std::size_t t = 0; t < inc.size(); ++t) {
        if (inc[t] >= n_) throw std::out_of_range("form index out of range");
        r += binom(inc[t], t + 1);
    }
    return r;
}

Vector Form::at(const Indices& idx) const {
    if (idx.size() != k_) throw std::invalid_argument("form evaluated with wrong arity");
    Indices s = idx;
    int sign = sort_with_sign(s);
    Vector v(m_);
    if (sign == 0) return v;
    std::size_t base = slot(s) * m_;
    for (std::size_t r = 0; r < m_; ++r) v[r] = sign > 0 ? c_[base + r] : -c_[base + r];
    return v;
}

Rational Form::scalar_at(const Indices& idx) const {
    if (m_ != 1) throw std::invalid_argument("scalar_at on a vector-valued form");
    return at(idx)[0];
}

void Form::set(const Indices& inc, const Vector& value) {
    if (inc.size() != k_ || value.size() != m_) throw std::invalid_argument("form set: shape mismatch");
    for (std::size_t t = 1; t < inc.size(); ++t)
        if (inc[t - 1] >= inc[t]) throw std::invalid_argument("form set: indices not increasing");
    std::size_t base = slot(inc) * m_;
    for (std::size_t r = 0; r < m_; ++r) c_[base + r] = value[r];
}

void Form::set(const Indices& inc, const Rational& value) { set(inc, Vector{value}); }

Vector Form::evaluate(const std::vector<Vector>& args) const {
    if (args.size() != k_) throw std::invalid_argument("form evaluated with wrong arity");
    Vector out(m_);
    // sum over increasing I of w_I * det(args restricted to rows I)
    for_each([&](const Indices& idx, const Vector& val) {
        if (contactlie::is_zero(val)) return;
        Matrix sub(k_, k_);
        for (std::size_t a = 0; a < k_; ++a)
            for (std::size_t b = 0; b < k_; ++b) sub(a, b) = args[b][idx[a]];
        Rational d = determinant(std::move(sub));
        if (!d.is_zero()) out += d * val;
    });
    return out;
}

Rational Form::evaluate_scalar(const std::vector<Vector>& args) const {
    if (m_ != 1) throw std::invalid_argument("evaluate_scalar on a vector-valued form");
    return evaluate(args)[0];
}

Form Form::component(std::size_t r) const {
    Form f(n_, k_);
    for (std::size_t s = 0; s < f.c_.size(); ++s) f.c_[s] = c_[s * m_ + r];
    return f;
}

bool Form::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

void Form::for_each(const std::function<void(const Indices&, const Vector&)>& f) const {
    for (const auto& idx : increasing_tuples(n_, k_)) {
        std::size_t base = slot(idx) * m_;
        f(idx, Vector(c_.begin() + static_cast<long>(base), c_.begin() + static_cast<long>(base + m_)));
    }
}

Form& Form::operator+=(const Form& o) {
    if (n_ != o.n_ || k_ != o.k_ || m_ != o.m_) throw std::invalid_argument("form sum: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (n_ != o.n_ || k_ != o.k_ || m_ != o.m_) throw std::invalid_argument("form difference: shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Form operator*(const Rational& s, Form f) {
    for (auto& x : f.c_) x *= s;
    return f;
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    if (a.target() != 1) throw std::invalid_argument("wedge: left factor must be scalar");
    std::size_t n = a.dim(), p = a.degree(), q = b.degree();
    Form out(n, p + q, b.target());
    if (p + q > n) return out;
    // (a ∧ b)_K = sum over splittings K = I ⊔ J of sign(I, J) a_I b_J.
    for (const auto& k : increasing_tuples(n, p + q)) {
        Vector acc(b.target());
        for (const auto& pos : increasing_tuples(p + q, p)) {
            Indices i, j;
            std::vector<bool> in_i(p + q, false);
            for (auto t : pos) in_i[t] = true;
            for (std::size_t t = 0; t < p + q; ++t) (in_i[t] ? i : j).push_back(k[t]);
            Rational av = a.scalar_at(i);
            if (av.is_zero()) continue;
            Vector bv = b.at(j);
            if (is_zero(bv)) continue;
            Indices concat = i;
            concat.insert(concat.end(), j.begin(), j.end());
            int inversions = 0;
            for (std::size_t x = 0; x < concat.size(); ++x)
                for (std::size_t y = x + 1; y < concat.size(); ++y)
                    if (concat[x] > concat[y]) ++inversions;
            Rational s = inversions % 2 ? -av : av;
            acc += s * bv;
        }
        out.set(k, acc);
    }
    return out;
}

Form ce_differential(const LieAlgebra& l, const Form& w) {
    std::size_t n = l.dim(), k = w.degree();
    if (w.dim() != n) throw std::invalid_argument("ce_differential: dimension mismatch");
    if (k >= n) throw std::invalid_argument("ce_differential: degree must be below the dimension");
    Form out(n, k + 1, w.target());
    // dw(x_0..x_k) = sum_{a<b} (-1)^{a+b} w([x_a, x_b], x_0..^a..^b..x_k)
    for (const auto& idx : increasing_tuples(n, k + 1)) {
        Vector acc(w.target());
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = a + 1; b <= k; ++b) {
                Vector br = l.bracket_basis(idx[a], idx[b]);
                if (is_zero(br)) continue;
                Indices rest;
                for (std::size_t t = 0; t <= k; ++t)
                    if (t != a && t != b) rest.push_back(idx[t]);
                Vector val(w.target());
                for (std::size_t c = 0; c < n; ++c) {
                    if (br[c].is_zero()) continue;
                    Indices full{c};
                    full.insert(full.end(), rest.begin(), rest.end());
                    Vector wv = w.at(full);
                    if (!is_zero(wv)) val += br[c] * wv;
                }
                acc += ((a + b) % 2 ? Rational(-1) : Rational(1)) * val;
            }
        out.set(idx, acc);
    }
    return out;
}

bool is_cocycle(const LieAlgebra& l, const Form& w) {
    if (w.degree() >= l.dim()) return true;
    return ce_differential(l, w).is_zero();
}

Form interior(const Vector& v, const Form& w) {
    if (w.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
    if (v.size() != w.dim()) throw std::invalid_argument("interior: dimension mismatch");
    std::size_t n = w.dim();
    Form out(n, w.degree() - 1, w.target());
    for (const auto& idx : increasing_tuples(n, w.degree() - 1)) {
        Vector acc(w.target());
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c].is_zero()) continue;
            Indices full{c};
            full.insert(full.end(), idx.begin(), idx.end());
            acc += v[c] * w.at(full);
        }
        out.set(idx, acc);
    }
    return out;
}

Form pullback(const Form& w, const Matrix& b) {
    if (b.rows() != w.dim()) throw std::invalid_argument("pullback: shape mismatch");
    std::size_t n2 = b.cols();
    Form out(n2, w.degree(), w.target());
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n2; ++j) cols.push_back(b.column(j));
    for (const auto& idx : increasing_tuples(n2, w.degree())) {
        std::vector<Vector> args;
        for (auto i : idx) args.push_back(cols[i]);
        out.set(idx, w.evaluate(args));
    }
    return out;
}

Form apply_to_target(const Matrix& m, const Form& w) {
    if (m.cols() != w.target()) throw std::invalid_argument("apply_to_target: shape mismatch");
    Form out(w.dim(), w.degree(), m.rows());
    w.for_each([&](const Indices& idx, const Vector& v) { out.set(idx, m * v); });
    return out;
}

}  // namespace contactlie
