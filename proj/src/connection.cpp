#include "contactlie/connection.hpp"

#include "contactlie/errors.hpp"

#include <stdexcept>

namespace contactlie {

Connection::Connection(std::vector<Matrix> coeff) : n_(std::move(coeff)) {
    for (const auto& m : n_)
        if (m.rows() != n_.size() || m.cols() != n_.size()) throw std::invalid_argument("connection coefficient shape");
}

Matrix Connection::along(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) m += x[i] * n_[i];
    return m;
}

bool Connection::is_metric(const Metric& g) const {
    for (const auto& m : n_)
        if (!(m.transpose() * g.matrix() + g.matrix() * m).is_zero()) return false;
    return true;
}

namespace {

// Connection from lowered values w(i, j, l) = g(nabla_{e_i} e_j, e_l).
template <typename F>
Connection from_lowered(std::size_t n, const Metric& g, F lowered) {
    std::vector<Matrix> coeff;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vector w(n);
            for (std::size_t l = 0; l < n; ++l) w[l] = lowered(i, j, l);
            Vector v = g.raise(w);
            for (std::size_t r = 0; r < n; ++r) m(r, j) = v[r];
        }
        coeff.push_back(std::move(m));
    }
    return Connection(std::move(coeff));
}

}  // namespace

Connection levi_civita(const LieAlgebra& l, const Metric& g) {
    std::size_t n = l.dim();
    const Matrix& gm = g.matrix();
    auto gb = [&](std::size_t a, std::size_t b, std::size_t c) { return dot(l.bracket_basis(a, b), gm.column(c)); };
    Connection nabla = from_lowered(n, g, [&](std::size_t i, std::size_t j, std::size_t k) {
        return (gb(i, j, k) - gb(j, k, i) + gb(k, i, j)) / Rational(2);
    });
    if (!nabla.is_metric(g)) throw InternalError("Levi-Civita connection is not metric");
    auto t = torsion_form(l, nabla, g);
    if (!t.form || !t.form->is_zero()) throw InternalError("Levi-Civita connection has torsion");
    return nabla;
}

Connection with_skew_torsion(const Connection& nabla_g, const Form& torsion, const Metric& g) {
    std::size_t n = nabla_g.dim();
    if (torsion.degree() != 3 || torsion.target() != 1 || torsion.dim() != n)
        throw PreconditionError("torsion-not-3-form", "skew torsion must be a scalar 3-form");
    std::vector<Matrix> coeff;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = nabla_g.coeff(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector w(n);
            for (std::size_t k = 0; k < n; ++k) w[k] = torsion.scalar_at({i, j, k}) / Rational(2);
            Vector v = g.raise(w);
            for (std::size_t r = 0; r < n; ++r) m(r, j) += v[r];
        }
        coeff.push_back(std::move(m));
    }
    return Connection(std::move(coeff));
}

Connection bismut_like(const LieAlgebra& l, const Metric& g) {
    const Matrix& gm = g.matrix();
    return from_lowered(l.dim(), g, [&](std::size_t i, std::size_t j, std::size_t k) {
        return -dot(gm.column(i), l.bracket_basis(j, k));
    });
}

TorsionResult torsion_form(const LieAlgebra& l, const Connection& nabla, const Metric& g) {
    std::size_t n = l.dim();
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = nabla.coeff(i).column(j) - nabla.coeff(j).column(i) - l.bracket_basis(i, j);
            Vector low = g.lower(v);
            for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = low[k];
        }
    TorsionResult out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t[(i * n + j) * n + k] != -t[(i * n + k) * n + j]) {
                    out.witness = std::array<std::size_t, 3>{i + 1, j + 1, k + 1};
                    return out;
                }
    Form f(n, 3);
    for (const auto& idx : increasing_tuples(n, 3)) f.set(idx, t[(idx[0] * n + idx[1]) * n + idx[2]]);
    out.form = f;
    return out;
}

std::vector<Matrix> covariant_derivative(const Connection& nabla, const Endomorphism& a) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < nabla.dim(); ++i) out.push_back(nabla.coeff(i) * a - a * nabla.coeff(i));
    return out;
}

std::vector<Vector> covariant_derivative_vector(const Connection& nabla, const Vector& v) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < nabla.dim(); ++i) out.push_back(nabla.coeff(i) * v);
    return out;
}

std::vector<Vector> covariant_derivative_covector(const Connection& nabla, const Vector& eta) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < nabla.dim(); ++i) out.push_back(-row_times(eta, nabla.coeff(i)));
    return out;
}

std::vector<Form> covariant_derivative(const Connection& nabla, const Form& w) {
    std::size_t n = nabla.dim(), k = w.degree();
    if (w.dim() != n) throw std::invalid_argument("covariant_derivative: dimension mismatch");
    std::vector<Form> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& m = nabla.coeff(i);
        Form d(n, k, w.target());
        for (const auto& idx : increasing_tuples(n, k)) {
            Vector acc(w.target());
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const Rational& f = m(c, idx[r]);
                    if (f.is_zero()) continue;
                    Indices sub = idx;
                    sub[r] = c;
                    Vector val = w.at(sub);
                    if (!is_zero(val)) acc = acc - f * val;
                }
            d.set(idx, acc);
        }
        out.push_back(std::move(d));
    }
    return out;
}

bool CurvatureTensor::is_zero() const {
    for (const auto& m : r_)
        if (!m.is_zero()) return false;
    return true;
}

CurvatureTensor curvature(const LieAlgebra& l, const Connection& nabla) {
    std::size_t n = l.dim();
    std::vector<Matrix> r(n * n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix m = nabla.coeff(i) * nabla.coeff(j) - nabla.coeff(j) * nabla.coeff(i) - nabla.along(l.bracket_basis(i, j));
            r[j * n + i] = -m;
            r[i * n + j] = std::move(m);
        }
    return CurvatureTensor(n, std::move(r));
}

Matrix ricci(const CurvatureTensor& r, const Metric& g) {
    std::size_t n = r.dim();
    const Matrix& gi = g.inverse();
    Matrix ric(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            Matrix low = g.matrix() * r.at(a, x);  // (b, B) entry: g(R(e_a, e_x) e_B, e_b)
            for (std::size_t b = 0; b < n; ++b) {
                if (gi(a, b).is_zero()) continue;
                for (std::size_t y = 0; y < n; ++y)
                    if (!low(b, y).is_zero()) ric(x, y) += gi(a, b) * low(b, y);
            }
        }
    return ric;
}

bool pair_symmetry(const CurvatureTensor& r, const Metric& g) {
    std::size_t n = r.dim();
    std::vector<Matrix> low;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) low.push_back(g.matrix() * r.at(i, j));
    // low[i*n+j](l, k) = g(R(e_i, e_j) e_k, e_l)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (low[i * n + j](l, k) != low[k * n + l](j, i)) return false;
    return true;
}

bool is_parallel_torsion(const LieAlgebra& l, const Connection& nabla, const Metric& g) {
    auto t = torsion_form(l, nabla, g);
    if (!t.form) throw PreconditionError("torsion-not-skew", "the connection does not have totally skew torsion");
    for (const auto& d : covariant_derivative(nabla, *t.form))
        if (!d.is_zero()) return false;
    return true;
}

bool is_canonical_connection(const LieAlgebra& l, const Almost3Contact& t, const Metric& g, const Connection& nabla,
                             const Rational& beta) {
    std::size_t n = l.dim();
    if (!nabla.is_metric(g) || !torsion_form(l, nabla, g).form) return false;
    std::array<std::vector<Matrix>, 3> dphi;
    std::array<std::vector<Vector>, 3> dxi, deta;
    for (std::size_t i = 0; i < 3; ++i) {
        dphi[i] = covariant_derivative(nabla, t.s[i].phi);
        dxi[i] = covariant_derivative_vector(nabla, t.s[i].xi);
        deta[i] = covariant_derivative_covector(nabla, t.s[i].eta);
    }
    for (const auto& pm : kEvenPermutations) {
        const auto &sj = t.s[pm[1]], &sk = t.s[pm[2]];
        for (std::size_t a = 0; a < n; ++a) {
            Rational ck = beta * sk.eta[a], cj = beta * sj.eta[a];
            if (dphi[pm[0]][a] != ck * sj.phi - cj * sk.phi) return false;
            if (dxi[pm[0]][a] != ck * sj.xi - cj * sk.xi) return false;
            if (deta[pm[0]][a] != ck * sj.eta - cj * sk.eta) return false;
        }
    }
    if (center(l).contains(vertical_space(t)) && !(nabla == bismut_like(l, g)))
        throw InternalError("canonical connection differs from the g(nabla_X Y, Z) = -g(X, [Y, Z]) connection");
    return true;
}

}  // namespace contactlie
