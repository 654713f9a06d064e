#include "contactlie/lattice.hpp"

#include "contactlie/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace contactlie {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntegerMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::block_diagonal(const std::vector<IntegerMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntegerMatrix m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("integer matrix shape mismatch");
    IntegerMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// Bareiss fraction-free elimination.
mpz_class determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntegerMatrix power(const IntegerMatrix& m, unsigned long e) {
    IntegerMatrix r = IntegerMatrix::identity(m.rows());
    IntegerMatrix b = m;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    mpz_class d = determinant(m);
    if (d != 1 && d != -1) throw PreconditionError("not-unimodular", "determinant " + d.get_str());
    // The Smith form of a unimodular matrix is I, so M^{-1} = V U.
    SmithForm f = smith_normal_form(m);
    return f.v * f.u;
}

namespace {

struct Reducer {
    IntegerMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i += q row_j
    void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
    }
    // col_i += q col_j
    void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += q * v(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }

    // Moves the smallest nonzero entry of the trailing block to (t, t); false if the block is zero.
    bool place_pivot(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Clears row and column t; returns false if a smaller remainder appeared.
    bool clear_cross(std::size_t t) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a(i, t) == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
            add_row(i, t, -q);
            if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (a(t, j) == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
            add_col(j, t, -q);
            if (a(t, j) != 0) clean = false;
        }
        return clean;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    Reducer r{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
    std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        if (!r.place_pivot(t)) break;
        for (;;) {
            if (!r.clear_cross(t)) {
                r.place_pivot(t);
                continue;
            }
            // Divisibility: fold an offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (r.a(i, j) % r.a(t, t) != 0) {
                        r.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (r.a(t, t) < 0) r.negate_row(t);
    }
    if (!(r.u * m * r.v == r.a) || !r.a.is_diagonal())
        throw InternalError("Smith normal form verification failed");
    return SmithForm{r.a, r.u, r.v};
}

std::optional<IntegerMatrix> rotation_integer_form(unsigned long m) {
    if (m == 0) throw PreconditionError("parameter-out-of-range", "m must be positive");
    switch (m) {
        case 1: return IntegerMatrix::identity(2);
        case 2: return IntegerMatrix::from_rows({{-1, 0}, {0, -1}});
        case 3: return IntegerMatrix::from_rows({{0, -1}, {1, -1}});
        case 4: return IntegerMatrix::from_rows({{0, -1}, {1, 0}});
        case 6: return IntegerMatrix::from_rows({{0, -1}, {1, 1}});
        default: return std::nullopt;
    }
}

std::string AbelianizationResult::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    std::size_t i = 0;
    while (i < invariant_factors.size()) {
        std::size_t j = i;
        while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
        os << (first ? "" : " + ") << "Z_" << invariant_factors[i].get_str();
        if (j - i > 1) os << '^' << (j - i);
        first = false;
        i = j;
    }
    if (first) os << "0";
    return os.str();
}

AbelianizationResult abelian_group_from_relations(const IntegerMatrix& relations) {
    SmithForm f = smith_normal_form(relations);
    AbelianizationResult out;
    std::size_t nonzero = 0;
    std::size_t steps = std::min(relations.rows(), relations.cols());
    for (std::size_t i = 0; i < steps; ++i) {
        const mpz_class& d = f.s(i, i);
        if (d == 0) break;
        ++nonzero;
        if (d > 1) out.invariant_factors.push_back(d);
    }
    out.free_rank = relations.cols() - nonzero;
    out.b1 = out.free_rank;
    return out;
}

AbelianizationResult semidirect_abelianization(const SemidirectPresentation& p) {
    std::size_t g = p.generators.size();
    std::size_t d = p.translation_rank;
    if (p.action.size() != g) throw PreconditionError("malformed-presentation", "one action matrix per generator");
    for (std::size_t k = 0; k < g; ++k) {
        const auto& a = p.action[k];
        if (a.rows() != d || a.cols() != d)
            throw PreconditionError("malformed-presentation", "action of " + p.generators[k] + " is not d x d");
        mpz_class det = determinant(a);
        if (det != 1 && det != -1)
            throw PreconditionError("not-unimodular", "action of " + p.generators[k] + " has determinant " + det.get_str());
    }
    std::vector<IntegerMatrix> inverses;
    for (const auto& a : p.action) inverses.push_back(unimodular_inverse(a));

    IntegerMatrix rel(p.relators.size() + g * d, g + d);
    std::size_t row = 0;
    for (const auto& word : p.relators) {
        IntegerMatrix rho = IntegerMatrix::identity(d);
        for (int letter : word) {
            std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
            if (letter == 0 || k > g) throw PreconditionError("malformed-presentation", "letter out of range");
            rel(row, k - 1) += letter > 0 ? 1 : -1;
            rho = rho * (letter > 0 ? p.action[k - 1] : inverses[k - 1]);
        }
        if (!(rho == IntegerMatrix::identity(d)))
            throw PreconditionError("relator-acts-nontrivially", "relator " + std::to_string(row + 1));
        ++row;
    }
    // Coinvariants: (rho(g) - I) u = 0 for every translation u.
    for (std::size_t k = 0; k < g; ++k) {
        IntegerMatrix e = p.action[k] - IntegerMatrix::identity(d);
        for (std::size_t c = 0; c < d; ++c, ++row)
            for (std::size_t r = 0; r < d; ++r) rel(row, g + r) = e(r, c);
    }
    return abelian_group_from_relations(rel);
}

namespace {

IntegerMatrix rotation_blocks(unsigned long m, std::size_t n) {
    auto e = rotation_integer_form(m);
    if (!e) throw PreconditionError("inadmissible-m", "m must be one of 1, 2, 3, 4, 6");
    return IntegerMatrix::block_diagonal(std::vector<IntegerMatrix>(2 * n, *e));
}

}  // namespace

SemidirectPresentation gamma_presentation(unsigned long m, std::size_t n) {
    SemidirectPresentation p;
    p.generators = {"t"};
    p.relators = {std::vector<int>(m, 1)};
    p.translation_rank = 4 * n;
    p.action = {rotation_blocks(m, n)};
    return p;
}

AbelianizationResult gamma_abelianization(unsigned long m, std::size_t n) {
    if (n == 0) throw PreconditionError("parameter-out-of-range", "n must be positive");
    IntegerMatrix e = rotation_blocks(m, n);
    IntegerMatrix mm(1, 1);
    mm(0, 0) = static_cast<long>(m);
    return abelian_group_from_relations(IntegerMatrix::block_diagonal({mm, e - IntegerMatrix::identity(4 * n)}));
}

SemidirectPresentation q8_presentation(std::size_t n) {
    if (n == 0) throw PreconditionError("parameter-out-of-range", "n must be positive");
    IntegerMatrix j1 = IntegerMatrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    IntegerMatrix j2 = IntegerMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
    SemidirectPresentation p;
    p.generators = {"x", "y"};
    p.relators = {{1, 1, 1, 1}, {1, 1, -2, -2}, {2, 1, -2, 1}};
    p.translation_rank = 4 * n;
    p.action = {IntegerMatrix::block_diagonal(std::vector<IntegerMatrix>(n, j1)),
                IntegerMatrix::block_diagonal(std::vector<IntegerMatrix>(n, j2))};
    return p;
}

}  // namespace contactlie
