#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace contactlie {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
    // Block diagonal matrix with the given blocks in order.
    static IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    bool is_diagonal() const;
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> a_;
};

mpz_class determinant(const IntegerMatrix& m);
IntegerMatrix power(const IntegerMatrix& m, unsigned long e);
// Inverse of a unimodular matrix; throws PreconditionError "not-unimodular" otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct SmithForm {
    IntegerMatrix s;  // diagonal, nonnegative, d_1 | d_2 | ...
    IntegerMatrix u;  // unimodular, rows x rows
    IntegerMatrix v;  // unimodular, cols x cols
};
// U M V = S, checked exactly before returning.
SmithForm smith_normal_form(const IntegerMatrix& m);

// Companion form [[0, -1], [1, t]] with t = 2cos(2 pi / m) when that is an integer;
// identity for m = 1 and -identity for m = 2.
std::optional<IntegerMatrix> rotation_integer_form(unsigned long m);

struct AbelianizationResult {
    std::vector<mpz_class> invariant_factors;  // each > 1, d_1 | d_2 | ...
    std::size_t free_rank = 0;
    std::size_t b1 = 0;
    friend bool operator==(const AbelianizationResult&, const AbelianizationResult&) = default;
    std::string str() const;  // e.g. "Z^4 + Z_2^3"
};

// Abelian group with generators the columns and relations the rows of m.
AbelianizationResult abelian_group_from_relations(const IntegerMatrix& relations);

// Finite group F = <gens | relators> acting on Z^d; Gamma = F ⋉ Z^d.
// A word lists signed generator indices: +k is generator k (1-based), -k its inverse.
struct SemidirectPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
    std::size_t translation_rank = 0;
    std::vector<IntegerMatrix> action;  // one d x d matrix per generator
};

// Throws PreconditionError "malformed-presentation" / "not-unimodular" / "relator-acts-nontrivially".
AbelianizationResult semidirect_abelianization(const SemidirectPresentation& p);

// Z_m ⋉_E Z^{4n} with E made of 2n rotation blocks. Throws PreconditionError "inadmissible-m".
SemidirectPresentation gamma_presentation(unsigned long m, std::size_t n);
AbelianizationResult gamma_abelianization(unsigned long m, std::size_t n);

// <x, y | x^4, x^2 y^-2, y x y^-1 x> acting on Z^{4n} by x -> J_1, y -> J_2 on each block of four.
SemidirectPresentation q8_presentation(std::size_t n);

}  // namespace contactlie
