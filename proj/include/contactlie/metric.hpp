#pragma once

#include "contactlie/linalg.hpp"

namespace contactlie {

// Positive definite symmetric bilinear form; the inverse is cached.
class Metric {
public:
    // Throws PreconditionError "metric-not-symmetric" / "metric-not-positive".
    explicit Metric(Matrix g);
    static Metric identity(std::size_t n) { return Metric(Matrix::identity(n)); }

    std::size_t dim() const { return g_.rows(); }
    const Matrix& matrix() const { return g_; }
    const Matrix& inverse() const { return inv_; }
    Rational operator()(const Vector& x, const Vector& y) const;
    Vector lower(const Vector& v) const { return g_ * v; }
    Vector raise(const Vector& covector) const { return inv_ * covector; }

    friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_; }

private:
    Matrix g_;
    Matrix inv_;
};

}  // namespace contactlie
