#include "contactlie/metric.hpp"

#include "contactlie/errors.hpp"

namespace contactlie {

Metric::Metric(Matrix g) : g_(std::move(g)) {
    if (!is_symmetric(g_)) throw PreconditionError("metric-not-symmetric", "g must be a symmetric square matrix");
    for (const auto& minor : leading_principal_minors(g_))
        if (minor.sign() <= 0) throw PreconditionError("metric-not-positive", "a leading principal minor is not positive");
    inv_ = *contactlie::inverse(g_);
}

Rational Metric::operator()(const Vector& x, const Vector& y) const { return dot(x, g_ * y); }

}  // namespace contactlie
