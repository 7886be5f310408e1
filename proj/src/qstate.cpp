#include "qot/qstate.hpp"

#include <cmath>

namespace qot {

MeasurementAxis::MeasurementAxis(double alpha_radians) noexcept {
    double a = std::fmod(alpha_radians, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    if (a >= kTwoPi) // fmod result just below 0 can round up to 2*pi
        a = 0.0;
    alpha_ = a;
}

double aligned_probability(double theta, double alpha) noexcept {
    return 0.5 * (1.0 + std::cos(alpha - theta));
}

double aligned_probability(const PreparationAngle& theta,
                           const MeasurementAxis& axis) noexcept {
    return aligned_probability(theta.radians(), axis.radians());
}

Outcome sample_measurement(double theta, const MeasurementAxis& axis,
                           RandomStream& rng) noexcept {
    const double p = aligned_probability(theta, axis.radians());
    return rng.bernoulli(p) ? Outcome::Aligned : Outcome::AntiAligned;
}

Outcome sample_measurement(const PreparationAngle& theta,
                           const MeasurementAxis& axis,
                           RandomStream& rng) noexcept {
    return sample_measurement(theta.radians(), axis, rng);
}

} // namespace qot
