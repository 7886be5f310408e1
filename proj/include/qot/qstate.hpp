#pragma once

#include <numbers>
#include <stdexcept>

#include "qot/random_stream.hpp"

namespace qot {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kThreeHalfPi = 3.0 * kHalfPi;

// Spin direction of one prepared particle. Every state in this protocol
// lies in the equatorial plane along one of the four directions
// 0, pi/2, pi, 3pi/2; anything else is a construction error. The angle is
// compared bit-exactly against constants built from the platform pi.
class PreparationAngle {
public:
    constexpr explicit PreparationAngle(double theta_radians)
        : theta_(checked(theta_radians)) {}

    constexpr double radians() const noexcept { return theta_; }

    friend constexpr bool operator==(const PreparationAngle&,
                                     const PreparationAngle&) = default;

private:
    static constexpr double checked(double t) {
        if (t == 0.0 || t == kHalfPi || t == kPi || t == kThreeHalfPi)
            return t;
        throw std::invalid_argument(
            "preparation angle must be exactly 0, pi/2, pi, or 3*pi/2");
    }

    double theta_;
};

inline constexpr PreparationAngle kSpinPlusX{0.0};
inline constexpr PreparationAngle kSpinPlusY{kHalfPi};
inline constexpr PreparationAngle kSpinMinusX{kPi};
inline constexpr PreparationAngle kSpinMinusY{kThreeHalfPi};

// Measurement axis in the equatorial plane, at angle alpha from +x,
// normalized into [0, 2pi) on construction.
class MeasurementAxis {
public:
    explicit MeasurementAxis(double alpha_radians) noexcept;

    double radians() const noexcept { return alpha_; }

    MeasurementAxis rotated(double delta) const noexcept {
        return MeasurementAxis(alpha_ + delta);
    }

    friend bool operator==(const MeasurementAxis&,
                           const MeasurementAxis&) = default;

private:
    double alpha_;
};

// Result of one projective spin measurement: +1 = spin found along the
// measurement axis, -1 = opposite.
enum class Outcome : int { Aligned = 1, AntiAligned = -1 };

inline constexpr int sign(Outcome o) noexcept { return static_cast<int>(o); }

// Probability that a spin prepared at angle theta is found aligned with a
// measurement axis at angle alpha: cos^2((alpha - theta)/2), evaluated as
// (1 + cos(alpha - theta))/2. Total in theta, so callers with arbitrary
// (non-protocol) angles can reuse it.
double aligned_probability(double theta, double alpha) noexcept;
double aligned_probability(const PreparationAngle& theta,
                           const MeasurementAxis& axis) noexcept;

// One projective measurement. Consumes exactly one draw from rng, so
// transcripts are replayable from the seeds alone.
Outcome sample_measurement(double theta, const MeasurementAxis& axis,
                           RandomStream& rng) noexcept;
Outcome sample_measurement(const PreparationAngle& theta,
                           const MeasurementAxis& axis,
                           RandomStream& rng) noexcept;

} // namespace qot
