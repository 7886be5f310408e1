#pragma once

#include <stdexcept>

#include "qot/qstate.hpp"

namespace qot {

// A particle in flight. The receiving side gets no access to the
// preparation angle: the only way to extract information is measure(),
// which performs one projective measurement and consumes the particle.
// Copying is deleted (no cloning); moving marks the source as spent.
class Particle {
public:
    explicit Particle(PreparationAngle theta) noexcept : theta_(theta) {}

    Particle(const Particle&) = delete;
    Particle& operator=(const Particle&) = delete;

    Particle(Particle&& other) noexcept
        : theta_(other.theta_), measured_(other.measured_) {
        other.measured_ = true;
    }

    Particle& operator=(Particle&& other) noexcept {
        theta_ = other.theta_;
        measured_ = other.measured_;
        other.measured_ = true;
        return *this;
    }

    bool measured() const noexcept { return measured_; }

    // One measurement along the given axis; one rng draw.
    // Throws std::logic_error on a second attempt.
    Outcome measure(const MeasurementAxis& axis, RandomStream& rng) {
        if (measured_)
            throw std::logic_error("particle already measured");
        measured_ = true;
        return sample_measurement(theta_, axis, rng);
    }

private:
    PreparationAngle theta_;
    bool measured_ = false;
};

} // namespace qot
