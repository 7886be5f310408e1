#pragma once

#include "qot/qstate.hpp"
#include "qot/random_stream.hpp"

namespace qot {

// The transferred bit, as a sign. Minus plays the role of classical bit 0.
enum class OTBit : int { Plus = 1, Minus = -1 };

inline constexpr int sign(OTBit b) noexcept { return static_cast<int>(b); }

inline constexpr const char* to_cstr(OTBit b) noexcept {
    return b == OTBit::Plus ? "+1" : "-1";
}

// Axis pair carrying the bit: horizontal covers the directions {0, pi},
// vertical covers {pi/2, 3pi/2}.
enum class Basis { Horizontal, Vertical };

inline constexpr Basis other(Basis b) noexcept {
    return b == Basis::Horizontal ? Basis::Vertical : Basis::Horizontal;
}

inline constexpr char basis_letter(Basis b) noexcept {
    return b == Basis::Horizontal ? 'H' : 'V';
}

// Per-particle spin sign along its encoding axis: +1 for directions
// {0, pi/2}, -1 for {pi, 3pi/2}.
enum class SpinSign : int { Plus = 1, Minus = -1 };

inline constexpr int sign(SpinSign s) noexcept { return static_cast<int>(s); }

constexpr SpinSign spin_sign(const PreparationAngle& theta) noexcept {
    const double t = theta.radians();
    return (t == 0.0 || t == kHalfPi) ? SpinSign::Plus : SpinSign::Minus;
}

// Sign of a measurement outcome taken along a basis 0-direction, read as a
// spin sign (aligned with the {0, pi/2} side means +1).
inline constexpr SpinSign spin_sign(Outcome o) noexcept {
    return o == Outcome::Aligned ? SpinSign::Plus : SpinSign::Minus;
}

// Basis of a preparation direction: {0, pi} -> horizontal, else vertical.
constexpr Basis axis_of(const PreparationAngle& theta) noexcept {
    const double t = theta.radians();
    return (t == 0.0 || t == kPi) ? Basis::Horizontal : Basis::Vertical;
}

// The preparation direction with the given sign on the given basis.
constexpr PreparationAngle direction(Basis basis, SpinSign s) noexcept {
    if (basis == Basis::Horizontal)
        return s == SpinSign::Plus ? kSpinPlusX : kSpinMinusX;
    return s == SpinSign::Plus ? kSpinPlusY : kSpinMinusY;
}

// The 0-direction of a basis as a measurement axis (0 for H, pi/2 for V).
MeasurementAxis basis_axis(Basis basis) noexcept;

// Bob's decoded bit: the product of the two measured signs.
inline constexpr OTBit decode(SpinSign b1, SpinSign b2) noexcept {
    return sign(b1) * sign(b2) > 0 ? OTBit::Plus : OTBit::Minus;
}

// Two prepared particles on a common encoding axis. The product of the two
// spin signs is the bit the pair encodes.
class ParticlePair {
public:
    // Throws std::invalid_argument if the angles lie on different axes.
    ParticlePair(PreparationAngle first, PreparationAngle second);

    const PreparationAngle& first() const noexcept { return first_; }
    const PreparationAngle& second() const noexcept { return second_; }

    Basis basis() const noexcept { return axis_of(first_); }
    OTBit encoded_bit() const noexcept {
        return decode(spin_sign(first_), spin_sign(second_));
    }

private:
    PreparationAngle first_;
    PreparationAngle second_;
};

// Draw an encoding basis: horizontal with probability 1/2. One draw.
Basis sample_basis(RandomStream& rng) noexcept;

// Alice's preparation: of the two sign patterns whose product is lambda,
// pick either with probability 1/2 (the first particle's sign is the coin).
// Consumes exactly one draw.
ParticlePair prepare(OTBit lambda, Basis basis, RandomStream& rng);

} // namespace qot
