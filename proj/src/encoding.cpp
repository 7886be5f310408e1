#include "qot/encoding.hpp"

#include <stdexcept>

namespace qot {

MeasurementAxis basis_axis(Basis basis) noexcept {
    return MeasurementAxis(basis == Basis::Horizontal ? 0.0 : kHalfPi);
}

ParticlePair::ParticlePair(PreparationAngle first, PreparationAngle second)
    : first_(first), second_(second) {
    if (axis_of(first_) != axis_of(second_))
        throw std::invalid_argument(
            "particle pair must lie on a single encoding axis");
}

Basis sample_basis(RandomStream& rng) noexcept {
    return rng.bernoulli(0.5) ? Basis::Horizontal : Basis::Vertical;
}

ParticlePair prepare(OTBit lambda, Basis basis, RandomStream& rng) {
    const SpinSign s1 = rng.bernoulli(0.5) ? SpinSign::Plus : SpinSign::Minus;
    const SpinSign s2 =
        sign(s1) * sign(lambda) > 0 ? SpinSign::Plus : SpinSign::Minus;
    return ParticlePair(direction(basis, s1), direction(basis, s2));
}

} // namespace qot
