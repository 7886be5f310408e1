#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "qot/encoding.hpp"
#include "qot/particle.hpp"

namespace qot {

// Bob-side measurement plans. A Strategy value is immutable configuration
// and safe to share across sessions and threads; per-session execution
// state lives in BobAgent.
//
//  Honest       one axis (x or y, fair coin) for both particles, decode
//               only when the revealed basis matches, blind guess otherwise.
//  FixedAngles  measure particle 1 along alpha and particle 2 along beta
//               before the reveal; infer the bit as the outcome product.
//  Storage      keep the particles unmeasured until the reveal, then
//               measure both along the revealed basis 0-direction.
struct Honest {};

struct FixedAngles {
    MeasurementAxis alpha;
    MeasurementAxis beta;
};

struct Storage {};

using Strategy = std::variant<Honest, FixedAngles, Storage>;

const char* strategy_name(const Strategy& strategy) noexcept;

// The inferred bit of a cheating measurement: the product of the two
// outcome signs (aligned = +1, anti-aligned = -1).
inline constexpr OTBit cheating_inference(Outcome first,
                                          Outcome second) noexcept {
    return sign(first) * sign(second) > 0 ? OTBit::Plus : OTBit::Minus;
}

// What Bob walks away with after the basis reveal.
struct BobConclusion {
    bool knows = false;            // self-reported "I obtained the bit"
    std::optional<OTBit> inferred; // lambda'; a guess when !knows
    bool axis_matched = false;     // measured in the revealed basis
};

// Per-session executor of a Strategy. Interacts with particles only
// through Particle::measure; preparation angles are never read. Owns no
// randomness of its own.
class BobAgent {
public:
    explicit BobAgent(Strategy strategy) : strategy_(std::move(strategy)) {}

    // One delivery attempt. Discards any state from a previous attempt.
    // Returns Bob's success report: false when either particle was lost,
    // true once the strategy has what it needs from this round.
    bool receive(std::optional<Particle> first, std::optional<Particle> second,
                 RandomStream& rng);

    // Post-processing once Alice reveals the encoding basis.
    // Throws std::logic_error if no delivery succeeded beforehand.
    BobConclusion conclude(Basis revealed, RandomStream& rng);

private:
    Strategy strategy_;
    std::optional<Basis> honest_axis_; // Honest: this round's x/y choice
    std::optional<std::pair<Outcome, Outcome>> outcomes_;
    std::optional<std::pair<Particle, Particle>> stored_;
};

// The delayed-measurement attack on a prepared pair: measure both
// particles along the revealed basis 0-direction and decode. Recovers the
// encoded bit with certainty. Two rng draws.
OTBit storage_attack(const ParticlePair& pair, Basis revealed,
                     RandomStream& rng);

// One instance of the single-particle comparison protocol: the bit is
// carried by the spin sign of a single particle on the chosen basis.
struct CKProtocolInstance {
    OTBit bit;
    Basis basis;
    PreparationAngle theta;

    CKProtocolInstance(OTBit b, Basis bas) noexcept
        : bit(b),
          basis(bas),
          theta(direction(bas, b == OTBit::Plus ? SpinSign::Plus
                                                : SpinSign::Minus)) {}
};

// Bob's measurement of the single particle along measure_axis. One draw.
Outcome ck_run(const CKProtocolInstance& instance,
               const MeasurementAxis& measure_axis, RandomStream& rng) noexcept;

// Maximum-posterior bit once the basis is revealed, with a uniform prior
// over the two signs on the revealed axis. Posterior ties go to +1.
OTBit ck_optimal_guess(Outcome outcome, const MeasurementAxis& measure_axis,
                       Basis revealed) noexcept;

} // namespace qot
