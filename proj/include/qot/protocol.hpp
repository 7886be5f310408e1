#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qot/adversary.hpp"
#include "qot/encoding.hpp"

namespace qot {

// Classical messages exchanged during a session. The quantum payload of a
// transfer is opaque in the classical record: only a handle appears, never
// a preparation angle.
struct ParticleTransfer {
    std::uint32_t pair_id = 0; // equals the round that produced the pair
};
struct SuccessQuery {};
struct SuccessReply {
    bool ok = false;
};
struct BasisReveal {
    Basis basis = Basis::Horizontal;
};

using Message =
    std::variant<ParticleTransfer, SuccessQuery, SuccessReply, BasisReveal>;

enum class Direction { AliceToBob, BobToAlice };

struct TranscriptEntry {
    std::uint32_t round = 0;
    Direction direction = Direction::AliceToBob;
    Message message;
};

// Ordered classical record of one session. Serialized one message per
// line, stable field order:
//   <round> <A->B|B->A> <message_name> [field=value]
struct Transcript {
    std::vector<TranscriptEntry> entries;

    std::string to_text() const;
    void write(std::ostream& out) const;
};

struct ChannelConfig {
    double loss_probability = 0.0; // per particle, independent
    std::uint32_t max_rounds = 64; // delivery attempts before giving up
};

struct SessionResult {
    OTBit lambda;                   // Alice's input
    Basis basis;                    // encoding basis of the final round
    bool bob_axis_matched = false;  // Bob measured in the revealed basis
    std::optional<OTBit> bob_inferred; // lambda', when Bob produces a guess
    bool bob_knows = false;         // Bob's self-reported "I obtained it"
    std::uint32_t rounds_used = 0;
    Transcript transcript;
};

// Raised when every one of max_rounds delivery attempts failed.
class RoundLimitExceeded : public std::runtime_error {
public:
    explicit RoundLimitExceeded(std::uint32_t rounds);
    std::uint32_t rounds() const noexcept { return rounds_; }

private:
    std::uint32_t rounds_;
};

inline Strategy honest_bob_strategy() { return Honest{}; }

// Runs one full session:
//   per round, Alice draws a fresh basis and pattern and sends the pair;
//   each particle is independently lost with loss_probability; Bob
//   measures per strategy and answers the success query; on failure Alice
//   re-prepares with new randomness; on success she reveals the basis and
//   Bob post-processes.
//
// Determinism: alice_seed drives preparation (basis then pattern, in that
// order, one draw each), a lane split off alice_seed drives channel loss
// (two draws per round), and bob_seed drives everything on Bob's side.
// Equal inputs give byte-identical transcripts.
//
// Throws RoundLimitExceeded after max_rounds failed deliveries and
// std::invalid_argument for loss outside [0,1) or max_rounds = 0.
SessionResult run_session(OTBit lambda, const Strategy& strategy,
                          const ChannelConfig& channel,
                          std::uint64_t alice_seed, std::uint64_t bob_seed);

} // namespace qot
