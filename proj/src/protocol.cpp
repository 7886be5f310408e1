#include "qot/protocol.hpp"

#include <sstream>
#include <string>

#include "qot/particle.hpp"

namespace qot {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Lane used to derive the loss stream from the Alice seed.
constexpr std::uint64_t kChannelLane = 0x1055;

} // namespace

RoundLimitExceeded::RoundLimitExceeded(std::uint32_t rounds)
    : std::runtime_error("delivery failed in all " + std::to_string(rounds) +
                         " rounds"),
      rounds_(rounds) {}

std::string Transcript::to_text() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

void Transcript::write(std::ostream& out) const {
    for (const TranscriptEntry& entry : entries) {
        out << entry.round << ' '
            << (entry.direction == Direction::AliceToBob ? "A->B" : "B->A")
            << ' ';
        std::visit(
            overloaded{
                [&](const ParticleTransfer& m) {
                    out << "particle_transfer pair=" << m.pair_id;
                },
                [&](const SuccessQuery&) { out << "success_query"; },
                [&](const SuccessReply& m) {
                    out << "success_reply ok=" << (m.ok ? "true" : "false");
                },
                [&](const BasisReveal& m) {
                    out << "basis_reveal basis=" << basis_letter(m.basis);
                },
            },
            entry.message);
        out << '\n';
    }
}

SessionResult run_session(OTBit lambda, const Strategy& strategy,
                          const ChannelConfig& channel,
                          std::uint64_t alice_seed, std::uint64_t bob_seed) {
    if (!(channel.loss_probability >= 0.0 && channel.loss_probability < 1.0))
        throw std::invalid_argument("loss probability must be in [0, 1)");
    if (channel.max_rounds == 0)
        throw std::invalid_argument("max_rounds must be at least 1");

    RandomStream alice_rng(alice_seed);
    RandomStream bob_rng(bob_seed);
    RandomStream channel_rng = RandomStream(alice_seed).split(kChannelLane);

    BobAgent bob(strategy);
    Transcript transcript;
    transcript.entries.reserve(8);

    for (std::uint32_t round = 1; round <= channel.max_rounds; ++round) {
        // Fresh randomness every attempt: basis first, then sign pattern.
        const Basis basis = sample_basis(alice_rng);
        const ParticlePair pair = prepare(lambda, basis, alice_rng);

        transcript.entries.push_back(
            {round, Direction::AliceToBob, ParticleTransfer{round}});

        std::optional<Particle> p1(std::in_place, pair.first());
        std::optional<Particle> p2(std::in_place, pair.second());
        if (channel_rng.bernoulli(channel.loss_probability))
            p1.reset();
        if (channel_rng.bernoulli(channel.loss_probability))
            p2.reset();

        const bool ok = bob.receive(std::move(p1), std::move(p2), bob_rng);

        transcript.entries.push_back(
            {round, Direction::AliceToBob, SuccessQuery{}});
        transcript.entries.push_back(
            {round, Direction::BobToAlice, SuccessReply{ok}});

        if (!ok)
            continue;

        transcript.entries.push_back(
            {round, Direction::AliceToBob, BasisReveal{basis}});
        const BobConclusion conclusion = bob.conclude(basis, bob_rng);
        return SessionResult{lambda,
                             basis,
                             conclusion.axis_matched,
                             conclusion.inferred,
                             conclusion.knows,
                             round,
                             std::move(transcript)};
    }
    throw RoundLimitExceeded(channel.max_rounds);
}

} // namespace qot
