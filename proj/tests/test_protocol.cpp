#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include <doctest.h>

#include "qot/protocol.hpp"
#include "stat_util.hpp"

using namespace qot;

namespace {

constexpr ChannelConfig kLossFree{0.0, 8};

// Bob's axis choice in an honest session, recovered from the result.
Basis honest_axis(const SessionResult& r) {
    return r.bob_axis_matched ? r.basis : other(r.basis);
}

// Structural transcript grammar:
//   (transfer query reply(false))* transfer query reply(true) reveal
void require_grammar(const Transcript& t) {
    const auto& e = t.entries;
    REQUIRE(e.size() >= 4);
    std::size_t i = 0;
    std::uint32_t round = 0;
    while (true) {
        REQUIRE(i + 2 < e.size());
        ++round;

        REQUIRE(e[i].round == round);
        REQUIRE(e[i].direction == Direction::AliceToBob);
        const auto* transfer = std::get_if<ParticleTransfer>(&e[i].message);
        REQUIRE(transfer != nullptr);
        REQUIRE(transfer->pair_id == round);

        REQUIRE(e[i + 1].round == round);
        REQUIRE(e[i + 1].direction == Direction::AliceToBob);
        REQUIRE(std::holds_alternative<SuccessQuery>(e[i + 1].message));

        REQUIRE(e[i + 2].round == round);
        REQUIRE(e[i + 2].direction == Direction::BobToAlice);
        const auto* reply = std::get_if<SuccessReply>(&e[i + 2].message);
        REQUIRE(reply != nullptr);

        i += 3;
        if (reply->ok)
            break;
    }
    REQUIRE(i + 1 == e.size());
    REQUIRE(e[i].round == round);
    REQUIRE(e[i].direction == Direction::AliceToBob);
    REQUIRE(std::holds_alternative<BasisReveal>(e[i].message));
}

} // namespace

TEST_SUITE("protocol") {

TEST_CASE("loss-free honest sessions succeed in the first round") {
    RandomStream root(11);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const SessionResult r =
            run_session(OTBit::Plus, honest_bob_strategy(), kLossFree,
                        root.split(2 * i).seed(), root.split(2 * i + 1).seed());
        REQUIRE(r.rounds_used == 1);
        REQUIRE(r.bob_knows == r.bob_axis_matched);
        REQUIRE(r.bob_inferred.has_value());
        if (r.bob_knows)
            REQUIRE(*r.bob_inferred == OTBit::Plus);
    }
}

TEST_CASE("honest bob knows the bit half the time") {
    const std::uint64_t n = 100000;
    RandomStream root(22);
    std::uint64_t knows = 0;
    std::uint64_t blind_correct = 0;
    std::uint64_t blind_total = 0;
    std::uint64_t chose_x = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const OTBit lambda =
            (i % 2 == 0) ? OTBit::Plus : OTBit::Minus;
        const SessionResult r =
            run_session(lambda, honest_bob_strategy(), kLossFree,
                        root.split(2 * i).seed(), root.split(2 * i + 1).seed());
        if (r.bob_knows) {
            ++knows;
            REQUIRE(*r.bob_inferred == lambda);
        } else {
            ++blind_total;
            if (*r.bob_inferred == lambda)
                ++blind_correct;
        }
        if (honest_axis(r) == Basis::Horizontal)
            ++chose_x;
    }
    const double knows_rate = static_cast<double>(knows) / n;
    CHECK(std::fabs(knows_rate - 0.5) <=
          qot::test::binomial_tolerance(0.5, n));
    // mismatched rounds carry no information: blind guesses are a fair coin
    const double blind_rate =
        static_cast<double>(blind_correct) / static_cast<double>(blind_total);
    CHECK(std::fabs(blind_rate - 0.5) <=
          qot::test::binomial_tolerance(0.5, blind_total));
    // the x/y choice itself is a fair coin
    const double x_rate = static_cast<double>(chose_x) / n;
    CHECK(std::fabs(x_rate - 0.5) <= qot::test::binomial_tolerance(0.5, n));
}

TEST_CASE("transcripts follow the message grammar") {
    const ChannelConfig lossy{0.5, 64};
    RandomStream root(33);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const SessionResult r =
            run_session(OTBit::Minus, honest_bob_strategy(), lossy,
                        root.split(2 * i).seed(), root.split(2 * i + 1).seed());
        require_grammar(r.transcript);
        REQUIRE(r.rounds_used <= lossy.max_rounds);
    }
}

TEST_CASE("replay determinism: identical seeds, identical transcripts") {
    const ChannelConfig lossy{0.3, 64};
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const SessionResult a = run_session(OTBit::Plus, honest_bob_strategy(),
                                            lossy, seed, seed + 1000);
        const SessionResult b = run_session(OTBit::Plus, honest_bob_strategy(),
                                            lossy, seed, seed + 1000);
        REQUIRE(a.transcript.to_text() == b.transcript.to_text());
        REQUIRE(a.rounds_used == b.rounds_used);
        REQUIRE(a.bob_knows == b.bob_knows);
        REQUIRE(a.bob_inferred == b.bob_inferred);
    }
}

TEST_CASE("transcript text has the documented line format") {
    const SessionResult r = run_session(OTBit::Plus, honest_bob_strategy(),
                                        kLossFree, 41, 42);
    const std::string text = r.transcript.to_text();
    const std::string basis(1, basis_letter(r.basis));
    CHECK(text == "1 A->B particle_transfer pair=1\n"
                  "1 A->B success_query\n"
                  "1 B->A success_reply ok=true\n"
                  "1 A->B basis_reveal basis=" + basis + "\n");
}

TEST_CASE("retry statistics are geometric at half loss") {
    // success per round = (1 - 0.5)^2 = 1/4, so mean rounds = 4
    const ChannelConfig lossy{0.5, 64};
    const std::uint64_t n = 10000;
    RandomStream root(44);
    std::uint64_t rounds_total = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const SessionResult r =
            run_session(OTBit::Plus, honest_bob_strategy(), lossy,
                        root.split(2 * i).seed(), root.split(2 * i + 1).seed());
        rounds_total += r.rounds_used;
    }
    const double mean = static_cast<double>(rounds_total) / n;
    const double tolerance =
        5.0 * std::sqrt(0.75 / (0.25 * 0.25) / static_cast<double>(n));
    CHECK(std::fabs(mean - 4.0) <= tolerance);
}

TEST_CASE("round limit aborts pathological channels") {
    const ChannelConfig broken{0.99, 3};
    CHECK_THROWS_AS(run_session(OTBit::Plus, honest_bob_strategy(), broken,
                                5, 6),
                    RoundLimitExceeded);
    try {
        run_session(OTBit::Plus, honest_bob_strategy(), broken, 5, 6);
    } catch (const RoundLimitExceeded& e) {
        CHECK(e.rounds() == 3);
    }
}

TEST_CASE("invalid channel configurations are rejected") {
    CHECK_THROWS_AS(run_session(OTBit::Plus, honest_bob_strategy(),
                                ChannelConfig{1.0, 8}, 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_session(OTBit::Plus, honest_bob_strategy(),
                                ChannelConfig{-0.1, 8}, 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_session(OTBit::Plus, honest_bob_strategy(),
                                ChannelConfig{0.0, 0}, 1, 2),
                    std::invalid_argument);
}

TEST_CASE("alice's view is independent of bob's axis choice") {
    // Loss-free: the success reply is decided before Bob does anything
    // axis-dependent, so splitting replies by his axis shows nothing.
    {
        RandomStream root(55);
        std::array<std::array<std::uint64_t, 2>, 2> counts{};
        const std::uint64_t n = 100000;
        for (std::uint64_t i = 0; i < n; ++i) {
            const SessionResult r = run_session(
                OTBit::Plus, honest_bob_strategy(), kLossFree,
                root.split(2 * i).seed(), root.split(2 * i + 1).seed());
            REQUIRE(r.rounds_used == 1);
            const auto* reply =
                std::get_if<SuccessReply>(&r.transcript.entries[2].message);
            REQUIRE(reply != nullptr);
            const int axis_row = honest_axis(r) == Basis::Horizontal ? 0 : 1;
            const int reply_col = reply->ok ? 0 : 1;
            ++counts[axis_row][reply_col];
        }
        CHECK(qot::test::chi_square_2x2_p(counts) > 0.001);
    }
    // Lossy: what Alice sees (how many rounds it took) is driven by the
    // channel alone, so it is independent of the axis Bob ends up using.
    {
        const ChannelConfig channel{0.3, 64};
        RandomStream root(56);
        std::array<std::array<std::uint64_t, 2>, 2> counts{};
        const std::uint64_t n = 100000;
        for (std::uint64_t i = 0; i < n; ++i) {
            const SessionResult r = run_session(
                OTBit::Plus, honest_bob_strategy(), channel,
                root.split(2 * i).seed(), root.split(2 * i + 1).seed());
            const int axis_row = honest_axis(r) == Basis::Horizontal ? 0 : 1;
            const int retry_col = r.rounds_used > 1 ? 0 : 1;
            ++counts[axis_row][retry_col];
        }
        CHECK(qot::test::chi_square_2x2_p(counts) > 0.001);
    }
}

} // TEST_SUITE
