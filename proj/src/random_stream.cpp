#include "qot/random_stream.hpp"

namespace qot {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 output function (Stafford mix13).
std::uint64_t mix_draw(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// murmur3 finalizer; reserved for lane/seed derivation.
std::uint64_t mix_lane(std::uint64_t z) noexcept {
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDull;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ull;
    return z ^ (z >> 33);
}

} // namespace

std::uint64_t RandomStream::next_u64() noexcept {
    ++counter_;
    return mix_draw(seed_ + counter_ * kGolden);
}

double RandomStream::next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::split(std::uint64_t lane) const noexcept {
    return RandomStream(mix_lane(seed_ ^ mix_lane(lane + kGolden)));
}

} // namespace qot
