#pragma once

#include <optional>
#include <string>

#include "qot/encoding.hpp"

namespace qot {

// Angle in radians, with an optional "pi" suffix multiplier:
// "0.25pi" -> pi/4, "pi" -> pi, "1.5707" -> 1.5707. Empty or malformed
// input yields nullopt.
std::optional<double> parse_angle(const std::string& text);

// "+1" or "1" -> +1; "-1" or "0" -> -1 (bit 0 is carried as the sign -1).
std::optional<OTBit> parse_ot_bit(const std::string& text);

} // namespace qot
