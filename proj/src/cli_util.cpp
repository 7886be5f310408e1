#include "qot/cli_util.hpp"

#include <cstddef>
#include <stdexcept>

#include "qot/qstate.hpp"

namespace qot {

std::optional<double> parse_angle(const std::string& text) {
    if (text.empty())
        return std::nullopt;

    double multiplier = 1.0;
    std::string body = text;
    if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
        multiplier = kPi;
        body = text.substr(0, text.size() - 2);
        if (body.empty())
            return multiplier; // bare "pi"
    }

    try {
        std::size_t consumed = 0;
        const double value = std::stod(body, &consumed);
        if (consumed != body.size())
            return std::nullopt;
        return value * multiplier;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<OTBit> parse_ot_bit(const std::string& text) {
    if (text == "+1" || text == "1")
        return OTBit::Plus;
    if (text == "-1" || text == "0")
        return OTBit::Minus;
    return std::nullopt;
}

} // namespace qot
