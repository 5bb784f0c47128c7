#include "trisect/scalar.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trisect::scalar {

Backend make_backend(BackendKind kind, int precision_bits, std::optional<double> eps_override) {
    Backend b;
    b.kind = kind;
    if (kind == BackendKind::machine) {
        b.precision_bits = 53;
        b.eps = 1e-9;
        b.name = "machine";
    } else {
        if (precision_bits < 53) {
            throw std::invalid_argument("bigfloat precision must be at least 53 bits, got " +
                                        std::to_string(precision_bits));
        }
        if (precision_bits > kMaxPrecisionBits) {
            throw std::invalid_argument("bigfloat precision must be at most " + std::to_string(kMaxPrecisionBits) +
                                        " bits, got " + std::to_string(precision_bits));
        }
        b.precision_bits = precision_bits;
        b.eps = std::exp2(-precision_bits / 2.0 + 4.0);
        b.name = "bigfloat:" + std::to_string(precision_bits);
    }
    if (eps_override) {
        if (!(*eps_override > 0.0) || !std::isfinite(*eps_override)) {
            throw std::invalid_argument("eps must be positive and finite");
        }
        b.eps = *eps_override;
    }
    return b;
}

Backend parse_backend(std::string_view text) {
    if (text == "machine") return make_backend(BackendKind::machine);
    constexpr std::string_view prefix = "bigfloat:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        int bits = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), bits);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw std::invalid_argument("bad bigfloat precision: " + std::string(digits));
        }
        return make_backend(BackendKind::bigfloat, bits);
    }
    if (text == "bigfloat") return make_backend(BackendKind::bigfloat, 256);
    throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected machine or bigfloat:<bits>)");
}

}  // namespace trisect::scalar
