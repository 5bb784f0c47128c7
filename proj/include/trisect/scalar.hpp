#pragma once

#include "trisect/bigfloat.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace trisect::scalar {

enum class BackendKind { machine, bigfloat };

/// Numeric backend selection. `eps` is the absolute comparison tolerance on
/// unit-scale coordinates.
struct Backend {
    BackendKind kind = BackendKind::machine;
    int precision_bits = 53;
    double eps = 1e-9;
    std::string name = "machine";

    bool operator==(const Backend&) const = default;
};

inline constexpr int kMaxPrecisionBits = 2000;

/// Machine backends ignore `precision_bits`. Bigfloat backends need at least
/// 53 bits; the default eps is 2^(-bits/2 + 4).
Backend make_backend(BackendKind kind, int precision_bits = 53, std::optional<double> eps_override = {});

/// Parses "machine" or "bigfloat:<bits>" (the GEOM_BACKEND syntax).
Backend parse_backend(std::string_view text);

template <typename Real>
struct AngleDeg {
    Real value{};

    friend bool operator==(const AngleDeg&, const AngleDeg&) = default;
};

template <typename Real>
Real pi() {
    if constexpr (std::is_same_v<Real, BigFloat>) {
        BigFloat r = BigFloat::with_precision(PrecisionScope::current());
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    } else {
        return static_cast<Real>(3.14159265358979323846264338327950288L);
    }
}

template <typename Real>
Real deg_to_rad(const AngleDeg<Real>& a) {
    return a.value * pi<Real>() / Real(180);
}

template <typename Real>
AngleDeg<Real> rad_to_deg(const Real& r) {
    return {r * Real(180) / pi<Real>()};
}

inline double to_double(double v) { return v; }
inline double to_double(const BigFloat& v) { return v.to_double(); }

/// Exact conversion of a decimal literal at the current working precision.
template <typename Real>
Real from_decimal(std::string_view text) {
    if constexpr (std::is_same_v<Real, BigFloat>) {
        return BigFloat(text);
    } else {
        std::string s(text);
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("not a decimal number: " + s);
        return v;
    }
}

template <typename Real>
Real eps_of(const Backend& b) {
    return Real(b.eps);
}

/// Holds a PrecisionScope for bigfloat backends; no-op for machine.
template <typename Real>
class BackendScope {
public:
    explicit BackendScope(const Backend& b) {
        if constexpr (std::is_same_v<Real, BigFloat>) scope_.emplace(b.precision_bits);
    }

private:
    std::optional<PrecisionScope> scope_;
};

/// Runs `fn.template operator()<Real>()` with the Real type matching the
/// backend, inside a precision scope for bigfloat backends.
template <typename Fn>
decltype(auto) with_backend(const Backend& b, Fn&& fn) {
    if (b.kind == BackendKind::bigfloat) {
        PrecisionScope scope(b.precision_bits);
        return std::forward<Fn>(fn).template operator()<BigFloat>();
    }
    return std::forward<Fn>(fn).template operator()<double>();
}

}  // namespace trisect::scalar
