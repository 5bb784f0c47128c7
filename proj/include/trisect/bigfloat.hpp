#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace trisect::scalar {

/// Arbitrary-precision binary float (thin RAII wrapper over MPFR).
///
/// Every value carries its own precision. Binary operations round to the
/// larger precision of the two operands. Values created from machine numbers
/// or decimal strings take the calling thread's working precision, which is
/// set with PrecisionScope. There is no process-wide mutable state, so values
/// can be built concurrently on different threads.
class BigFloat {
public:
    BigFloat();
    BigFloat(double v);  // NOLINT(google-explicit-constructor): mixed arithmetic
    BigFloat(int v);     // NOLINT(google-explicit-constructor)
    explicit BigFloat(std::string_view decimal);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    [[nodiscard]] long precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal scientific notation with `digits` significant digits.
    [[nodiscard]] std::string to_string(int digits) const;
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static BigFloat with_precision(long bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

private:
    struct Uninit {};
    BigFloat(Uninit, long bits);

    mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat fabs(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
bool isfinite(const BigFloat& x);

/// Sets the calling thread's working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(long bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

    static long current();

private:
    long previous_;
};

}  // namespace trisect::scalar
