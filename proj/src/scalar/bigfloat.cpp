#include "trisect/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trisect::scalar {

namespace {

thread_local long working_precision = 256;

long wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

PrecisionScope::PrecisionScope(long bits) : previous_(working_precision) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
        throw std::invalid_argument("precision out of MPFR range");
    }
    working_precision = bits;
}

PrecisionScope::~PrecisionScope() { working_precision = previous_; }

long PrecisionScope::current() { return working_precision; }

BigFloat::BigFloat(Uninit, long bits) { mpfr_init2(v_, bits); }

BigFloat::BigFloat() : BigFloat(Uninit{}, working_precision) { mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(double v) : BigFloat(Uninit{}, working_precision) { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(int v) : BigFloat(Uninit{}, working_precision) { mpfr_set_si(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(std::string_view decimal) : BigFloat(Uninit{}, working_precision) {
    const std::string text(decimal);
    if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("not a decimal number: " + text);
    }
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(Uninit{}, other.precision()) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(Uninit{}, MPFR_PREC_MIN) { mpfr_swap(v_, other.v_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long bits) {
    BigFloat r(Uninit{}, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    mpfr_exp_t exp10 = 0;
    char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw_digits);
    mpfr_free_str(raw_digits);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::Uninit{}, wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(BigFloat::Uninit{}, a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

namespace {

template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
    BigFloat r = BigFloat::with_precision(x.precision());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat fabs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat tan(const BigFloat& x) { return unary(x, mpfr_tan); }
BigFloat atan(const BigFloat& x) { return unary(x, mpfr_atan); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r = BigFloat::with_precision(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r = BigFloat::with_precision(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

bool isfinite(const BigFloat& x) { return x.is_finite(); }

}  // namespace trisect::scalar
