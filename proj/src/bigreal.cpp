#include "cartan_gamma/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cartan_gamma/errors.hpp"

namespace cartan_gamma {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
    if (digits < kMinDigits) {
        throw DomainError("precision must be at least " + std::to_string(kMinDigits) +
                          " digits, got " + std::to_string(digits));
    }
}

mpfr_prec_t PrecisionContext::working_bits() const noexcept {
    // log2(10) bits per decimal digit, plus a couple of spare bits.
    const double bits = (digits_ + kGuardDigits) * 3.321928094887362 + 2.0;
    return static_cast<mpfr_prec_t>(std::ceil(bits));
}

PrecisionContext PrecisionContext::from_environment() {
    const char* env = std::getenv("CARTAN_GAMMA_DIGITS");
    if (env == nullptr || *env == '\0') return PrecisionContext();
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value > 100000) {
        throw DomainError(std::string("CARTAN_GAMMA_DIGITS is not a valid digit count: ") + env);
    }
    return PrecisionContext(static_cast<int>(value));
}

BigReal::BigReal() {
    mpfr_init2(value_, kExactBits);
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(int value) : BigReal(static_cast<long long>(value)) {}
BigReal::BigReal(long value) : BigReal(static_cast<long long>(value)) {}

BigReal::BigReal(long long value) {
    mpfr_init2(value_, kExactBits);
    mpfr_set_sj(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value) {
    mpfr_init2(value_, std::numeric_limits<double>::digits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(long long value, const PrecisionContext& ctx) {
    mpfr_init2(value_, std::max(ctx.working_bits(), kExactBits));
    mpfr_set_sj(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, const PrecisionContext& ctx) {
    mpfr_init2(value_, ctx.working_bits());
    mpfr_set_sj(value_, value.numerator(), MPFR_RNDN);
    mpfr_div_si(value_, value_, static_cast<long>(value.denominator()), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, const PrecisionContext& ctx) {
    BigReal out = with_bits(ctx.working_bits());
    const std::string owned(text);
    if (owned.empty() || mpfr_set_str(out.value_, owned.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("not a decimal number: '" + owned + "'");
    }
    return out;
}

BigReal BigReal::with_bits(mpfr_prec_t bits) {
    BigReal out;
    mpfr_set_prec(out.value_, bits);
    mpfr_set_zero(out.value_, 1);
    return out;
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(value_, kExactBits);
    mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

std::string BigReal::to_string(int significant) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", significant, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

namespace {

// Widens `target` (exactly) so it can absorb an operand of `bits` precision.
void widen(mpfr_ptr target, mpfr_prec_t bits) {
    if (mpfr_get_prec(target) < bits) mpfr_prec_round(target, bits, MPFR_RNDN);
}

mpfr_prec_t joint_bits(const BigReal& a, const BigReal& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
    widen(value_, rhs.bits());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    widen(value_, rhs.bits());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    widen(value_, rhs.bits());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    widen(value_, rhs.bits());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal out = BigReal::with_bits(joint_bits(a, b));
    mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal out = BigReal::with_bits(joint_bits(a, b));
    mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal out = BigReal::with_bits(joint_bits(a, b));
    mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal out = BigReal::with_bits(joint_bits(a, b));
    mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigReal operator-(const BigReal& a) {
    BigReal out = BigReal::with_bits(a.bits());
    mpfr_neg(out.value_, a.value_, MPFR_RNDN);
    return out;
}

namespace {

template <class Fn>
BigReal unary(const BigReal& x, Fn fn) {
    BigReal out = BigReal::with_bits(x.bits());
    fn(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal out = BigReal::with_bits(std::max(x.bits(), y.bits()));
    mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
    BigReal out = BigReal::with_bits(std::max(base.bits(), exponent.bits()));
    mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& base, long exponent) {
    BigReal out = BigReal::with_bits(base.bits());
    mpfr_pow_si(out.raw(), base.raw(), exponent, MPFR_RNDN);
    return out;
}

BigReal round(const BigReal& x) {
    BigReal out = BigReal::with_bits(x.bits());
    mpfr_round(out.raw(), x.raw());
    return out;
}

BigReal floor(const BigReal& x) {
    BigReal out = BigReal::with_bits(x.bits());
    mpfr_floor(out.raw(), x.raw());
    return out;
}

double log10_abs(const BigReal& x) {
    if (x.is_zero()) return -std::numeric_limits<double>::infinity();
    BigReal magnitude = abs(x);
    mpfr_log10(magnitude.raw(), magnitude.raw(), MPFR_RNDN);
    return magnitude.to_double();
}

BigReal pi(const PrecisionContext& ctx) {
    BigReal out = BigReal::with_bits(ctx.working_bits());
    mpfr_const_pi(out.raw(), MPFR_RNDN);
    return out;
}

BigReal power_of_ten(int exponent, const PrecisionContext& ctx) {
    BigReal out = BigReal::with_bits(ctx.working_bits());
    mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(std::abs(exponent)), MPFR_RNDN);
    if (exponent < 0) mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
    return out;
}

BigReal primitive_tolerance(const PrecisionContext& ctx) {
    return power_of_ten(PrecisionContext::kGuardDigits - ctx.digits(), ctx);
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigReal real = re * rhs.re - im * rhs.im;
    BigReal imag = re * rhs.im + im * rhs.re;
    re = std::move(real);
    im = std::move(imag);
    return *this;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal norm_squared(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) { return sqrt(norm_squared(z)); }

BigComplex inverse(const BigComplex& z) {
    const BigReal n = norm_squared(z);
    return {z.re / n, -z.im / n};
}

BigComplex pow(const BigComplex& z, long n) {
    BigComplex base = n < 0 ? inverse(z) : z;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    BigComplex out{BigReal(1), BigReal(0)};
    while (e != 0) {
        if (e & 1UL) out *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return out;
}

BigComplex root_of_unity(long k, long n, const PrecisionContext& ctx) {
    long reduced = k % n;
    if (reduced < 0) reduced += n;
    BigReal angle = BigReal(2 * reduced) * pi(ctx) / BigReal(n);
    BigComplex out{BigReal::with_bits(angle.bits()), BigReal::with_bits(angle.bits())};
    mpfr_sin_cos(out.im.raw(), out.re.raw(), angle.raw(), MPFR_RNDN);
    return out;
}

}  // namespace cartan_gamma

namespace Eigen {

using cartan_gamma::BigReal;
using cartan_gamma::PrecisionContext;

BigReal NumTraits<BigReal>::epsilon() {
    return cartan_gamma::power_of_ten(-PrecisionContext::kDefaultDigits, PrecisionContext());
}

BigReal NumTraits<BigReal>::dummy_precision() {
    return cartan_gamma::power_of_ten(5 - PrecisionContext::kDefaultDigits, PrecisionContext());
}

BigReal NumTraits<BigReal>::highest() {
    BigReal out = BigReal::with_bits(PrecisionContext().working_bits());
    mpfr_set_inf(out.raw(), 1);
    return out;
}

BigReal NumTraits<BigReal>::lowest() {
    BigReal out = BigReal::with_bits(PrecisionContext().working_bits());
    mpfr_set_inf(out.raw(), -1);
    return out;
}

}  // namespace Eigen
