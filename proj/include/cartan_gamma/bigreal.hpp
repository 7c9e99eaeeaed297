#ifndef CARTAN_GAMMA_BIGREAL_HPP
#define CARTAN_GAMMA_BIGREAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>
#include <mpfr.h>

#include "cartan_gamma/rational.hpp"

namespace cartan_gamma {

/// Working-precision configuration shared by every arbitrary-precision
/// evaluation. `digits` is the guaranteed decimal accuracy; values are
/// computed with kGuardDigits extra digits on top of that.
class PrecisionContext {
public:
    static constexpr int kDefaultDigits = 50;
    static constexpr int kMinDigits = 20;
    static constexpr int kGuardDigits = 10;

    explicit PrecisionContext(int digits = kDefaultDigits);

    int digits() const noexcept { return digits_; }
    mpfr_prec_t working_bits() const noexcept;

    /// Reads CARTAN_GAMMA_DIGITS if set, otherwise the default.
    static PrecisionContext from_environment();

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    int digits_;
};

/// Arbitrary-precision real number backed by an MPFR value.
///
/// Integer constructors produce exact values at a small precision. Every
/// arithmetic result carries the larger precision of its operands, so the
/// precision of a computation is set by the context-bound values that enter
/// it (constants built with a PrecisionContext, special-function results).
class BigReal {
public:
    static constexpr mpfr_prec_t kExactBits = 64;

    BigReal();
    BigReal(int value);        // NOLINT(google-explicit-constructor)
    BigReal(long value);       // NOLINT(google-explicit-constructor)
    BigReal(long long value);  // NOLINT(google-explicit-constructor)
    explicit BigReal(double value);

    BigReal(long long value, const PrecisionContext& ctx);
    BigReal(const Rational& value, const PrecisionContext& ctx);

    /// Parses a decimal string ("1.25", "-3e-40") at context precision.
    static BigReal parse(std::string_view text, const PrecisionContext& ctx);
    /// Uninitialised-value factory used by the special functions.
    static BigReal with_bits(mpfr_prec_t bits);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }
    mpfr_srcptr raw() const noexcept { return value_; }
    mpfr_ptr raw() noexcept { return value_; }

    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }

    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Nearest integer; only meaningful when the value fits in 64 bits.
    long long to_long_long() const noexcept { return mpfr_get_sj(value_, MPFR_RNDN); }
    /// Decimal rendering with `significant` digits, shortest form ("%Rg").
    std::string to_string(int significant) const;

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal round(const BigReal& x);
BigReal floor(const BigReal& x);

/// log10|x| as a double; -inf for zero. Used for reporting residual orders.
double log10_abs(const BigReal& x);

BigReal pi(const PrecisionContext& ctx);
/// 10^exponent at context precision.
BigReal power_of_ten(int exponent, const PrecisionContext& ctx);
/// Default acceptance threshold for a primitive: 10^(10 - digits).
BigReal primitive_tolerance(const PrecisionContext& ctx);

using BigVector = Eigen::Matrix<BigReal, Eigen::Dynamic, 1>;
using BigMatrix = Eigen::Matrix<BigReal, Eigen::Dynamic, Eigen::Dynamic>;

/// Complex value as a pair of BigReal. Only the operations the character
/// sums need are provided.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
};

BigComplex conj(const BigComplex& z);
BigReal norm_squared(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigComplex inverse(const BigComplex& z);
/// z^n for any integer n (negative powers go through the inverse).
BigComplex pow(const BigComplex& z, long n);
/// e^{2 pi i k / n} at context precision.
BigComplex root_of_unity(long k, long n, const PrecisionContext& ctx);

/// Lifts an exact integer into a scalar type, seeding precision for BigReal.
template <class Scalar>
Scalar lift(long long value, const PrecisionContext& ctx);

template <>
inline double lift<double>(long long value, const PrecisionContext&) {
    return static_cast<double>(value);
}

template <>
inline BigReal lift<BigReal>(long long value, const PrecisionContext& ctx) {
    return BigReal(value, ctx);
}

}  // namespace cartan_gamma

namespace Eigen {

template <>
struct NumTraits<cartan_gamma::BigReal> : GenericNumTraits<cartan_gamma::BigReal> {
    using Real = cartan_gamma::BigReal;
    using NonInteger = cartan_gamma::BigReal;
    using Nested = cartan_gamma::BigReal;
    using Literal = cartan_gamma::BigReal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 20,
        MulCost = 40
    };

    static Real epsilon();
    static Real dummy_precision();
    static Real highest();
    static Real lowest();
    static int digits10() { return cartan_gamma::PrecisionContext::kDefaultDigits; }
};

}  // namespace Eigen

#endif
