#ifndef CARTAN_GAMMA_SPECIALFN_HPP
#define CARTAN_GAMMA_SPECIALFN_HPP

#include "cartan_gamma/bigreal.hpp"
#include "cartan_gamma/rational.hpp"
#include "cartan_gamma/report.hpp"

namespace cartan_gamma {

// Gamma and log-Gamma are evaluated by MPFR, which rounds correctly at the
// working precision of the argument.

/// Gamma(x) at the precision of x. PoleError at nonpositive integers.
BigReal gamma(const BigReal& x);
/// Gamma(x) for a rational argument at context precision.
BigReal gamma(const Rational& x, const PrecisionContext& ctx);
/// log Gamma(x) for x > 0. DomainError otherwise.
BigReal lngamma(const Rational& x, const PrecisionContext& ctx);

/// gamma(x) = Gamma(x)/Gamma(1-x) for 0 < x < 1. DomainError outside.
BigReal gamma_tilde(const Rational& x, const PrecisionContext& ctx);
/// Gamma(x)/Gamma(1-x) for any non-integer x. DomainError at integers.
BigReal gamma_ratio(const BigReal& x);

/// s(x) = pi/sin(pi x) for 0 < x < 1. DomainError outside.
BigReal s_factor(const Rational& x, const PrecisionContext& ctx);

/// base^(p/q) for base > 0. DomainError otherwise.
BigReal pow_rat(const BigReal& base, const Rational& exponent, const PrecisionContext& ctx);
/// n^(p/q) for a positive integer n.
BigReal pow_rat(long long base, const Rational& exponent, const PrecisionContext& ctx);

BigReal sin_pi(const Rational& x, const PrecisionContext& ctx);
BigReal cos_pi(const Rational& x, const PrecisionContext& ctx);

/// Both sides of the trigonometric identities used to pin down the E7 and
/// E8 constants, plus Gamma(x)^2 = gamma(x) s(x). Tolerance 10^(10-digits).
VerificationReport trig_identities_suite(const PrecisionContext& ctx);

}  // namespace cartan_gamma

#endif
