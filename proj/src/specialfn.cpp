#include "cartan_gamma/specialfn.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cartan_gamma/errors.hpp"

namespace cartan_gamma {

namespace {

bool is_nonpositive_integer(const BigReal& x) { return mpfr_integer_p(x.raw()) != 0 && x.sign() <= 0; }

void require_open_unit(const Rational& x, const char* what) {
    if (x <= Rational(0) || x >= Rational(1)) {
        throw DomainError(std::string(what) + " needs 0 < x < 1, got " + to_string(x));
    }
}

}  // namespace

BigReal gamma(const BigReal& x) {
    if (is_nonpositive_integer(x)) throw PoleError("Gamma has a pole at " + x.to_string(20));
    BigReal out = BigReal::with_bits(x.bits());
    mpfr_gamma(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigReal gamma(const Rational& x, const PrecisionContext& ctx) {
    if (is_integer(x) && x.numerator() <= 0) throw PoleError("Gamma has a pole at " + to_string(x));
    return gamma(BigReal(x, ctx));
}

BigReal lngamma(const Rational& x, const PrecisionContext& ctx) {
    if (x <= Rational(0)) throw DomainError("log Gamma needs x > 0, got " + to_string(x));
    const BigReal arg(x, ctx);
    BigReal out = BigReal::with_bits(arg.bits());
    mpfr_lngamma(out.raw(), arg.raw(), MPFR_RNDN);
    return out;
}

BigReal gamma_tilde(const Rational& x, const PrecisionContext& ctx) {
    require_open_unit(x, "gamma_tilde");
    return gamma(x, ctx) / gamma(Rational(1) - x, ctx);
}

BigReal gamma_ratio(const BigReal& x) {
    if (mpfr_integer_p(x.raw()) != 0) throw DomainError("Gamma(x)/Gamma(1-x) is degenerate at integer x");
    return gamma(x) / gamma(BigReal(1) - x);
}

BigReal s_factor(const Rational& x, const PrecisionContext& ctx) {
    require_open_unit(x, "s_factor");
    return pi(ctx) / sin_pi(x, ctx);
}

BigReal pow_rat(const BigReal& base, const Rational& exponent, const PrecisionContext& ctx) {
    if (base.sign() <= 0) throw DomainError("pow_rat needs a positive base");
    const BigReal e(exponent, ctx);
    return pow(base, e);
}

BigReal pow_rat(long long base, const Rational& exponent, const PrecisionContext& ctx) {
    return pow_rat(BigReal(base, ctx), exponent, ctx);
}

BigReal sin_pi(const Rational& x, const PrecisionContext& ctx) { return sin(pi(ctx) * BigReal(x, ctx)); }

BigReal cos_pi(const Rational& x, const PrecisionContext& ctx) { return cos(pi(ctx) * BigReal(x, ctx)); }

VerificationReport trig_identities_suite(const PrecisionContext& ctx) {
    auto S = [&](long p, long q) { return sin_pi(Rational(p, q), ctx); };
    auto C = [&](long p, long q) { return cos_pi(Rational(p, q), ctx); };
    const BigReal r3 = sqrt(BigReal(3, ctx));
    const BigReal r5 = sqrt(BigReal(5, ctx));
    const BigReal a = S(1, 5);
    const BigReal x = BigReal(Rational(3, 10), ctx);
    const BigReal sx = sin(x);
    const BigReal cx = cos(x);

    std::vector<std::pair<std::string, std::pair<BigReal, BigReal>>> sides;
    auto add = [&](std::string name, BigReal lhs, BigReal rhs) {
        sides.emplace_back(std::move(name), std::make_pair(std::move(lhs), std::move(rhs)));
    };
    const Rational x1(7, 30);
    add("Gamma^2=gamma*s", pow(gamma(x1, ctx), 2L), gamma_tilde(x1, ctx) * s_factor(x1, ctx));
    add("sin3x=sinx(4cos^2x-1)", sin(BigReal(3) * x), sx * (BigReal(4) * cx * cx - BigReal(1)));
    add("sin3x=sinx(3-4sin^2x)", sin(BigReal(3) * x), sx * (BigReal(3) - BigReal(4) * sx * sx));
    add("cos(pi/5)", C(1, 5), (BigReal(1) + r5) / BigReal(4));
    add("sin(3pi/10)", S(3, 10), (BigReal(1) + r5) / BigReal(4));
    add("1/cos(pi/5)", BigReal(1) / C(1, 5), r5 - BigReal(1));
    add("cos(2pi/5)", C(2, 5), (r5 - BigReal(1)) / BigReal(4));
    add("sin(pi/10)", S(1, 10), (r5 - BigReal(1)) / BigReal(4));
    add("sin^2(pi/5)", a * a, (BigReal(5) - r5) / BigReal(8));
    add("sin(pi/5)sin(2pi/5)", a * S(2, 5), r5 / BigReal(4));
    add("sin(2pi/5)", S(2, 5), (r5 + BigReal(1)) / BigReal(2) * a);
    add("sin(3pi/10)/sin(pi/10)", S(3, 10) / S(1, 10), BigReal(4) * C(1, 5) * C(1, 5));
    add("sin(pi/15)sin(4pi/15)", S(1, 15) * S(4, 15), (C(1, 5) - C(1, 3)) / BigReal(2));
    const BigReal phi4 = (BigReal(1) + r5) / BigReal(4);
    const BigReal psi4 = (r5 - BigReal(1)) / BigReal(4);
    const BigReal h3 = r3 / BigReal(2);
    add("sin(2pi/15)", S(2, 15), -a / BigReal(2) + phi4 * h3);
    add("sin(4pi/15)", S(4, 15), phi4 * a + psi4 * h3);
    add("sin(8pi/15)", S(8, 15), a / BigReal(2) + phi4 * h3);
    add("sin(pi/15)", S(1, 15), phi4 * a - psi4 * h3);
    add("sin(pi/15)sin(4pi/15)=(sqrt5-1)/8", S(1, 15) * S(4, 15), (r5 - BigReal(1)) / BigReal(8));
    add("sin(2pi/15)sin(8pi/15)", S(2, 15) * S(8, 15), (BigReal(1) + r5) / BigReal(8));
    add("sin(7pi/30)", S(7, 30), (BigReal(1) - r5) / BigReal(8) + (BigReal(1) + r5) * r3 / BigReal(4) * a);
    add("sin(11pi/30)", S(11, 30), (BigReal(1) + r5) / BigReal(8) + h3 * a);
    add("sin(7pi/30)sin(13pi/30)", S(7, 30) * S(13, 30), (BigReal(3) + r5) / BigReal(8));
    add("sin(7pi/30)sin(13pi/30)=sin^2(3pi/10)", S(7, 30) * S(13, 30), S(3, 10) * S(3, 10));
    add("sin(4pi/15)sin(8pi/15)", S(4, 15) * S(8, 15), S(3, 10) * S(11, 30));
    add("sin(pi/9)sin(2pi/9)sin(4pi/9)", S(1, 9) * S(2, 9) * S(4, 9), r3 / BigReal(8));

    VerificationReport report;
    report.theorem = "identities";
    report.type = "trig";
    report.tolerance = primitive_tolerance(ctx);
    for (auto& [name, lr] : sides) report.add(name, abs(lr.first - lr.second));
    return report;
}

}  // namespace cartan_gamma
