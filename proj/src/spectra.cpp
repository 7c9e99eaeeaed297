#include "cartan_gamma/spectra.hpp"

#include <string>

#include "cartan_gamma/gammawords.hpp"
#include "cartan_gamma/specialfn.hpp"

namespace cartan_gamma {

BigReal lambda_min(const RootSystem& rs, const PrecisionContext& ctx) {
    const BigReal s = sin_pi(Rational(1, 2 * rs.coxeter_number()), ctx);
    return BigReal(4) * s * s;
}

BigReal lambda_max_incidence(const RootSystem& rs, const PrecisionContext& ctx) {
    return cos_pi(Rational(1, rs.coxeter_number()), ctx);
}

BigReal default_pf_tolerance(const PrecisionContext& ctx) { return power_of_ten(5 - ctx.digits(), ctx); }

BigVector mass_vector_closed_form(const RootSystem& rs, const PrecisionContext& ctx) {
    const int n = rs.rank();
    auto S = [&](long p, long q) { return sin_pi(Rational(p, q), ctx); };
    auto C = [&](long p, long q) { return cos_pi(Rational(p, q), ctx); };
    const BigReal r2 = sqrt(BigReal(2, ctx));
    const BigReal r3 = sqrt(BigReal(3, ctx));
    const BigReal one(1, ctx);
    BigVector m(n);
    switch (rs.label().family) {
        case Family::A:
            for (int a = 1; a <= n; ++a) m(a - 1) = S(a, n + 1);
            break;
        case Family::B:
            for (int a = 1; a < n; ++a) m(a - 1) = BigReal(2) * S(a, 2 * n);
            m(n - 1) = one;
            break;
        case Family::C:
            for (int a = 1; a <= n; ++a) m(a - 1) = S(a, 2 * n);
            break;
        case Family::D:
            for (int a = 1; a <= n - 2; ++a) m(a - 1) = BigReal(2) * S(a, 2 * n - 2);
            m(n - 2) = one;
            m(n - 1) = one;
            break;
        case Family::E:
            if (n == 6) {
                m << one, r2, (r3 + one) / r2, r3 + one, (r3 + one) / r2, one;
            } else if (n == 7) {
                m << BigReal(2) * C(5, 18), BigReal(2) * C(1, 9), BigReal(4) * C(1, 18) * C(5, 18),
                    BigReal(4) * C(1, 18) * C(1, 9), BigReal(4) * C(1, 9) * C(2, 9), BigReal(2) * C(1, 18), one;
            } else {
                const BigReal c5 = C(1, 5);
                m << BigReal(2) * c5, BigReal(4) * c5 * C(7, 30), BigReal(4) * c5 * C(1, 30),
                    BigReal(8) * c5 * c5 * C(2, 15), BigReal(8) * c5 * c5 * C(7, 30), BigReal(4) * c5 * C(2, 15),
                    BigReal(2) * C(1, 30), one;
            }
            break;
        case Family::F:
            m << r2, r3 + one, (r3 + one) / r2, one;
            break;
        case Family::G:
            m << one, r3;
            break;
    }
    return m;
}

BigReal closed_form_constant(const RootSystem& rs, const PrecisionContext& ctx) {
    const int n = rs.rank();
    auto S = [&](long p, long q) { return sin_pi(Rational(p, q), ctx); };
    const BigReal r3 = sqrt(BigReal(3, ctx));
    switch (rs.label().family) {
        case Family::A:
        case Family::C:
            return BigReal(1, ctx);
        case Family::B:
            return pow_rat(2, Rational(1 - n, n), ctx);
        case Family::D:
            return pow_rat(2, Rational(2 - n, n - 1), ctx);
        case Family::E:
            if (n == 6) break;
            if (n == 7) return pow_rat(2, Rational(1, 9), ctx) * pow_rat(3, Rational(-1, 6), ctx) * S(1, 9);
            return pow_rat(2, Rational(16, 15), ctx) * pow_rat(3, Rational(1, 20), ctx) *
                   pow_rat(5, Rational(-1, 12), ctx) * S(1, 15) * sqrt(S(2, 5) * S(2, 15) * S(4, 15) / S(3, 10));
        case Family::F:
            break;
        case Family::G:
            return pow_rat(2, Rational(-2, 3), ctx);
    }
    // E6 and F4 share the constant (F4 is a folding of E6).
    return pow_rat(2, Rational(-5, 4), ctx) * pow_rat(3, Rational(1, 8), ctx) * sqrt(r3 - BigReal(1));
}

BigVector gamma_vector(const RootSystem& rs, const PrecisionContext& ctx) {
    BigVector out(rs.rank());
    for (int i = 1; i <= rs.rank(); ++i) out(i - 1) = evaluate(word_of_root_system(rs, i), ctx);
    return out;
}

BigVector affine_gamma_vector(const RootSystem& rs, const PrecisionContext& ctx) {
    BigVector out(rs.rank() + 1);
    BigReal alpha0(1, ctx);
    for (int i = 1; i <= rs.rank(); ++i) {
        out(i) = evaluate(tilde(word_of_root_system(rs, i)), ctx);
        alpha0 *= pow(out(i), static_cast<long>(-rs.marks()(i)));
    }
    out(0) = alpha0;
    return out;
}

std::int64_t mass_constant_k(const RootSystem& rs) {
    std::int64_t k = 1;
    for (int i = 1; i <= rs.rank(); ++i) {
        for (std::int64_t e = 0; e < rs.marks()(i); ++e) k *= rs.comarks()(i);
    }
    return k;
}

VerificationReport verify_theorem_1_1(const RootSystem& rs, const PrecisionContext& ctx, const BigReal& tol) {
    const int n = rs.rank();
    const BigVector g = gamma_vector(rs, ctx);
    const BigVector m = mass_vector_closed_form(rs, ctx);
    const BigReal lambda = lambda_min(rs, ctx);
    const BigReal c = closed_form_constant(rs, ctx);
    const BigReal p = pi(ctx);
    const BigMatrix a = rs.cartan().cast<BigReal>();
    const BigVector ag = a * g;

    VerificationReport report;
    report.theorem = "1.1";
    report.type = rs.label().to_string();
    report.tolerance = tol;
    const BigReal ratio_last = g(n - 1) / m(n - 1);
    for (int i = 0; i < n; ++i) {
        const std::string idx = std::to_string(i + 1);
        report.add("eigen[" + idx + "]", abs(ag(i) - lambda * g(i)));
        report.add("ratio[" + idx + "]", abs(g(i) / m(i) - ratio_last));
        report.add("constant[" + idx + "]", abs(p * g(i) - c * m(i)));
    }
    return report;
}

VerificationReport verify_theorem_1_2_1_3(const RootSystem& rs, const PrecisionContext& ctx, const BigReal& tol) {
    const BigVector gamma = affine_gamma_vector(rs, ctx);
    const BigReal scale =
        pow_rat(BigReal(mass_constant_k(rs), ctx), Rational(-1, rs.coxeter_number()), ctx);

    VerificationReport report;
    report.theorem = rs.label().simply_laced() ? "1.2" : "1.3";
    report.type = rs.label().to_string();
    report.tolerance = tol;
    for (int i = 0; i <= rs.rank(); ++i) {
        report.add("gamma[" + std::to_string(i) + "]",
                   abs(gamma(i) - scale * BigReal(static_cast<long long>(rs.comarks()(i)))));
    }
    const BigReal direct0 = evaluate(tilde(word_of_root_system(rs, 0)), ctx);
    report.add("alpha0-word", abs(direct0 - gamma(0)));
    return report;
}

}  // namespace cartan_gamma
