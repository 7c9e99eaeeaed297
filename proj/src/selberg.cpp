#include "cartan_gamma/selberg.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "cartan_gamma/errors.hpp"
#include "cartan_gamma/specialfn.hpp"

namespace cartan_gamma {

namespace {

double to_double(const Rational& q) { return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()); }

void require_real_domain(const SelbergParams& p) {
    if (p.n < 1) throw DomainError("Selberg integral needs n >= 1");
    if (p.alpha <= Rational(0) || p.beta <= Rational(0) || p.rho < Rational(0)) {
        throw DomainError("real Selberg integral needs alpha, beta > 0 and rho >= 0, got " + p.to_string());
    }
}

// Tanh-sinh nodes on (0,1): x and 1-x are both kept so that endpoint
// singularities are evaluated without cancellation.
struct Nodes {
    std::vector<double> x;
    std::vector<double> xc;
    std::vector<double> w;
};

Nodes tanh_sinh(double h) {
    Nodes out;
    const int range = static_cast<int>(std::ceil(6.0 / h));
    for (int k = -range; k <= range; ++k) {
        const double t = k * h;
        const double u = std::numbers::pi / 2 * std::sinh(t);
        const double x = 1.0 / (1.0 + std::exp(-2 * u));
        const double xc = 1.0 / (1.0 + std::exp(2 * u));
        const double ch = std::cosh(u);
        const double w = h * std::numbers::pi / 2 * std::cosh(t) / (ch * ch) / 2;
        if (x > 0 && xc > 0 && w > 0 && std::isfinite(w)) {
            out.x.push_back(x);
            out.xc.push_back(xc);
            out.w.push_back(w);
        }
    }
    return out;
}

double refine(const std::function<double(double)>& rule, const std::string& what) {
    constexpr double kAgreement = 1e-12;
    constexpr double kFailure = 1e-6;
    double h = 0.2;
    double previous = rule(h);
    double change = 0;
    for (int level = 0; level < 4; ++level) {
        h /= 2;
        const double current = rule(h);
        change = std::abs(current - previous) / std::abs(current);
        previous = current;
        if (change < kAgreement) return current;
    }
    if (!(change <= kFailure)) {
        throw QuadratureNotConverged(what + ": successive refinements differ by " + std::to_string(change));
    }
    return previous;
}

double real_rule(double a, double b, double rho, int n, double h) {
    const Nodes q = tanh_sinh(h);
    const std::size_t m = q.x.size();
    double sum = 0;
    if (n == 1) {
        for (std::size_t i = 0; i < m; ++i) sum += q.w[i] * std::pow(q.x[i], a - 1) * std::pow(q.xc[i], b - 1);
        return sum;
    }
    // 2 int_{y<x}, y = x t: x^(2a+2rho-1)(1-x)^(b-1) t^(a-1)(1-t)^(2rho)(1-xt)^(b-1).
    for (std::size_t i = 0; i < m; ++i) {
        const double x = q.x[i];
        const double xc = q.xc[i];
        const double outer = q.w[i] * std::pow(x, 2 * a + 2 * rho - 1) * std::pow(xc, b - 1);
        double inner = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const double one_minus_xt = xc + x * q.xc[j];
            inner += q.w[j] * std::pow(q.x[j], a - 1) * std::pow(q.xc[j], 2 * rho) * std::pow(one_minus_xt, b - 1);
        }
        sum += outer * inner;
    }
    return 2 * sum;
}

// int over {|z| < 1, |z| < |1-z|} of |z|^(2a-2) |1-z|^(2b-2) dA.
double near_zero_rule(double a, double b, double h) {
    const Nodes q = tanh_sinh(h);
    const double third = std::numbers::pi / 3;
    double total = 0;
    for (const auto& [lo, hi] : {std::pair{0.0, third}, std::pair{third, std::numbers::pi}}) {
        for (std::size_t i = 0; i < q.x.size(); ++i) {
            const double theta = lo + (hi - lo) * q.x[i];
            const double radius = theta < third ? 1 / (2 * std::cos(theta)) : 1.0;
            double inner = 0;
            for (std::size_t j = 0; j < q.x.size(); ++j) {
                const double r = radius * q.x[j];
                const double dist2 = 1 - 2 * r * std::cos(theta) + r * r;
                inner += q.w[j] * std::pow(q.x[j], 2 * a - 1) * std::pow(dist2, b - 1);
            }
            // Upper and lower half planes contribute equally.
            total += 2 * (hi - lo) * q.w[i] * std::pow(radius, 2 * a) * inner;
        }
    }
    return total;
}

}  // namespace

std::string SelbergParams::to_string() const {
    return "(alpha=" + cartan_gamma::to_string(alpha) + ", beta=" + cartan_gamma::to_string(beta) +
           ", rho=" + cartan_gamma::to_string(rho) + ", n=" + std::to_string(n) + ")";
}

BigReal selberg_real_closed(const SelbergParams& p, const PrecisionContext& ctx) {
    require_real_domain(p);
    BigReal out(1LL, ctx);
    for (int j = 0; j < p.n; ++j) {
        // At j = 0 the factor Gamma(1+rho)/Gamma(1+rho) is 1.
        if (j > 0) out *= gamma(Rational(1) + p.rho + j * p.rho, ctx) / gamma(Rational(1) + p.rho, ctx);
        out *= gamma(p.alpha + j * p.rho, ctx) * gamma(p.beta + j * p.rho, ctx) /
               gamma(p.alpha + p.beta + (p.n + j - 1) * p.rho, ctx);
    }
    return out;
}

BigReal selberg_real_quadrature(const SelbergParams& p, const PrecisionContext& /*ctx*/) {
    require_real_domain(p);
    if (p.n > 2) throw DomainError("real Selberg quadrature supports n <= 2");
    const double a = to_double(p.alpha);
    const double b = to_double(p.beta);
    const double rho = to_double(p.rho);
    return BigReal(refine([&](double h) { return real_rule(a, b, rho, p.n, h); }, "real Selberg " + p.to_string()));
}

BigReal selberg_complex_closed(const SelbergParams& p, const PrecisionContext& ctx) {
    if (p.n < 1) throw DomainError("Selberg integral needs n >= 1");
    auto g = [&](const Rational& x) {
        if (is_integer(x)) throw DomainError("gamma(x) is degenerate at the integer " + to_string(x));
        return gamma_ratio(BigReal(x, ctx));
    };
    BigReal out = pow(pi(ctx), static_cast<long>(p.n));
    for (int j = 0; j < p.n; ++j) {
        if (j > 0) out *= g(Rational(1) + p.rho + j * p.rho) / g(Rational(1) + p.rho);
        out *= g(p.alpha + j * p.rho) * g(p.beta + j * p.rho) / g(p.alpha + p.beta + (p.n + j - 1) * p.rho);
    }
    return out;
}

BigReal selberg_complex_quadrature(const SelbergParams& p, const PrecisionContext& /*ctx*/) {
    if (p.n != 1) throw DomainError("complex Selberg quadrature supports n = 1 only");
    if (p.alpha <= Rational(0) || p.beta <= Rational(0) || p.alpha + p.beta >= Rational(1)) {
        throw DomainError("complex Selberg integral needs alpha, beta > 0 and alpha + beta < 1, got " + p.to_string());
    }
    const double a = to_double(p.alpha);
    const double b = to_double(p.beta);
    // z -> 1 - z maps the region nearest 1 onto the one nearest 0 and swaps
    // the exponents; z -> 1/z does the same for infinity with exponent
    // 1 - a - b at the origin.
    const double c = 1 - a - b;
    return BigReal(refine(
        [&](double h) { return near_zero_rule(a, b, h) + near_zero_rule(b, a, h) + near_zero_rule(c, b, h); },
        "complex Selberg " + p.to_string()));
}

std::vector<SelbergParams> default_real_grid() {
    return {
        {Rational(1), Rational(1), Rational(1), 2},       {Rational(1, 2), Rational(1, 2), Rational(1, 2), 2},
        {Rational(2), Rational(3), Rational(1), 2},       {Rational(3, 10), Rational(7, 10), Rational(1, 4), 2},
        {Rational(3, 2), Rational(1, 2), Rational(3, 4), 2}, {Rational(1, 2), Rational(2), Rational(1, 2), 2},
        {Rational(1, 5), Rational(1, 5), Rational(0), 2},  {Rational(1, 4), Rational(3), Rational(2), 2},
        {Rational(1, 3), Rational(1, 2), Rational(0), 1},  {Rational(5, 2), Rational(3, 4), Rational(1), 1},
    };
}

std::vector<SelbergParams> default_complex_grid() {
    return {
        {Rational(1, 3), Rational(1, 3), Rational(0), 1},   {Rational(1, 4), Rational(1, 2), Rational(0), 1},
        {Rational(1, 2), Rational(1, 4), Rational(0), 1},   {Rational(1, 10), Rational(1, 10), Rational(0), 1},
        {Rational(9, 20), Rational(9, 20), Rational(0), 1},
    };
}

}  // namespace cartan_gamma
