#ifndef CARTAN_GAMMA_SELBERG_HPP
#define CARTAN_GAMMA_SELBERG_HPP

#include <string>
#include <vector>

#include "cartan_gamma/bigreal.hpp"
#include "cartan_gamma/rational.hpp"

namespace cartan_gamma {

struct SelbergParams {
    Rational alpha;
    Rational beta;
    Rational rho;
    int n = 1;

    std::string to_string() const;
};

/// Selberg's product for int_{[0,1]^n} prod x^(a-1)(1-x)^(b-1) prod |x_j-x_k|^(2 rho).
/// DomainError unless alpha, beta > 0, rho >= 0, n >= 1.
BigReal selberg_real_closed(const SelbergParams& p, const PrecisionContext& ctx);

/// Tensor tanh-sinh quadrature for n in {1, 2}, in double precision. The
/// step is halved until successive results agree to 1e-12 relative;
/// QuadratureNotConverged if they still differ by more than 1e-6.
BigReal selberg_real_quadrature(const SelbergParams& p, const PrecisionContext& ctx);

/// pi^n times the gamma-product for the integral over C^n with the area
/// measure. DomainError when a gamma argument is an integer or n < 1.
BigReal selberg_complex_closed(const SelbergParams& p, const PrecisionContext& ctx);

/// int_C |z|^(2a-2) |1-z|^(2b-2) dA for n = 1, 0 < a, b and a + b < 1.
/// The plane is split into the three regions where 0, 1 or infinity is the
/// nearest of the three singular points; each is mapped onto the region
/// {|z| < 1, |z| < |1-z|} and integrated in polar coordinates.
BigReal selberg_complex_quadrature(const SelbergParams& p, const PrecisionContext& ctx);

std::vector<SelbergParams> default_real_grid();
std::vector<SelbergParams> default_complex_grid();

}  // namespace cartan_gamma

#endif
