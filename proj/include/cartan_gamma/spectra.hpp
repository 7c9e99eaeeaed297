#ifndef CARTAN_GAMMA_SPECTRA_HPP
#define CARTAN_GAMMA_SPECTRA_HPP

#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "cartan_gamma/bigreal.hpp"
#include "cartan_gamma/errors.hpp"
#include "cartan_gamma/rational.hpp"
#include "cartan_gamma/report.hpp"
#include "cartan_gamma/rootkit.hpp"

namespace cartan_gamma {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct EigenResult {
    Scalar eigenvalue;
    /// Strictly positive, last coordinate 1.
    Vector<Scalar> vector;
    int iterations = 0;
    /// max |A v - lambda v|
    Scalar residual;
    /// Estimated spectral radius of the shifted matrix after deflating the
    /// Perron pair, and the Perron root of the shifted matrix itself. The
    /// eigenvalue is simple when the first is strictly below the second.
    Scalar deflated_radius;
    Scalar shifted_perron_root;

    bool simple() const { return deflated_radius < shifted_perron_root; }
};

/// 4 sin^2(pi/2h), the smallest eigenvalue of the Cartan matrix.
BigReal lambda_min(const RootSystem& rs, const PrecisionContext& ctx);
/// Perron root of the incidence matrix I - A/2, (2 - lambda_min)/2 = cos(pi/h).
BigReal lambda_max_incidence(const RootSystem& rs, const PrecisionContext& ctx);

/// Default power-iteration tolerance 10^(5 - digits).
BigReal default_pf_tolerance(const PrecisionContext& ctx);

namespace detail {

template <class Scalar>
Scalar to_scalar(const Rational& q, const PrecisionContext& ctx) {
    if constexpr (std::is_same_v<Scalar, double>) {
        return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
    } else {
        return Scalar(q, ctx);
    }
}

template <class Scalar>
Scalar max_abs(const Vector<Scalar>& v) {
    using std::abs;
    Scalar out = abs(v(0));
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (abs(v(i)) > out) out = abs(v(i));
    }
    return out;
}

// Symmetrising weights d with A_ij d_j = A_ji d_i, if A admits them.
inline bool symmetriser(const RationalMatrix& a, RationalVector& d) {
    const Eigen::Index n = a.rows();
    d = RationalVector::Constant(n, Rational(0));
    d(0) = 1;
    for (Eigen::Index sweep = 0; sweep < n; ++sweep) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (d(i) == Rational(0)) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (i == j || a(i, j) == Rational(0) || d(j) != Rational(0)) continue;
                if (a(j, i) == Rational(0)) return false;
                d(j) = d(i) * a(j, i) / a(i, j);
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (d(i) == Rational(0) || a(i, j) * d(j) != a(j, i) * d(i)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Perron-Frobenius pair of a Cartan matrix A by power iteration.
///
/// Iterates on B = 2I - A/2 = I + (I - A/2): the incidence matrix I - A/2 of
/// a Dynkin diagram is bipartite, so its own power sequence oscillates, while
/// B has the same eigenvectors and a strictly dominant Perron root. Stops
/// once the geometric tail estimate d_k r/(1-r), r = d_k/d_{k-1}, of the
/// remaining change drops below tol. Returns lambda(A) = 4 - 2 lambda(B).
template <class Scalar>
EigenResult<Scalar> pf_power_iteration(const RationalMatrix& a, const PrecisionContext& ctx, const Scalar& tol,
                                       int max_iterations = 200000) {
    using std::abs;
    using std::pow;
    const Eigen::Index n = a.rows();
    if (n == 0 || a.cols() != n) throw DomainError("power iteration needs a nonempty square matrix");

    Matrix<Scalar> cartan(n, n);
    Matrix<Scalar> shifted(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            cartan(i, j) = detail::to_scalar<Scalar>(a(i, j), ctx);
            const Rational b = (i == j ? Rational(2) : Rational(0)) - a(i, j) / 2;
            if (b < Rational(0)) throw DomainError("2I - A/2 has a negative entry; not a Cartan matrix");
            shifted(i, j) = detail::to_scalar<Scalar>(b, ctx);
        }
    }

    const Scalar one = detail::to_scalar<Scalar>(Rational(1), ctx);
    const Scalar zero = detail::to_scalar<Scalar>(Rational(0), ctx);
    Vector<Scalar> x = Vector<Scalar>::Constant(n, one);
    Scalar previous_change = zero;
    int iterations = 0;
    bool converged = false;
    while (iterations < max_iterations) {
        Vector<Scalar> y = shifted * x;
        const Scalar last = y(n - 1);
        if (!(last > zero)) throw NoConvergence("power iteration lost positivity");
        y /= last;
        const Scalar change = detail::max_abs<Scalar>(Vector<Scalar>(y - x));
        x = std::move(y);
        ++iterations;
        if (change == zero) {
            converged = true;
            break;
        }
        if (iterations > 2 && change < previous_change) {
            const Scalar ratio = change / previous_change;
            if (change * ratio / (one - ratio) < tol) {
                converged = true;
                break;
            }
        }
        previous_change = change;
    }
    if (!converged) {
        throw NoConvergence("power iteration did not reach the tolerance in " + std::to_string(max_iterations) +
                            " iterations");
    }

    // Left eigenvector w = D^{-1} v when A D is symmetric; it gives a
    // quadratically accurate Rayleigh quotient and an exact deflation.
    RationalVector d;
    Vector<Scalar> w = x;
    const bool symmetrisable = detail::symmetriser(a, d);
    if (symmetrisable) {
        for (Eigen::Index i = 0; i < n; ++i) w(i) = x(i) / detail::to_scalar<Scalar>(d(i), ctx);
    }
    const Vector<Scalar> ax = cartan * x;
    EigenResult<Scalar> out;
    out.eigenvalue = symmetrisable ? Scalar(w.dot(ax) / w.dot(x)) : Scalar(ax(n - 1) / x(n - 1));
    out.vector = x;
    out.iterations = iterations;
    out.residual = detail::max_abs<Scalar>(Vector<Scalar>(ax - out.eigenvalue * x));
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(x(i) > zero)) throw NoConvergence("Perron vector is not strictly positive");
    }

    const Scalar four = detail::to_scalar<Scalar>(Rational(4), ctx);
    const Scalar two = detail::to_scalar<Scalar>(Rational(2), ctx);
    out.shifted_perron_root = (four - out.eigenvalue) / two;
    if (n == 1) {
        out.deflated_radius = zero;
        return out;
    }
    const Matrix<Scalar> deflated = shifted - out.shifted_perron_root * (x * w.transpose()) / w.dot(x);
    Vector<Scalar> z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        z(i) = detail::to_scalar<Scalar>(Rational(static_cast<std::int64_t>((i * 7 + 3) % 11) + 1, 5), ctx);
    }
    constexpr int kDeflationSteps = 400;
    constexpr int kAveragedSteps = 100;
    Scalar log_growth = zero;
    for (int k = 0; k < kDeflationSteps; ++k) {
        const Scalar before = detail::max_abs<Scalar>(z);
        z = deflated * z;
        const Scalar after = detail::max_abs<Scalar>(z);
        if (after == zero) {
            out.deflated_radius = zero;
            return out;
        }
        if (k >= kDeflationSteps - kAveragedSteps) {
            using std::log;
            log_growth += log(after / before);
        }
        z /= after;
    }
    using std::exp;
    out.deflated_radius = exp(log_growth / detail::to_scalar<Scalar>(Rational(kAveragedSteps), ctx));
    return out;
}

template <class Scalar>
EigenResult<Scalar> pf_power_iteration(const IntMatrix& a, const PrecisionContext& ctx, const Scalar& tol,
                                       int max_iterations = 200000) {
    return pf_power_iteration<Scalar>(RationalMatrix(a.cast<Rational>()), ctx, tol, max_iterations);
}

/// Closed-form Perron-Frobenius vector m(R) in Bourbaki order.
BigVector mass_vector_closed_form(const RootSystem& rs, const PrecisionContext& ctx);

/// The algebraic constant c with pi Gamma(R) = c m(R).
BigReal closed_form_constant(const RootSystem& rs, const PrecisionContext& ctx);

/// (Gamma(R, alpha_1), ..., Gamma(R, alpha_r)).
BigVector gamma_vector(const RootSystem& rs, const PrecisionContext& ctx);

/// (gamma(R, alpha_0), ..., gamma(R, alpha_r)); entry 0 is prod gamma(R, alpha_i)^(-n_i).
BigVector affine_gamma_vector(const RootSystem& rs, const PrecisionContext& ctx);

/// k(R) = prod_{i>=1} (n_i^v)^(n_i) as an exact integer.
std::int64_t mass_constant_k(const RootSystem& rs);

/// Gamma(R) is a Perron-Frobenius vector of A with eigenvalue lambda_min,
/// collinear with m(R), with pi Gamma(R) = c m(R). Theorem id "1.1".
VerificationReport verify_theorem_1_1(const RootSystem& rs, const PrecisionContext& ctx, const BigReal& tol);

/// gamma(R) = k(R)^(-1/h) delta^v, including the alpha_0 coordinate.
/// Theorem id "1.2" for simply laced types, "1.3" otherwise.
VerificationReport verify_theorem_1_2_1_3(const RootSystem& rs, const PrecisionContext& ctx, const BigReal& tol);

}  // namespace cartan_gamma

#endif
