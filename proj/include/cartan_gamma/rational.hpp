#ifndef CARTAN_GAMMA_RATIONAL_HPP
#define CARTAN_GAMMA_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace cartan_gamma {

using Rational = boost::rational<std::int64_t>;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p/q" or a short decimal such as "0.25".
Rational parse_rational(const std::string& text);

}  // namespace cartan_gamma

namespace Eigen {

template <>
struct NumTraits<cartan_gamma::Rational> : GenericNumTraits<cartan_gamma::Rational> {
    using Real = cartan_gamma::Rational;
    using NonInteger = cartan_gamma::Rational;
    using Nested = cartan_gamma::Rational;
    using Literal = cartan_gamma::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };

    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static Real highest() { return Real(INT64_MAX); }
    static Real lowest() { return Real(INT64_MIN + 1); }
    static int digits10() { return 18; }
};

}  // namespace Eigen

#endif
