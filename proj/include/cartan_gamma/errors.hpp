#ifndef CARTAN_GAMMA_ERRORS_HPP
#define CARTAN_GAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cartan_gamma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CARTAN_GAMMA_DEFINE_ERROR(Name)          \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

CARTAN_GAMMA_DEFINE_ERROR(InvalidRank);
CARTAN_GAMMA_DEFINE_ERROR(InvalidLabel);
CARTAN_GAMMA_DEFINE_ERROR(NotARoot);
CARTAN_GAMMA_DEFINE_ERROR(PoleError);
CARTAN_GAMMA_DEFINE_ERROR(DomainError);
CARTAN_GAMMA_DEFINE_ERROR(NotAUnit);
CARTAN_GAMMA_DEFINE_ERROR(NotInC);
CARTAN_GAMMA_DEFINE_ERROR(NoConvergence);
CARTAN_GAMMA_DEFINE_ERROR(QuadratureNotConverged);
CARTAN_GAMMA_DEFINE_ERROR(SearchExhausted);

#undef CARTAN_GAMMA_DEFINE_ERROR

}  // namespace cartan_gamma

#endif
