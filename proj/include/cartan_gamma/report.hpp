#ifndef CARTAN_GAMMA_REPORT_HPP
#define CARTAN_GAMMA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cartan_gamma/bigreal.hpp"

namespace cartan_gamma {

/// Outcome of one verification: a list of labelled residuals compared
/// against a single tolerance. The verdict is derived, never stored.
struct VerificationReport {
    std::string theorem;
    std::string type;
    std::vector<std::string> labels;
    std::vector<BigReal> residuals;
    BigReal tolerance;

    void add(std::string label, BigReal residual);
    bool pass() const;
    BigReal max_residual() const;
    /// Index of the largest residual, or -1 when empty.
    int worst_index() const;

    /// {"theorem","type","residuals":[...],"tolerance","pass","labels":[...]}
    nlohmann::ordered_json to_json() const;
};

/// Residuals and tolerances are printed with this many significant digits.
inline constexpr int kResidualDigits = 6;

}  // namespace cartan_gamma

#endif
