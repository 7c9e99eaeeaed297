#include "cartan_gamma/report.hpp"

#include <utility>

namespace cartan_gamma {

void VerificationReport::add(std::string label, BigReal residual) {
    labels.push_back(std::move(label));
    residuals.push_back(std::move(residual));
}

bool VerificationReport::pass() const {
    for (const BigReal& r : residuals) {
        if (!r.is_finite() || !(abs(r) < tolerance)) return false;
    }
    return true;
}

BigReal VerificationReport::max_residual() const {
    BigReal worst(0);
    for (const BigReal& r : residuals) {
        if (!r.is_finite()) return r;
        if (abs(r) > worst) worst = abs(r);
    }
    return worst;
}

int VerificationReport::worst_index() const {
    int worst = -1;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        if (!residuals[i].is_finite()) return static_cast<int>(i);
        if (worst < 0 || abs(residuals[i]) > abs(residuals[worst])) worst = static_cast<int>(i);
    }
    return worst;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json out;
    out["theorem"] = theorem;
    out["type"] = type;
    auto values = nlohmann::ordered_json::array();
    for (const BigReal& r : residuals) values.push_back(r.to_string(kResidualDigits));
    out["residuals"] = values;
    out["tolerance"] = tolerance.to_string(kResidualDigits);
    out["pass"] = pass();
    out["labels"] = labels;
    return out;
}

}  // namespace cartan_gamma
