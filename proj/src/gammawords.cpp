#include "cartan_gamma/gammawords.hpp"

#include <numeric>
#include <utility>

#include "cartan_gamma/errors.hpp"
#include "cartan_gamma/specialfn.hpp"

namespace cartan_gamma {

namespace {

int reduce(long j, int modulus) {
    long r = j % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

}  // namespace

GammaWord::GammaWord(int modulus) : modulus_(modulus) {
    if (modulus < 2) throw DomainError("word modulus must be at least 2, got " + std::to_string(modulus));
}

GammaWord::GammaWord(int modulus, const std::map<int, std::int64_t>& coeffs) : GammaWord(modulus) {
    for (const auto& [j, c] : coeffs) {
        if (j <= 0 || j >= modulus) {
            throw DomainError("residue " + std::to_string(j) + " outside 1.." + std::to_string(modulus - 1));
        }
        add(j, c);
    }
}

std::int64_t GammaWord::operator[](long j) const {
    const auto it = coeffs_.find(reduce(j, modulus_));
    return it == coeffs_.end() ? 0 : it->second;
}

void GammaWord::add(long j, std::int64_t c) {
    const int r = reduce(j, modulus_);
    if (r == 0) throw DomainError("words live on nonzero residues");
    const std::int64_t value = (coeffs_[r] += c);
    if (value == 0) coeffs_.erase(r);
}

void GammaWord::check_compatible(const GammaWord& other) const {
    if (other.modulus_ != modulus_) {
        throw DomainError("word moduli differ: " + std::to_string(modulus_) + " vs " + std::to_string(other.modulus_));
    }
}

GammaWord& GammaWord::operator+=(const GammaWord& rhs) {
    check_compatible(rhs);
    for (const auto& [j, c] : rhs.coeffs_) add(j, c);
    return *this;
}

GammaWord operator-(const GammaWord& a) {
    GammaWord out(a.modulus_);
    for (const auto& [j, c] : a.coeffs_) out.coeffs_[j] = -c;
    return out;
}

std::string GammaWord::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [j, c] : coeffs_) {
        const std::int64_t magnitude = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "- ";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) out += std::to_string(magnitude);
        out += "[" + std::to_string(j) + "]";
    }
    return out;
}

nlohmann::ordered_json GammaWord::to_json() const {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [j, c] : coeffs_) coeffs[std::to_string(j)] = c;
    nlohmann::ordered_json out;
    out["N"] = modulus_;
    out["coeffs"] = coeffs;
    return out;
}

GammaWord GammaWord::from_json(const nlohmann::json& value) {
    try {
        GammaWord out(value.at("N").get<int>());
        for (const auto& [key, c] : value.at("coeffs").items()) {
            std::size_t used = 0;
            const int j = std::stoi(key, &used);
            if (used != key.size() || j <= 0 || j >= out.modulus_) throw DomainError("bad residue key '" + key + "'");
            out.add(j, c.get<std::int64_t>());
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed word JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed word JSON: non-numeric residue key");
    }
}

GammaWord word_of_root_system(const RootSystem& rs, int i) {
    GammaWord f(rs.coxeter_number());
    for (const IntVector& alpha : rs.positive_roots()) f.add(height(rs, alpha), -coroot_pairing(rs, alpha, i));
    return f;
}

GammaWord tilde(const GammaWord& f) {
    GammaWord out(f.modulus());
    for (const auto& [j, c] : f.coeffs()) {
        out.add(j, c);
        out.add(f.modulus() - j, -c);
    }
    return out;
}

Rational n_of(const GammaWord& f) {
    Rational out(0);
    for (const auto& [j, c] : f.coeffs()) out += Rational(j * c, f.modulus());
    return out;
}

GammaWord u_act(long u, const GammaWord& f) {
    const int n = f.modulus();
    if (std::gcd(reduce(u, n), n) != 1) {
        throw NotAUnit(std::to_string(u) + " is not a unit modulo " + std::to_string(n));
    }
    // (u f)(j) = f(u j): the coefficient at j moves to u^{-1} j.
    long inverse = 1;
    while (reduce(inverse * u, n) != 1) ++inverse;
    GammaWord out(n);
    for (const auto& [j, c] : f.coeffs()) out.add(static_cast<long>(j) * inverse, c);
    return out;
}

std::vector<long> units_mod(int modulus) {
    std::vector<long> out;
    for (long u = 1; u < modulus; ++u) {
        if (std::gcd(u, static_cast<long>(modulus)) == 1) out.push_back(u);
    }
    return out;
}

std::string MembershipVerdict::describe() const {
    if (in_C) return "in C(k=" + std::to_string(k) + ")";
    if (non_integer_n) return "not in C: n(f) = " + to_string(*non_integer_n) + " is not an integer";
    return "not in C: n(uf) != n(f) for u = " + std::to_string(failing_unit.value_or(0));
}

MembershipVerdict classify(const GammaWord& f) {
    MembershipVerdict verdict;
    const Rational n = n_of(f);
    if (!is_integer(n)) {
        verdict.non_integer_n = n;
        return verdict;
    }
    for (long u : units_mod(f.modulus())) {
        if (n_of(u_act(u, f)) != n) {
            verdict.failing_unit = u;
            return verdict;
        }
    }
    verdict.in_C = true;
    verdict.k = n.numerator();
    return verdict;
}

BigReal evaluate(const GammaWord& f, const PrecisionContext& ctx) {
    BigReal log_sum(0LL, ctx);
    for (const auto& [j, c] : f.coeffs()) {
        log_sum += BigReal(static_cast<long long>(c)) * lngamma(Rational(j, f.modulus()), ctx);
    }
    return exp(log_sum);
}

std::int64_t coroot_height_sum(const RootSystem& rs, int i) {
    std::int64_t total = 0;
    for (const IntVector& alpha : rs.positive_roots()) total += coroot_pairing(rs, alpha, i) * height(rs, alpha);
    return total;
}

}  // namespace cartan_gamma
