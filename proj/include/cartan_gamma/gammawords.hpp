#ifndef CARTAN_GAMMA_GAMMAWORDS_HPP
#define CARTAN_GAMMA_GAMMAWORDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "cartan_gamma/bigreal.hpp"
#include "cartan_gamma/rational.hpp"
#include "cartan_gamma/rootkit.hpp"

namespace cartan_gamma {

/// Formal integer combination sum f(j)[j/N] over the residues 0 < j < N.
/// Zero coefficients are never stored.
class GammaWord {
public:
    explicit GammaWord(int modulus);
    GammaWord(int modulus, const std::map<int, std::int64_t>& coeffs);

    int modulus() const noexcept { return modulus_; }
    const std::map<int, std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    /// f(j/N), with j taken modulo N; zero for j = 0 mod N.
    std::int64_t operator[](long j) const;
    /// f(j/N) += c.
    void add(long j, std::int64_t c);

    GammaWord& operator+=(const GammaWord& rhs);
    friend GammaWord operator+(GammaWord a, const GammaWord& b) { return a += b; }
    friend GammaWord operator-(const GammaWord& a);
    friend GammaWord operator-(const GammaWord& a, const GammaWord& b) { return a + (-b); }
    friend bool operator==(const GammaWord&, const GammaWord&) = default;

    /// "- [1] + [3] - [6] - [8]"; "0" for the empty word.
    std::string to_string() const;
    /// {"N": N, "coeffs": {"j": f(j), ...}}
    nlohmann::ordered_json to_json() const;
    static GammaWord from_json(const nlohmann::json& value);

private:
    void check_compatible(const GammaWord& other) const;

    int modulus_;
    std::map<int, std::int64_t> coeffs_;
};

/// f_{R,i}(j/h) = -sum over positive roots of height j of (alpha^v|alpha_i),
/// modulus h. i ranges over 1..r; i = 0 gives the word of alpha_0 = -theta.
GammaWord word_of_root_system(const RootSystem& rs, int i);

/// f~(j) = f(j) - f(N - j).
GammaWord tilde(const GammaWord& f);

/// n(f) = sum (j/N) f(j), exact.
Rational n_of(const GammaWord& f);

/// (u f)(j) = f(u j mod N). NotAUnit unless gcd(u, N) = 1.
GammaWord u_act(long u, const GammaWord& f);

/// Units of Z/N in increasing order.
std::vector<long> units_mod(int modulus);

struct MembershipVerdict {
    bool in_C = false;
    /// n(f) when in_C.
    std::int64_t k = 0;
    /// Set when n(f) is not an integer.
    std::optional<Rational> non_integer_n;
    /// First unit u with n(u f) != n(f).
    std::optional<long> failing_unit;

    std::string describe() const;
};

MembershipVerdict classify(const GammaWord& f);

/// prod Gamma(j/N)^f(j), accumulated as sum f(j) log Gamma(j/N).
BigReal evaluate(const GammaWord& f, const PrecisionContext& ctx);

/// sum over positive roots of (alpha_i|alpha^v) ht(alpha); equals h.
std::int64_t coroot_height_sum(const RootSystem& rs, int i);

}  // namespace cartan_gamma

#endif
