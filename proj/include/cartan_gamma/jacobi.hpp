#ifndef CARTAN_GAMMA_JACOBI_HPP
#define CARTAN_GAMMA_JACOBI_HPP

#include <optional>
#include <vector>

#include "cartan_gamma/bigreal.hpp"
#include "cartan_gamma/gammawords.hpp"

namespace cartan_gamma {

/// Degree-one prime p = 1 mod N with a primitive root g. The residue field
/// is F_p and the trace is the identity.
struct PrimeSite {
    int N = 0;
    long p = 0;
    long g = 0;
};

inline constexpr long kSiteSearchCap = 10'000'000;

/// Smallest prime p >= p_min with p = 1 mod N and p not dividing 2N, with its
/// least primitive root. SearchExhausted past kSiteSearchCap.
PrimeSite find_site(int N, long p_min);

bool is_prime(long n);
/// Least primitive root of the prime p.
long primitive_root(long p);

/// Gauss or Jacobi sum together with the data that defines it.
struct CharacterSum {
    BigComplex value;
    PrimeSite site;
    /// Additive character x -> zeta_p^(c x).
    long additive = 1;
    /// Set for a Jacobi sum of a word.
    std::optional<GammaWord> word;
    /// Set for a single Gauss sum, the j of j/N.
    long residue = 0;
};

/// g(j/N) = -sum_{x in F_p^*} chi_j(x) zeta_p^(c x), where chi_j(g^k) = e^(2 pi i j k/N):
/// the N-th root of unity g^((p-1)/N) mod p is sent to e^(2 pi i/N).
/// DomainError if j = 0 mod N or c = 0 mod p.
CharacterSum gauss_sum(long j, const PrimeSite& site, const PrecisionContext& ctx, long additive = 1);

/// J(f) = prod g(j/N)^f(j); negative powers use g^-1 = conj(g)/p.
CharacterSum jacobi_sum(const GammaWord& f, const PrimeSite& site, const PrecisionContext& ctx, long additive = 1);

/// psi_f = p^(-k) J(f) for f in C(N, k). NotInC otherwise.
BigComplex hecke_value(const GammaWord& f, const PrimeSite& site, const PrecisionContext& ctx, long additive = 1);

/// Least m in 1..bound with |z^m - 1| < tol.
std::optional<long> root_of_unity_order(const BigComplex& z, long bound, const BigReal& tol);

/// sum_j c_j zeta_N^j.
BigComplex cyclotomic_value(const std::vector<long long>& coeffs, int N, const PrecisionContext& ctx);

/// Integers c_0..c_{phi(N)-1}, |c_j| <= max_coeff, with |z - sum c_j zeta_N^j| < tol,
/// found by LLL reduction of the real embedding lattice; nullopt if none.
std::optional<std::vector<long long>> recognize_cyclotomic(const BigComplex& z, int N, long long max_coeff,
                                                           const BigReal& tol, const PrecisionContext& ctx);

int euler_phi(int n);

}  // namespace cartan_gamma

#endif
