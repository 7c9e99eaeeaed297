#include "cartan_gamma/jacobi.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cartan_gamma/errors.hpp"

namespace cartan_gamma {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long pow_mod(long base, long e, long m) {
    __int128 result = 1;
    __int128 b = mod(base, m);
    while (e > 0) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<long>(result);
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Gauss sums for every residue of a site share these tables.
class GaussTables {
public:
    GaussTables(const PrimeSite& site, const PrecisionContext& ctx, long additive) : site_(site) {
        if (mod(additive, site.p) == 0) throw DomainError("additive character must be nontrivial");
        zeta_p_.reserve(site.p);
        for (long m = 0; m < site.p; ++m) zeta_p_.push_back(root_of_unity(m, site.p, ctx));
        zeta_n_.reserve(site.N);
        for (long m = 0; m < site.N; ++m) zeta_n_.push_back(root_of_unity(m, site.N, ctx));
        // x = g^k runs over F_p^*; store c x for each k.
        additive_of_index_.reserve(site.p - 1);
        long x = 1;
        for (long k = 0; k < site.p - 1; ++k) {
            additive_of_index_.push_back(mod(additive * x, site.p));
            x = x * site.g % site.p;
        }
    }

    BigComplex gauss(long j) const {
        if (mod(j, site_.N) == 0) throw DomainError("Gauss sum needs j != 0 mod N");
        BigComplex sum = zeta_p_[0] * BigReal(0);
        for (long k = 0; k < site_.p - 1; ++k) {
            sum += zeta_n_[mod(j * k, site_.N)] * zeta_p_[additive_of_index_[k]];
        }
        return -sum;
    }

private:
    PrimeSite site_;
    std::vector<BigComplex> zeta_p_;
    std::vector<BigComplex> zeta_n_;
    std::vector<long> additive_of_index_;
};

void check_site(const PrimeSite& site) {
    if (site.N < 2 || site.p < 3 || (site.p - 1) % site.N != 0 || !is_prime(site.p) || (2L * site.N) % site.p == 0) {
        throw DomainError("invalid prime site (N=" + std::to_string(site.N) + ", p=" + std::to_string(site.p) + ")");
    }
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

long primitive_root(long p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    const std::vector<long> factors = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool generator = true;
        for (long q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw DomainError("no primitive root modulo " + std::to_string(p));
}

PrimeSite find_site(int N, long p_min) {
    if (N < 2) throw DomainError("site modulus must be at least 2");
    // First candidate of the form 1 + mN at or above p_min.
    long p = p_min <= 1 ? 1 + N : 1 + ((p_min - 1 + N - 1) / N) * N;
    for (; p <= kSiteSearchCap; p += N) {
        if ((2L * N) % p != 0 && is_prime(p)) return {N, p, primitive_root(p)};
    }
    throw SearchExhausted("no prime = 1 mod " + std::to_string(N) + " in [" + std::to_string(p_min) + ", " +
                          std::to_string(kSiteSearchCap) + "]");
}

CharacterSum gauss_sum(long j, const PrimeSite& site, const PrecisionContext& ctx, long additive) {
    check_site(site);
    const GaussTables tables(site, ctx, additive);
    CharacterSum out;
    out.value = tables.gauss(j);
    out.site = site;
    out.additive = additive;
    out.residue = mod(j, site.N);
    return out;
}

CharacterSum jacobi_sum(const GammaWord& f, const PrimeSite& site, const PrecisionContext& ctx, long additive) {
    check_site(site);
    if (f.modulus() != site.N) throw DomainError("word modulus differs from the site modulus");
    const GaussTables tables(site, ctx, additive);
    const BigReal p(static_cast<long long>(site.p), ctx);
    BigComplex value{BigReal(1LL, ctx), BigReal(0LL, ctx)};
    for (const auto& [j, c] : f.coeffs()) {
        const BigComplex g = tables.gauss(j);
        // g^-1 = conj(g)/p since |g|^2 = p.
        const BigComplex base = c > 0 ? g : conj(g) * (BigReal(1) / p);
        value *= pow(base, static_cast<long>(c > 0 ? c : -c));
    }
    CharacterSum out;
    out.value = std::move(value);
    out.site = site;
    out.additive = additive;
    out.word = f;
    return out;
}

BigComplex hecke_value(const GammaWord& f, const PrimeSite& site, const PrecisionContext& ctx, long additive) {
    const MembershipVerdict verdict = classify(f);
    if (!verdict.in_C) throw NotInC("word " + f.to_string() + " is " + verdict.describe());
    const BigComplex j = jacobi_sum(f, site, ctx, additive).value;
    return j * pow(BigReal(static_cast<long long>(site.p), ctx), static_cast<long>(-verdict.k));
}

std::optional<long> root_of_unity_order(const BigComplex& z, long bound, const BigReal& tol) {
    BigComplex power = z;
    const BigComplex one{BigReal(1), BigReal(0)};
    for (long m = 1; m <= bound; ++m) {
        if (abs(power - one) < tol) return m;
        power *= z;
    }
    return std::nullopt;
}

int euler_phi(int n) {
    int out = 0;
    for (int k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++out;
    }
    return out;
}

BigComplex cyclotomic_value(const std::vector<long long>& coeffs, int N, const PrecisionContext& ctx) {
    BigComplex out{BigReal(0LL, ctx), BigReal(0LL, ctx)};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != 0) out += root_of_unity(static_cast<long>(j), N, ctx) * BigReal(coeffs[j]);
    }
    return out;
}

namespace {

// LLL reduction (Lenstra-Lenstra-Lovasz, delta = 3/4) of the rows of `basis`,
// with incremental Gram-Schmidt updates.
void lll_reduce(std::vector<BigVector>& b, const PrecisionContext& ctx) {
    const int n = static_cast<int>(b.size());
    const BigReal half(Rational(1, 2), ctx);
    const BigReal delta(Rational(3, 4), ctx);
    BigMatrix mu = BigMatrix::Zero(n, n);
    BigVector norms(n);
    std::vector<BigVector> star(n);
    for (int i = 0; i < n; ++i) {
        star[i] = b[i];
        for (int j = 0; j < i; ++j) {
            mu(i, j) = b[i].dot(star[j]) / norms(j);
            star[i] -= mu(i, j) * star[j];
        }
        norms(i) = star[i].squaredNorm();
    }

    auto size_reduce = [&](int k, int j) {
        if (!(abs(mu(k, j)) > half)) return;
        const BigReal q = round(mu(k, j));
        b[k] -= q * b[j];
        for (int l = 0; l < j; ++l) mu(k, l) -= q * mu(j, l);
        mu(k, j) -= q;
    };

    int k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        if (norms(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * norms(k - 1)) {
            for (int j = k - 2; j >= 0; --j) size_reduce(k, j);
            ++k;
            continue;
        }
        std::swap(b[k], b[k - 1]);
        const BigReal m = mu(k, k - 1);
        const BigReal total = norms(k) + m * m * norms(k - 1);
        mu(k, k - 1) = m * norms(k - 1) / total;
        norms(k) = norms(k - 1) * norms(k) / total;
        norms(k - 1) = total;
        for (int j = 0; j < k - 1; ++j) std::swap(mu(k - 1, j), mu(k, j));
        for (int i = k + 1; i < n; ++i) {
            const BigReal t = mu(i, k);
            mu(i, k) = mu(i, k - 1) - m * t;
            mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
        }
        k = std::max(k - 1, 1);
    }
}

}  // namespace

std::optional<std::vector<long long>> recognize_cyclotomic(const BigComplex& z, int N, long long max_coeff,
                                                           const BigReal& tol, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("cyclotomic modulus must be positive");
    const int d = euler_phi(N);
    const int dim = d + 1;
    // Row 0 carries z, row k carries zeta^(k-1); the last two columns are the
    // scaled real embedding, so a short vector with first entry +-1 encodes
    // z = -(+-1) sum c_k zeta^(k-1).
    const BigReal weight = power_of_ten(ctx.digits() - PrecisionContext::kGuardDigits, ctx);
    const PrecisionContext wide(3 * ctx.digits());
    const BigReal wide_zero(0LL, wide);
    std::vector<BigVector> basis(dim, BigVector::Zero(dim + 2));
    for (int k = 0; k < dim; ++k) {
        basis[k](k) = BigReal(1LL, wide);
        const BigComplex v = k == 0 ? z : root_of_unity(k - 1, N, ctx);
        basis[k](dim) = wide_zero + round(weight * v.re);
        basis[k](dim + 1) = wide_zero + round(weight * v.im);
    }
    lll_reduce(basis, wide);

    for (const BigVector& row : basis) {
        const long long lead = round(row(0)).to_long_long();
        if (lead != 1 && lead != -1) continue;
        std::vector<long long> coeffs(d);
        bool bounded = true;
        for (int k = 0; k < d; ++k) {
            coeffs[k] = -lead * round(row(k + 1)).to_long_long();
            if (coeffs[k] > max_coeff || coeffs[k] < -max_coeff) bounded = false;
        }
        if (!bounded) continue;
        if (abs(z - cyclotomic_value(coeffs, N, ctx)) < tol) return coeffs;
    }
    return std::nullopt;
}

}  // namespace cartan_gamma
