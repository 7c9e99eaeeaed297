#ifndef CARTAN_GAMMA_ROOTKIT_HPP
#define CARTAN_GAMMA_ROOTKIT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cartan_gamma/rational.hpp"

namespace cartan_gamma {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemLabel {
    Family family;
    int rank;

    /// Parses "E8", "B6", "a3" (case-insensitive family letter).
    static RootSystemLabel parse(const std::string& text);
    std::string to_string() const;
    bool simply_laced() const noexcept;

    friend bool operator==(const RootSystemLabel&, const RootSystemLabel&) = default;
    friend auto operator<=>(const RootSystemLabel&, const RootSystemLabel&) = default;
};

/// Throws InvalidRank unless the rank is admissible for the family.
void validate(const RootSystemLabel& label);

/// A1-A12, B2-B12, C2-C12, D3-D12, E6, E7, E8, F4, G2 (classical ranks up to max_rank).
std::vector<RootSystemLabel> default_battery(int max_rank = 12);

/// Finite irreducible root system in Bourbaki numbering. Roots are integer
/// coefficient vectors over the simple roots; the Gram matrix is normalised so
/// that long roots have squared length 2. Simple indices are 1-based as in the
/// Dynkin diagram; index 0 denotes the affine root alpha_0 = -theta where an
/// operation allows it.
class RootSystem {
public:
    RootSystem(RootSystemLabel label, RationalMatrix gram);

    const RootSystemLabel& label() const noexcept { return label_; }
    int rank() const noexcept { return label_.rank; }
    const RationalMatrix& gram() const noexcept { return gram_; }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    const std::vector<IntVector>& positive_roots() const noexcept { return positive_; }
    const IntVector& highest_root() const noexcept { return positive_.back(); }
    int coxeter_number() const noexcept { return h_; }
    int dual_coxeter_number() const noexcept { return h_dual_; }
    /// (n_0, ..., n_r) with n_0 = 1.
    const IntVector& marks() const noexcept { return marks_; }
    /// (n_0^v, ..., n_r^v).
    const IntVector& comarks() const noexcept { return comarks_; }

    Rational inner(const IntVector& a, const IntVector& b) const;
    /// Coefficient vector of alpha_i for i in 1..r, of -theta for i = 0.
    IntVector simple_root(int i) const;
    bool is_root(const IntVector& v) const;

private:
    RootSystemLabel label_;
    RationalMatrix gram_;
    IntMatrix cartan_;
    std::vector<IntVector> positive_;
    std::map<std::vector<std::int64_t>, std::size_t> index_;
    int h_ = 0;
    int h_dual_ = 0;
    IntVector marks_;
    IntVector comarks_;
};

RootSystem build_root_system(const RootSystemLabel& label);

/// (alpha^v | alpha_i) = 2(alpha|alpha_i)/(alpha|alpha); i in 0..r.
std::int64_t coroot_pairing(const RootSystem& rs, const IntVector& alpha, int i);
/// (alpha | alpha_i^v) = 2(alpha|alpha_i)/(alpha_i|alpha_i); i in 0..r.
std::int64_t simple_coroot_pairing(const RootSystem& rs, const IntVector& alpha, int i);
/// Coefficient sum of a positive root, which equals (alpha|rho^v).
std::int64_t height(const RootSystem& rs, const IntVector& alpha);

/// Affine Cartan matrix with rows/columns indexed 0..r, entries
/// (alpha_i^v|alpha_j), alpha_0 = -theta. Its kernel is spanned by the marks.
IntMatrix affine_cartan_matrix(const RootSystem& rs);
/// Transpose of the affine Cartan matrix; its kernel is spanned by the comarks.
IntMatrix dual_affine_cartan_matrix(const RootSystem& rs);

}  // namespace cartan_gamma

#endif
