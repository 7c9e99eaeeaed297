#include "cartan_gamma/rootkit.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "cartan_gamma/errors.hpp"

namespace cartan_gamma {

namespace {

constexpr char kFamilyLetters[] = "ABCDEFG";

std::vector<std::int64_t> key_of(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

IntVector unit(int rank, int i) {
    IntVector e = IntVector::Zero(rank);
    e(i) = 1;
    return e;
}

std::int64_t exact(const Rational& q, const char* what) {
    if (!is_integer(q)) throw DomainError(std::string(what) + " is not an integer: " + to_string(q));
    return q.numerator();
}

// Squared lengths of the simple roots and Dynkin edges (0-based nodes).
std::pair<std::vector<Rational>, std::vector<std::pair<int, int>>> dynkin_data(const RootSystemLabel& label) {
    const int n = label.rank;
    std::vector<Rational> norms(n, Rational(2));
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int first, int last) {
        for (int i = first; i < last; ++i) edges.emplace_back(i, i + 1);
    };
    switch (label.family) {
        case Family::A:
            chain(0, n - 1);
            break;
        case Family::B:
            norms[n - 1] = 1;
            chain(0, n - 1);
            break;
        case Family::C:
            std::fill(norms.begin(), norms.end() - 1, Rational(1));
            chain(0, n - 1);
            break;
        case Family::D:
            chain(0, n - 2);
            edges.emplace_back(n - 3, n - 1);
            break;
        case Family::E:
            edges = {{0, 2}, {2, 3}, {1, 3}};
            chain(3, n - 1);
            break;
        case Family::F:
            norms = {2, 2, 1, 1};
            chain(0, 3);
            break;
        case Family::G:
            norms = {Rational(2, 3), 2};
            chain(0, 1);
            break;
    }
    return {norms, edges};
}

RationalMatrix gram_matrix(const RootSystemLabel& label) {
    const auto [norms, edges] = dynkin_data(label);
    const int n = label.rank;
    RationalMatrix gram = RationalMatrix::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i) gram(i, i) = norms[i];
    for (const auto& [i, j] : edges) {
        // A single bond between equal lengths gives -|a|^2/2; a multiple bond
        // always joins a long root of length 2, so the product is -1.
        const Rational value = norms[i] == norms[j] ? -norms[i] / 2 : Rational(-1);
        gram(i, j) = value;
        gram(j, i) = value;
    }
    return gram;
}

}  // namespace

RootSystemLabel RootSystemLabel::parse(const std::string& text) {
    if (text.size() < 2) throw InvalidLabel("root system label too short: '" + text + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const char* found = std::find(kFamilyLetters, kFamilyLetters + 7, letter);
    if (found == kFamilyLetters + 7) throw InvalidLabel("unknown root system family in '" + text + "'");
    const std::string digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 4) {
        throw InvalidLabel("bad rank in root system label '" + text + "'");
    }
    RootSystemLabel label{static_cast<Family>(found - kFamilyLetters), std::stoi(digits)};
    validate(label);
    return label;
}

std::string RootSystemLabel::to_string() const {
    return std::string(1, kFamilyLetters[static_cast<int>(family)]) + std::to_string(rank);
}

bool RootSystemLabel::simply_laced() const noexcept {
    return family == Family::A || family == Family::D || family == Family::E;
}

void validate(const RootSystemLabel& label) {
    const int n = label.rank;
    bool ok = false;
    switch (label.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw InvalidRank("no root system of type " + label.to_string());
}

std::vector<RootSystemLabel> default_battery(int max_rank) {
    std::vector<RootSystemLabel> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

RootSystem::RootSystem(RootSystemLabel label, RationalMatrix gram) : label_(label), gram_(std::move(gram)) {
    const int n = label_.rank;

    cartan_.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) cartan_(i, j) = exact(2 * gram_(i, j) / gram_(j, j), "Cartan entry");
    }

    // Closure under root strings: beta + alpha_i is a root iff q > 0, where
    // beta - p alpha_i, ..., beta + q alpha_i is the alpha_i-string through beta.
    std::vector<IntVector> layer;
    for (int i = 0; i < n; ++i) {
        IntVector e = unit(n, i);
        index_.emplace(key_of(e), positive_.size());
        positive_.push_back(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::vector<IntVector> next;
        for (const IntVector& beta : layer) {
            for (int i = 0; i < n; ++i) {
                std::int64_t p = 0;
                IntVector down = beta;
                while (true) {
                    down(i) -= 1;
                    if (!index_.contains(key_of(down))) break;
                    ++p;
                }
                const std::int64_t q = p - simple_coroot_pairing(*this, beta, i + 1);
                if (q <= 0) continue;
                IntVector up = beta;
                up(i) += 1;
                if (index_.emplace(key_of(up), positive_.size()).second) {
                    positive_.push_back(up);
                    next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    std::stable_sort(positive_.begin(), positive_.end(), [](const IntVector& a, const IntVector& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
    });
    index_.clear();
    for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(key_of(positive_[k]), k);

    h_ = static_cast<int>(highest_root().sum()) + 1;
    marks_.resize(n + 1);
    comarks_.resize(n + 1);
    marks_(0) = 1;
    comarks_(0) = 1;
    marks_.tail(n) = highest_root();
    for (int i = 0; i < n; ++i) comarks_(i + 1) = exact(Rational(marks_(i + 1)) * gram_(i, i) / 2, "comark");
    h_dual_ = static_cast<int>(comarks_.sum());
}

Rational RootSystem::inner(const IntVector& a, const IntVector& b) const {
    Rational out(0);
    for (int i = 0; i < rank(); ++i) {
        if (a(i) == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b(j) != 0) out += Rational(a(i) * b(j)) * gram_(i, j);
        }
    }
    return out;
}

IntVector RootSystem::simple_root(int i) const {
    if (i < 0 || i > rank()) {
        throw InvalidRank("simple index " + std::to_string(i) + " out of range for " + label_.to_string());
    }
    if (i == 0) return -highest_root();
    return unit(rank(), i - 1);
}

bool RootSystem::is_root(const IntVector& v) const {
    if (v.size() != rank()) return false;
    return index_.contains(key_of(v)) || index_.contains(key_of(-v));
}

RootSystem build_root_system(const RootSystemLabel& label) {
    validate(label);
    return RootSystem(label, gram_matrix(label));
}

namespace {

void require_root(const RootSystem& rs, const IntVector& alpha) {
    if (!rs.is_root(alpha)) throw NotARoot("vector is not a root of " + rs.label().to_string());
}

}  // namespace

std::int64_t coroot_pairing(const RootSystem& rs, const IntVector& alpha, int i) {
    require_root(rs, alpha);
    const IntVector simple = rs.simple_root(i);
    return exact(2 * rs.inner(alpha, simple) / rs.inner(alpha, alpha), "coroot pairing");
}

std::int64_t simple_coroot_pairing(const RootSystem& rs, const IntVector& alpha, int i) {
    const IntVector simple = rs.simple_root(i);
    return exact(2 * rs.inner(alpha, simple) / rs.inner(simple, simple), "coroot pairing");
}

std::int64_t height(const RootSystem& rs, const IntVector& alpha) {
    require_root(rs, alpha);
    if ((alpha.array() < 0).any()) throw NotARoot("height is defined for positive roots only");
    return alpha.sum();
}

IntMatrix affine_cartan_matrix(const RootSystem& rs) {
    const int n = rs.rank() + 1;
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out(i, j) = simple_coroot_pairing(rs, rs.simple_root(j), i);
    }
    return out;
}

IntMatrix dual_affine_cartan_matrix(const RootSystem& rs) { return affine_cartan_matrix(rs).transpose(); }

}  // namespace cartan_gamma
