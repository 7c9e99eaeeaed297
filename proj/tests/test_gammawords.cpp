#include <doctest.h>

#include <numeric>

#include "cartan_gamma/errors.hpp"
#include "cartan_gamma/gammawords.hpp"
#include "cartan_gamma/specialfn.hpp"

using namespace cartan_gamma;

namespace {

BigReal rel(const BigReal& a, const BigReal& b) { return abs(a - b) / abs(b); }

GammaWord simply_laced_oracle(const RootSystem& rs, int i) {
    // Simply laced: (beta|alpha_i) is 1 if beta - alpha_i is a root, -1 if
    // beta + alpha_i is, 0 otherwise, and 2 for beta = alpha_i.
    const int h = rs.coxeter_number();
    GammaWord f(h);
    const IntVector ai = rs.simple_root(i);
    for (const IntVector& beta : rs.positive_roots()) {
        const auto ht = height(rs, beta);
        if (beta == ai) {
            f.add(ht, -2);
            continue;
        }
        const bool minus = rs.is_root(beta - ai);
        const bool plus = rs.is_root(beta + ai);
        if (minus) f.add(ht, -1);
        if (plus) f.add(ht, 1);
    }
    return f;
}

}  // namespace

TEST_CASE("E6 words in the printed format") {
    const RootSystem e6 = build_root_system({Family::E, 6});
    CHECK(word_of_root_system(e6, 1).to_string() == "- [1] + [3] - [6] - [8]");
    CHECK(tilde(word_of_root_system(e6, 1)).to_string() == "- [1] + [3] + [4] - [8] - [9] + [11]");
    CHECK(word_of_root_system(e6, 4).to_string() == "[1] - [2] - 2[3] + [4] + [5] - [6] - [7] + [9] - [10]");
    CHECK(word_of_root_system(e6, 1) == word_of_root_system(e6, 6));
    CHECK(word_of_root_system(e6, 3) == word_of_root_system(e6, 5));
    CHECK(n_of(word_of_root_system(e6, 2)) == Rational(-1));
    for (long u : units_mod(12)) CHECK(n_of(u_act(u, word_of_root_system(e6, 1))) == Rational(-1));
    for (int i = 1; i <= 6; ++i) {
        CHECK(n_of(word_of_root_system(e6, i)) == Rational(-1));
        CHECK(n_of(tilde(word_of_root_system(e6, i))) == Rational(0));
    }
}

TEST_CASE("A1 and the empty word") {
    const RootSystem a1 = build_root_system({Family::A, 1});
    const GammaWord f = word_of_root_system(a1, 1);
    CHECK(f.modulus() == 2);
    CHECK(f[1] == -2);
    CHECK(f.to_string() == "- 2[1]");
    CHECK(GammaWord(7).to_string() == "0");
    CHECK(GammaWord(5, {{3, 2}}).to_string() == "2[3]");
    CHECK(GammaWord(5, {{3, 0}}).empty());
    CHECK(GammaWord(5, {{3, 1}})[8] == 1);
    CHECK_THROWS_AS(GammaWord(5, {{5, 4}}), DomainError);
    GammaWord g(5);
    g.add(8, 2);
    g.add(-2, -2);
    CHECK_THROWS_AS(g.add(10, 7), DomainError);
    CHECK(g.empty());
}

TEST_CASE("evaluation fixtures") {
    const PrecisionContext ctx(60);
    const BigReal tol = primitive_tolerance(ctx);
    const RootSystem g2 = build_root_system({Family::G, 2});
    const BigReal cube = pow_rat(2, Rational(-2, 3), ctx);
    CHECK(rel(evaluate(word_of_root_system(g2, 1), ctx), cube / pi(ctx)) < tol);
    CHECK(rel(evaluate(word_of_root_system(g2, 2), ctx), sqrt(BigReal(3, ctx)) * cube / pi(ctx)) < tol);

    const RootSystem e6 = build_root_system({Family::E, 6});
    const BigReal expected = pow_rat(2, Rational(-1, 2), ctx) * pow_rat(3, Rational(-1, 4), ctx);
    CHECK(rel(evaluate(tilde(word_of_root_system(e6, 1)), ctx), expected) < tol);

    GammaWord direct(12, {{1, 1}, {5, 1}, {7, -1}, {11, -1}});
    BigReal product = gamma(Rational(1, 12), ctx) * gamma(Rational(5, 12), ctx) /
                      (gamma(Rational(7, 12), ctx) * gamma(Rational(11, 12), ctx));
    CHECK(rel(evaluate(direct, ctx), product) < tol);
    CHECK(evaluate(GammaWord(9), ctx) == BigReal(1));
}

TEST_CASE("tilde E8 word evaluates to gamma tilde products") {
    const PrecisionContext ctx(60);
    const RootSystem e8 = build_root_system({Family::E, 8});
    const GammaWord f = word_of_root_system(e8, 5);
    BigReal oracle(1, ctx);
    for (const auto& [j, c] : f.coeffs()) {
        if (2 * j == 30) continue;
        const Rational x(j, 30);
        const BigReal g = 2 * j < 30 ? gamma_tilde(x, ctx) : BigReal(1) / gamma_tilde(Rational(1) - x, ctx);
        oracle *= pow(g, static_cast<long>(c));
    }
    CHECK(rel(evaluate(tilde(f), ctx), oracle) < primitive_tolerance(ctx));
}

TEST_CASE("evaluation is a homomorphism") {
    const PrecisionContext ctx;
    const BigReal tol = primitive_tolerance(ctx);
    const GammaWord f(24, {{1, 2}, {5, -1}, {13, 3}});
    const GammaWord g(24, {{5, 1}, {7, -2}, {23, 1}});
    CHECK(rel(evaluate(f + g, ctx), evaluate(f, ctx) * evaluate(g, ctx)) < tol);
    CHECK(rel(evaluate(f - g, ctx), evaluate(f, ctx) / evaluate(g, ctx)) < tol);
    CHECK_THROWS_AS(f + GammaWord(12), DomainError);
}

TEST_CASE("unit action laws") {
    const GammaWord f(20, {{1, 3}, {3, -1}, {9, 2}, {10, 5}, {17, -4}});
    const auto units = units_mod(20);
    CHECK(units == std::vector<long>{1, 3, 7, 9, 11, 13, 17, 19});
    CHECK(u_act(1, f) == f);
    for (long u : units) {
        for (long v : units) CHECK(u_act(u, u_act(v, f)) == u_act((u * v) % 20, f));
        CHECK(u_act(u, f + tilde(f)) == u_act(u, f) + u_act(u, tilde(f)));
        CHECK(u_act(u, tilde(f)) == tilde(u_act(u, f)));
    }
    CHECK(u_act(-1, f) == u_act(19, f));
    CHECK(tilde(f) == f - u_act(-1, f));
    CHECK_THROWS_AS(u_act(4, f), NotAUnit);
    CHECK(n_of(f) + n_of(u_act(-1, f)) == Rational(3 - 1 + 2 + 5 - 4));
}

TEST_CASE("membership verdicts") {
    const GammaWord witness(5, {{1, 3}, {2, 1}});
    const MembershipVerdict v = classify(witness);
    CHECK(!v.in_C);
    CHECK(!v.non_integer_n.has_value());
    REQUIRE(v.failing_unit.has_value());
    CHECK(*v.failing_unit == 2);

    const MembershipVerdict half = classify(GammaWord(4, {{2, 1}}));
    CHECK(!half.in_C);
    REQUIRE(half.non_integer_n.has_value());
    CHECK(*half.non_integer_n == Rational(1, 2));

    const MembershipVerdict classical = classify(GammaWord(12, {{1, 1}, {2, 1}, {3, -1}}));
    CHECK(!classical.in_C);

    const MembershipVerdict sum = classify(GammaWord(7, {{1, 1}, {6, 1}}));
    CHECK(sum.in_C);
    CHECK(sum.k == 1);
    CHECK(!sum.describe().empty());
}

TEST_CASE("root system words over the battery") {
    for (const RootSystemLabel& label : default_battery()) {
        CAPTURE(label.to_string());
        const RootSystem rs = build_root_system(label);
        const int h = rs.coxeter_number();
        GammaWord total(h);
        for (int i = 0; i <= rs.rank(); ++i) {
            const GammaWord f = word_of_root_system(rs, i);
            CHECK(f.modulus() == h);
            CHECK(classify(f).in_C);
            CHECK(classify(tilde(f)).in_C);
            CHECK(classify(tilde(f)).k == 0);
            for (int m = 0; m < rs.marks()(i); ++m) total += f;
            if (i == 0) {
                CHECK(n_of(f) == Rational(h - 1));
                continue;
            }
            CHECK(coroot_height_sum(rs, i) == h);
            CHECK(classify(f).k == -1);
            if (label.simply_laced()) CHECK(f == simply_laced_oracle(rs, i));
        }
        // sum n_i f_i vanishes because sum n_i alpha_i = 0.
        CHECK(total.empty());
    }
}

TEST_CASE("diagram automorphisms preserve words") {
    const RootSystem a6 = build_root_system({Family::A, 6});
    for (int i = 1; i <= 6; ++i) CHECK(word_of_root_system(a6, i) == word_of_root_system(a6, 7 - i));
    const RootSystem d4 = build_root_system({Family::D, 4});
    CHECK(word_of_root_system(d4, 1) == word_of_root_system(d4, 3));
    CHECK(word_of_root_system(d4, 1) == word_of_root_system(d4, 4));
    const RootSystem e6 = build_root_system({Family::E, 6});
    CHECK(word_of_root_system(e6, 3) == word_of_root_system(e6, 5));
    CHECK(word_of_root_system(e6, 2) != word_of_root_system(e6, 4));
}

TEST_CASE("JSON round trip") {
    const RootSystem f4 = build_root_system({Family::F, 4});
    for (int i = 0; i <= 4; ++i) {
        const GammaWord f = word_of_root_system(f4, i);
        const auto j = f.to_json();
        CHECK(j["N"] == 12);
        CHECK(GammaWord::from_json(nlohmann::json::parse(j.dump())) == f);
    }
    CHECK_THROWS_AS(GammaWord::from_json(nlohmann::json::parse(R"({"N": 0, "coeffs": {}})")), DomainError);
    CHECK_THROWS_AS(GammaWord::from_json(nlohmann::json::parse(R"({"N": 6, "coeffs": {"x": 1}})")), DomainError);
    CHECK_THROWS_AS(GammaWord::from_json(nlohmann::json::parse(R"([1, 2])")), DomainError);
}
