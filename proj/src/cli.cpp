#include "cartan_gamma/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartan_gamma/errors.hpp"
#include "cartan_gamma/gammawords.hpp"
#include "cartan_gamma/jacobi.hpp"
#include "cartan_gamma/report.hpp"
#include "cartan_gamma/rootkit.hpp"
#include "cartan_gamma/selberg.hpp"
#include "cartan_gamma/specialfn.hpp"
#include "cartan_gamma/spectra.hpp"

namespace cartan_gamma::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kCsvDigits = 30;

struct Config {
    std::string command;
    std::string type;
    std::optional<int> digits;
    std::optional<std::string> tol;
    std::string format = "text";
    std::string out_path;
    std::string theorem;
    long prime = 0;
    long pmin = 2;
    std::string word;
    std::string grid = "all";
    std::string alpha;
    std::string beta;
    std::string rho = "0";
    int n = 1;
};

// Raised for argument problems detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    Json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::ostringstream text;
    bool ok = true;
};

struct Session {
    Config cfg;
    PrecisionContext ctx;
    BigReal tol;

    std::string num(const BigReal& x) const { return x.to_string(cfg.format == "csv" ? kCsvDigits : ctx.digits()); }
    std::string small(const BigReal& x) const { return x.to_string(kResidualDigits); }
};

BigReal parse_tolerance(const std::string& text, const PrecisionContext& ctx) {
    BigReal value;
    std::size_t used = 0;
    int exponent = 0;
    bool integral = false;
    try {
        exponent = std::stoi(text, &used);
        integral = used == text.size();
    } catch (const std::exception&) {
        integral = false;
    }
    if (integral) {
        value = power_of_ten(exponent, ctx);
    } else {
        value = BigReal::parse(text, ctx);
    }
    if (!(value.sign() > 0) || !value.is_finite()) throw UsageError("tolerance must be positive: '" + text + "'");
    return value;
}

RootSystemLabel require_type(const Config& cfg) {
    if (cfg.type.empty()) throw UsageError(cfg.command + " needs --type");
    return RootSystemLabel::parse(cfg.type);
}

std::vector<RootSystemLabel> types_or_battery(const Config& cfg) {
    if (cfg.type.empty()) return default_battery();
    return {RootSystemLabel::parse(cfg.type)};
}

template <class Vec>
Json int_array(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(static_cast<long long>(v(i)));
    return out;
}

Json int_matrix(const IntMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(int_array(IntVector(m.row(i).transpose())));
    return out;
}

Json big_array(const Session& s, const BigVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(s.num(v(i)));
    return out;
}

std::string complex_text(const Session& s, const BigComplex& z) {
    return s.num(z.re) + (z.im.sign() < 0 ? " - " : " + ") + s.num(abs(z.im)) + " i";
}

std::string join_ints(const IntVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v(i));
    return out + ")";
}

std::string join_big(const Session& s, const BigVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + s.num(v(i));
    return out + ")";
}

// ---------------------------------------------------------------- reports

VerificationReport structure_report(const RootSystem& rs) {
    VerificationReport r;
    r.theorem = "roots";
    r.type = rs.label().to_string();
    r.tolerance = BigReal(1);
    const long long count = static_cast<long long>(rs.positive_roots().size());
    r.add("positive roots - rh/2", abs(BigReal(count - rs.rank() * rs.coxeter_number() / 2)));
    r.add("sum marks - h", abs(BigReal(static_cast<long long>(rs.marks().sum()) - rs.coxeter_number())));
    r.add("sum comarks - h_dual",
          abs(BigReal(static_cast<long long>(rs.comarks().sum()) - rs.dual_coxeter_number())));
    const IntVector kernel = affine_cartan_matrix(rs) * rs.marks();
    const IntVector dual_kernel = dual_affine_cartan_matrix(rs) * rs.comarks();
    r.add("affine cartan * marks", BigReal(static_cast<long long>(kernel.cwiseAbs().maxCoeff())));
    r.add("dual affine cartan * comarks", BigReal(static_cast<long long>(dual_kernel.cwiseAbs().maxCoeff())));
    long long bad_heights = 0;
    for (const IntVector& alpha : rs.positive_roots()) {
        const auto ht = height(rs, alpha);
        if (ht < 1 || ht > rs.coxeter_number() - 1) ++bad_heights;
    }
    r.add("heights outside 1..h-1", BigReal(bad_heights));
    return r;
}

VerificationReport pf_report(const RootSystem& rs, const Session& s, const BigReal& pf_tol) {
    VerificationReport r;
    r.theorem = "pf";
    r.type = rs.label().to_string();
    r.tolerance = BigReal(10) * pf_tol;
    const auto result = pf_power_iteration<BigReal>(rs.cartan(), s.ctx, pf_tol);
    BigVector m = mass_vector_closed_form(rs, s.ctx);
    m /= BigReal(m(m.size() - 1));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        r.add("vector[" + std::to_string(i + 1) + "]", abs(result.vector(i) - m(i)));
    }
    r.add("eigenvalue", abs(result.eigenvalue - lambda_min(rs, s.ctx)));
    r.add("simple", BigReal(result.simple() ? 0 : 1));
    return r;
}

VerificationReport membership_report(const RootSystem& rs) {
    VerificationReport r;
    r.theorem = "4.2";
    r.type = rs.label().to_string();
    r.tolerance = BigReal(1);
    for (int i = 1; i <= rs.rank(); ++i) {
        const GammaWord f = word_of_root_system(rs, i);
        const MembershipVerdict v = classify(f);
        const MembershipVerdict vt = classify(tilde(f));
        r.add("f[" + std::to_string(i) + "] in C(-1)", BigReal(v.in_C && v.k == -1 ? 0 : 1));
        r.add("tilde f[" + std::to_string(i) + "] in C(0)", BigReal(vt.in_C && vt.k == 0 ? 0 : 1));
    }
    return r;
}

VerificationReport coroot_sum_report(const RootSystem& rs) {
    VerificationReport r;
    r.theorem = "4.4";
    r.type = rs.label().to_string();
    r.tolerance = BigReal(1);
    for (int i = 1; i <= rs.rank(); ++i) {
        r.add("sum[" + std::to_string(i) + "] - h",
              abs(BigReal(static_cast<long long>(coroot_height_sum(rs, i) - rs.coxeter_number()))));
    }
    return r;
}

VerificationReport special_function_report(const Session& s) {
    VerificationReport r;
    r.theorem = "identities";
    r.type = "gamma";
    r.tolerance = primitive_tolerance(s.ctx);
    const BigReal p = pi(s.ctx);
    for (const Rational& x : {Rational(1, 12), Rational(7, 30), Rational(1, 3), Rational(5, 8), Rational(11, 360)}) {
        const BigReal lhs = gamma(x, s.ctx) * gamma(Rational(1) - x, s.ctx) * sin_pi(x, s.ctx) / p;
        r.add("reflection x=" + to_string(x), abs(lhs - BigReal(1)));
        for (int n : {2, 3, 5}) {
            BigReal product(1LL, s.ctx);
            for (int i = 0; i < n; ++i) product *= gamma(x + Rational(i, n), s.ctx);
            const BigReal rhs = pow_rat(BigReal(2) * p, Rational(n - 1, 2), s.ctx) *
                                pow_rat(n, Rational(1, 2) - n * x, s.ctx) * gamma(n * x, s.ctx);
            r.add("multiplication n=" + std::to_string(n) + " x=" + to_string(x), abs(product / rhs - BigReal(1)));
        }
    }
    return r;
}

void emit_reports(const std::vector<VerificationReport>& reports, const Session& s, Output& o) {
    o.json = Json::array();
    o.csv_header = {"theorem", "type", "label", "residual", "tolerance", "pass"};
    std::size_t passed = 0;
    for (const VerificationReport& r : reports) {
        o.json.push_back(r.to_json());
        for (std::size_t i = 0; i < r.residuals.size(); ++i) {
            const bool ok = r.residuals[i].is_finite() && abs(r.residuals[i]) < r.tolerance;
            o.csv_rows.push_back({r.theorem, r.type, r.labels[i], s.small(r.residuals[i]), s.small(r.tolerance),
                                  ok ? "true" : "false"});
        }
        const bool pass = r.pass();
        if (pass) ++passed;
        o.ok = o.ok && pass;
        o.text << (pass ? "PASS " : "FAIL ") << r.theorem << ' ' << r.type << "  max residual "
               << s.small(r.max_residual()) << "  tol " << s.small(r.tolerance);
        if (!pass && r.worst_index() >= 0) {
            o.text << "  worst " << r.labels[r.worst_index()] << " = " << s.small(r.residuals[r.worst_index()]);
        }
        o.text << '\n';
    }
    o.text << passed << "/" << reports.size() << " reports passed\n";
}

// ---------------------------------------------------------------- commands

void cmd_roots(const Session& s, Output& o) {
    const RootSystem rs = build_root_system(require_type(s.cfg));
    Json roots = Json::array();
    for (const IntVector& alpha : rs.positive_roots()) roots.push_back(int_array(alpha));
    o.json["type"] = rs.label().to_string();
    o.json["rank"] = rs.rank();
    o.json["h"] = rs.coxeter_number();
    o.json["h_dual"] = rs.dual_coxeter_number();
    o.json["positive_root_count"] = rs.positive_roots().size();
    o.json["highest_root"] = int_array(rs.highest_root());
    o.json["marks"] = int_array(rs.marks());
    o.json["comarks"] = int_array(rs.comarks());
    o.json["cartan"] = int_matrix(rs.cartan());
    o.json["affine_cartan"] = int_matrix(affine_cartan_matrix(rs));
    o.json["positive_roots"] = roots;

    o.csv_header = {"key", "value"};
    o.csv_rows = {{"type", rs.label().to_string()},
                  {"rank", std::to_string(rs.rank())},
                  {"h", std::to_string(rs.coxeter_number())},
                  {"h_dual", std::to_string(rs.dual_coxeter_number())},
                  {"positive_root_count", std::to_string(rs.positive_roots().size())},
                  {"highest_root", join_ints(rs.highest_root())},
                  {"marks", join_ints(rs.marks())},
                  {"comarks", join_ints(rs.comarks())}};

    o.text << "type " << rs.label().to_string() << "  rank " << rs.rank() << "  h " << rs.coxeter_number()
           << "  h_dual " << rs.dual_coxeter_number() << "  positive roots " << rs.positive_roots().size() << '\n'
           << "highest root " << join_ints(rs.highest_root()) << '\n'
           << "marks   " << join_ints(rs.marks()) << '\n'
           << "comarks " << join_ints(rs.comarks()) << '\n'
           << "cartan\n"
           << rs.cartan() << '\n'
           << "affine cartan\n"
           << affine_cartan_matrix(rs) << '\n';
    o.ok = structure_report(rs).pass();
}

void cmd_pf(const Session& s, Output& o) {
    const RootSystem rs = build_root_system(require_type(s.cfg));
    const BigReal pf_tol = s.cfg.tol ? s.tol : default_pf_tolerance(s.ctx);
    const auto result = pf_power_iteration<BigReal>(rs.cartan(), s.ctx, pf_tol);
    const VerificationReport check = pf_report(rs, s, pf_tol);
    o.json["type"] = rs.label().to_string();
    o.json["lambda"] = s.num(result.eigenvalue);
    o.json["vector"] = big_array(s, result.vector);
    o.json["iterations"] = result.iterations;
    o.json["residual"] = s.small(result.residual);
    o.json["lambda_min"] = s.num(lambda_min(rs, s.ctx));
    o.json["closed_form_agreement"] = s.small(check.max_residual());
    o.json["simple"] = result.simple();
    o.json["tolerance"] = s.small(pf_tol);

    o.csv_header = {"index", "component"};
    for (Eigen::Index i = 0; i < result.vector.size(); ++i) {
        o.csv_rows.push_back({std::to_string(i + 1), s.num(result.vector(i))});
    }
    o.csv_rows.push_back({"lambda", s.num(result.eigenvalue)});

    o.text << "type " << rs.label().to_string() << "  iterations " << result.iterations << '\n'
           << "lambda     " << s.num(result.eigenvalue) << '\n'
           << "lambda_min " << s.num(lambda_min(rs, s.ctx)) << '\n'
           << "vector     " << join_big(s, result.vector) << '\n'
           << "residual " << s.small(result.residual) << "  closed-form agreement " << s.small(check.max_residual())
           << "  simple " << (result.simple() ? "yes" : "no") << '\n';
    o.ok = check.pass();
}

void cmd_gamma(const Session& s, Output& o) {
    const RootSystem rs = build_root_system(require_type(s.cfg));
    const BigVector g = gamma_vector(rs, s.ctx);
    const BigVector affine = affine_gamma_vector(rs, s.ctx);
    const BigVector m = mass_vector_closed_form(rs, s.ctx);
    const BigReal c = closed_form_constant(rs, s.ctx);
    o.json["type"] = rs.label().to_string();
    o.json["Gamma"] = big_array(s, g);
    o.json["mass_vector"] = big_array(s, m);
    o.json["constant"] = s.num(c);
    o.json["gamma"] = big_array(s, affine);
    o.json["k"] = mass_constant_k(rs);
    o.json["h"] = rs.coxeter_number();

    o.csv_header = {"index", "Gamma", "mass", "gamma"};
    o.csv_rows.push_back({"0", "", "", s.num(affine(0))});
    for (int i = 1; i <= rs.rank(); ++i) {
        o.csv_rows.push_back({std::to_string(i), s.num(g(i - 1)), s.num(m(i - 1)), s.num(affine(i))});
    }

    o.text << "type " << rs.label().to_string() << "  pi*Gamma(R) = c*m(R), c = " << s.num(c) << '\n'
           << "Gamma(R) " << join_big(s, g) << '\n'
           << "m(R)     " << join_big(s, m) << '\n'
           << "gamma(R) " << join_big(s, affine) << "  (alpha_0 first)\n"
           << "k(R) " << mass_constant_k(rs) << '\n';
}

void cmd_words(const Session& s, Output& o) {
    const RootSystem rs = build_root_system(require_type(s.cfg));
    o.json["type"] = rs.label().to_string();
    o.json["N"] = rs.coxeter_number();
    Json words = Json::array();
    o.csv_header = {"i", "word", "tilde"};
    for (int i = 1; i <= rs.rank(); ++i) {
        const GammaWord f = word_of_root_system(rs, i);
        const GammaWord ft = tilde(f);
        Json entry;
        entry["i"] = i;
        entry["word"] = f.to_json();
        entry["text"] = f.to_string();
        entry["tilde"] = ft.to_json();
        entry["tilde_text"] = ft.to_string();
        words.push_back(entry);
        o.csv_rows.push_back({std::to_string(i), f.to_string(), ft.to_string()});
        o.text << "f" << i << " = " << f.to_string() << '\n';
    }
    o.json["words"] = words;
}

void cmd_classify(const Session& s, Output& o) {
    o.csv_header = {"i", "word", "n", "verdict", "tilde_verdict"};
    auto verdict_json = [](const MembershipVerdict& v) {
        Json out;
        out["in_C"] = v.in_C;
        out["k"] = v.in_C ? Json(v.k) : Json(nullptr);
        out["witness"] = v.in_C ? Json(nullptr) : Json(v.describe());
        return out;
    };
    if (!s.cfg.word.empty()) {
        if (!s.cfg.type.empty()) throw UsageError("classify takes either --type or --word");
        const GammaWord f = GammaWord::from_json(nlohmann::json::parse(s.cfg.word));
        const MembershipVerdict v = classify(f);
        o.json["word"] = f.to_json();
        o.json["n"] = to_string(n_of(f));
        o.json["verdict"] = verdict_json(v);
        o.csv_rows.push_back({"", f.to_string(), to_string(n_of(f)), v.describe(), ""});
        o.text << f.to_string() << "  n(f) = " << to_string(n_of(f)) << "  " << v.describe() << '\n';
        return;
    }
    const RootSystem rs = build_root_system(require_type(s.cfg));
    o.json["type"] = rs.label().to_string();
    o.json["N"] = rs.coxeter_number();
    Json entries = Json::array();
    for (int i = 1; i <= rs.rank(); ++i) {
        const GammaWord f = word_of_root_system(rs, i);
        const MembershipVerdict v = classify(f);
        const MembershipVerdict vt = classify(tilde(f));
        const bool ok = v.in_C && v.k == -1 && vt.in_C && vt.k == 0;
        o.ok = o.ok && ok;
        Json entry;
        entry["i"] = i;
        entry["word"] = f.to_json();
        entry["text"] = f.to_string();
        entry["n"] = to_string(n_of(f));
        entry["verdict"] = verdict_json(v);
        entry["tilde_verdict"] = verdict_json(vt);
        entries.push_back(entry);
        o.csv_rows.push_back({std::to_string(i), f.to_string(), to_string(n_of(f)), v.describe(), vt.describe()});
        o.text << "f" << i << " = " << f.to_string() << "  " << v.describe() << "  tilde " << vt.describe()
               << (ok ? "" : "  UNEXPECTED") << '\n';
    }
    o.json["words"] = entries;
}

void cmd_verify(const Session& s, Output& o) {
    const std::string& t = s.cfg.theorem;
    std::vector<VerificationReport> reports;
    for (const RootSystemLabel& label : types_or_battery(s.cfg)) {
        const RootSystem rs = build_root_system(label);
        if (t == "all") {
            reports.push_back(structure_report(rs));
            reports.push_back(pf_report(rs, s, default_pf_tolerance(s.ctx)));
        }
        if (t == "1.1" || t == "all") reports.push_back(verify_theorem_1_1(rs, s.ctx, s.tol));
        if (t == "1.2" || t == "1.3" || t == "all") reports.push_back(verify_theorem_1_2_1_3(rs, s.ctx, s.tol));
        if (t == "4.2" || t == "all") reports.push_back(membership_report(rs));
        if (t == "4.4" || t == "all") reports.push_back(coroot_sum_report(rs));
    }
    emit_reports(reports, s, o);
}

void cmd_identities(const Session& s, Output& o) {
    emit_reports({trig_identities_suite(s.ctx), special_function_report(s)}, s, o);
}

void cmd_jacobi(const Session& s, Output& o) {
    std::vector<std::pair<std::string, GammaWord>> words;
    if (!s.cfg.word.empty()) {
        if (!s.cfg.type.empty()) throw UsageError("jacobi takes either --type or --word");
        words.emplace_back("word", GammaWord::from_json(nlohmann::json::parse(s.cfg.word)));
    } else {
        const RootSystem rs = build_root_system(require_type(s.cfg));
        for (int i = 1; i <= rs.rank(); ++i) {
            const GammaWord f = word_of_root_system(rs, i);
            words.emplace_back("f" + std::to_string(i), f);
            words.emplace_back("tilde f" + std::to_string(i), tilde(f));
        }
    }
    const int modulus = words.front().second.modulus();
    PrimeSite site;
    if (s.cfg.prime != 0) {
        if (!is_prime(s.cfg.prime) || (s.cfg.prime - 1) % modulus != 0 || (2L * modulus) % s.cfg.prime == 0) {
            throw UsageError("--prime must be a prime = 1 mod " + std::to_string(modulus) + " not dividing 2N");
        }
        site = {modulus, s.cfg.prime, primitive_root(s.cfg.prime)};
    } else {
        site = find_site(modulus, s.cfg.pmin);
    }

    const BigReal recognition_tol = primitive_tolerance(s.ctx);
    const long order_bound = 4L * modulus * modulus;
    o.json = Json::array();
    o.csv_header = {"name", "N", "p", "word", "J_re", "J_im", "psi_re", "psi_im", "psi_abs_residual",
                    "additive_residual", "order"};
    o.text << "site N=" << site.N << " p=" << site.p << " g=" << site.g << '\n';
    for (const auto& [name, f] : words) {
        const CharacterSum j = jacobi_sum(f, site, s.ctx);
        Json entry;
        entry["name"] = name;
        entry["N"] = site.N;
        entry["p"] = site.p;
        entry["word"] = f.to_json();
        entry["J"] = Json::array({s.num(j.value.re), s.num(j.value.im)});
        std::vector<std::string> row = {name, std::to_string(site.N), std::to_string(site.p), f.to_string(),
                                        s.num(j.value.re), s.num(j.value.im)};
        const auto j_coeffs = recognize_cyclotomic(j.value, site.N, 1'000'000, recognition_tol, s.ctx);
        entry["cyclotomic"] = j_coeffs ? Json(*j_coeffs) : Json(nullptr);
        const MembershipVerdict v = classify(f);
        o.text << name << " = " << f.to_string() << "\n  J   = " << complex_text(s, j.value) << '\n';
        if (!v.in_C) {
            entry["psi"] = nullptr;
            entry["psi_cyclotomic"] = nullptr;
            entry["verdict"] = v.describe();
            row.insert(row.end(), {"", "", "", "", ""});
            o.text << "  " << v.describe() << '\n';
        } else {
            const BigComplex psi = hecke_value(f, site, s.ctx);
            const BigComplex psi2 = hecke_value(f, site, s.ctx, 2);
            const BigReal magnitude = abs(abs(psi) - BigReal(1));
            const BigReal independence = abs(psi - psi2);
            const auto order = root_of_unity_order(psi, order_bound, recognition_tol);
            const auto coeffs = recognize_cyclotomic(psi, site.N, 1'000'000, recognition_tol, s.ctx);
            const bool ok = magnitude < s.tol && independence < s.tol;
            o.ok = o.ok && ok;
            entry["k"] = v.k;
            entry["psi"] = Json::array({s.num(psi.re), s.num(psi.im)});
            entry["psi_cyclotomic"] = coeffs ? Json(*coeffs) : Json(nullptr);
            entry["psi_abs_residual"] = s.small(magnitude);
            entry["additive_residual"] = s.small(independence);
            entry["order"] = order ? Json(*order) : Json("none found <= " + std::to_string(order_bound));
            entry["pass"] = ok;
            row.insert(row.end(), {s.num(psi.re), s.num(psi.im), s.small(magnitude), s.small(independence),
                                   order ? std::to_string(*order) : ""});
            o.text << "  psi = " << complex_text(s, psi) << "  (k=" << v.k << ")\n"
                   << "  |psi|-1 " << s.small(magnitude) << "  additive-character change " << s.small(independence)
                   << "  order " << (order ? std::to_string(*order) : "none found") << (ok ? "" : "  FAIL") << '\n';
        }
        o.json.push_back(entry);
        o.csv_rows.push_back(row);
    }
}

void cmd_selberg(const Session& s, Output& o) {
    const std::string& grid = s.cfg.grid;
    if (grid != "real" && grid != "complex" && grid != "all") throw UsageError("--grid must be real, complex or all");
    constexpr double kRealThreshold = 1e-8;
    constexpr double kComplexThreshold = 1e-6;
    std::vector<std::pair<std::string, SelbergParams>> cases;
    if (!s.cfg.alpha.empty() || !s.cfg.beta.empty()) {
        if (s.cfg.alpha.empty() || s.cfg.beta.empty()) throw UsageError("--alpha and --beta go together");
        const SelbergParams p{parse_rational(s.cfg.alpha), parse_rational(s.cfg.beta), parse_rational(s.cfg.rho),
                              s.cfg.n};
        if (grid != "complex") cases.emplace_back("real", p);
        const bool complex_domain = p.n == 1 && p.alpha > Rational(0) && p.beta > Rational(0) &&
                                    p.alpha + p.beta < Rational(1);
        if (grid == "complex" || (grid == "all" && complex_domain)) cases.emplace_back("complex", p);
    } else {
        if (grid != "complex") {
            for (const SelbergParams& p : default_real_grid()) cases.emplace_back("real", p);
        }
        if (grid != "real") {
            for (const SelbergParams& p : default_complex_grid()) cases.emplace_back("complex", p);
        }
    }
    o.json = Json::array();
    o.csv_header = {"kind", "alpha", "beta", "rho", "n", "closed", "quadrature", "relative_error", "threshold", "pass"};
    for (const auto& [kind, p] : cases) {
        const bool real = kind == "real";
        const BigReal closed = real ? selberg_real_closed(p, s.ctx) : selberg_complex_closed(p, s.ctx);
        const BigReal quad = real ? selberg_real_quadrature(p, s.ctx) : selberg_complex_quadrature(p, s.ctx);
        const double rel = abs((quad - closed) / closed).to_double();
        const double threshold = real ? kRealThreshold : kComplexThreshold;
        const bool ok = rel < threshold;
        o.ok = o.ok && ok;
        std::ostringstream rel_text;
        rel_text << std::setprecision(3) << rel;
        std::ostringstream thr_text;
        thr_text << threshold;
        Json entry;
        entry["kind"] = kind;
        entry["alpha"] = to_string(p.alpha);
        entry["beta"] = to_string(p.beta);
        entry["rho"] = to_string(p.rho);
        entry["n"] = p.n;
        entry["closed"] = s.num(closed);
        entry["quadrature"] = quad.to_string(17);
        entry["relative_error"] = rel_text.str();
        entry["threshold"] = thr_text.str();
        entry["pass"] = ok;
        o.json.push_back(entry);
        o.csv_rows.push_back({kind, to_string(p.alpha), to_string(p.beta), to_string(p.rho), std::to_string(p.n),
                              s.num(closed), quad.to_string(17), rel_text.str(), thr_text.str(),
                              ok ? "true" : "false"});
        o.text << (ok ? "PASS " : "FAIL ") << kind << ' ' << p.to_string() << "  closed " << closed.to_string(20)
               << "  quadrature " << quad.to_string(17) << "  rel.err " << rel_text.str() << '\n';
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_output(const Output& o, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << o.json.dump(2) << '\n';
    } else if (format == "csv") {
        auto line = [&](const std::vector<std::string>& fields) {
            for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_escape(fields[i]);
            os << '\n';
        };
        line(o.csv_header);
        for (const auto& row : o.csv_rows) line(row);
    } else {
        os << o.text.str();
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Root-system Gamma products: construction, evaluation and verification", "cartan-gamma"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--type", cfg.type, "Root system label such as E8 or B6");
    app.add_option("--digits", cfg.digits, "Decimal working precision (default 50, or CARTAN_GAMMA_DIGITS)");
    app.add_option("--tol", cfg.tol, "Tolerance, e.g. 1e-30 or the exponent -30");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");

    app.add_subcommand("roots", "Root system data: roots, marks, Cartan matrices");
    app.add_subcommand("pf", "Perron-Frobenius vector of the Cartan matrix by power iteration");
    app.add_subcommand("gamma", "Gamma(R), gamma(R) and the closed-form mass vector");
    app.add_subcommand("words", "Gamma words f_{R,i} and their tilde transforms");
    auto* classify_cmd = app.add_subcommand("classify", "Membership of Gamma words in C(N,k)");
    classify_cmd->add_option("--word", cfg.word, R"(Word as JSON {"N":..,"coeffs":{"j":..}})");
    auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks for one type or the default battery");
    verify_cmd->add_option("theorem", cfg.theorem, "1.1, 1.2, 1.3, 4.2, 4.4 or all")
        ->required()
        ->check(CLI::IsMember({"1.1", "1.2", "1.3", "4.2", "4.4", "all"}));
    auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi sums and Hecke character values at a prime");
    jacobi_cmd->add_option("--prime", cfg.prime, "Prime p = 1 mod N");
    jacobi_cmd->add_option("--pmin", cfg.pmin, "Search for the least suitable prime >= pmin");
    jacobi_cmd->add_option("--word", cfg.word, R"(Word as JSON {"N":..,"coeffs":{"j":..}})");
    auto* selberg_cmd = app.add_subcommand("selberg", "Selberg integrals: quadrature against closed forms");
    selberg_cmd->add_option("--grid", cfg.grid, "real, complex or all");
    selberg_cmd->add_option("--alpha", cfg.alpha, "Single parameter point instead of the grid");
    selberg_cmd->add_option("--beta", cfg.beta);
    selberg_cmd->add_option("--rho", cfg.rho);
    selberg_cmd->add_option("--n", cfg.n);
    app.add_subcommand("identities", "Special-function and trigonometric identity residuals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    Output output;
    try {
        const PrecisionContext ctx = cfg.digits ? PrecisionContext(*cfg.digits) : PrecisionContext::from_environment();
        Session session{cfg, ctx, cfg.tol ? parse_tolerance(*cfg.tol, ctx) : power_of_ten(-30, ctx)};
        if (cfg.command == "roots") cmd_roots(session, output);
        else if (cfg.command == "pf") cmd_pf(session, output);
        else if (cfg.command == "gamma") cmd_gamma(session, output);
        else if (cfg.command == "words") cmd_words(session, output);
        else if (cfg.command == "classify") cmd_classify(session, output);
        else if (cfg.command == "verify") cmd_verify(session, output);
        else if (cfg.command == "jacobi") cmd_jacobi(session, output);
        else if (cfg.command == "selberg") cmd_selberg(session, output);
        else cmd_identities(session, output);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const QuadratureNotConverged& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.out_path.empty()) {
        write_output(output, cfg.format, out);
    } else {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kExitUsage;
        }
        write_output(output, cfg.format, file);
    }
    if (!output.ok) err << "verification failed\n";
    return output.ok ? kExitPass : kExitFailure;
}

}  // namespace cartan_gamma::cli
