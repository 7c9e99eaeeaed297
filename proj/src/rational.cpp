#include "cartan_gamma/rational.hpp"

#include <cctype>
#include <string>

#include "cartan_gamma/errors.hpp"

namespace cartan_gamma {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw DomainError("not a rational number: '" + whole + "'");
    }
    if (used != text.size()) throw DomainError("not a rational number: '" + whole + "'");
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational");
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash), text);
        const std::int64_t den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw DomainError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        if (frac.size() > 15) throw DomainError("too many decimals in '" + text + "'");
        for (char c : frac) {
            if (std::isdigit(static_cast<unsigned char>(c)) == 0) throw DomainError("not a rational number: '" + text + "'");
        }
        std::string head = text.substr(0, dot);
        const bool negative = !head.empty() && head.front() == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t whole = parse_int(head, text);
        const std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
        const std::int64_t magnitude = (whole < 0 ? -whole : whole) * scale + part;
        return Rational(negative ? -magnitude : magnitude, scale);
    }
    return Rational(parse_int(text, text));
}

}  // namespace cartan_gamma
