#include "wturan/rational.hpp"

#include <cctype>

#include "wturan/errors.hpp"

namespace wturan {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Int parse_int(const std::string& s) {
    std::string body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) throw ParseError("not an integer: '" + s + "'");
    Int v(body);
    return negative ? -v : v;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den <= 0) throw ParseError("denominator must be positive in '" + s + "'");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            negative = head[0] == '-';
            head = head.substr(1);
        }
        if (head.empty() && frac.empty())
            throw ParseError("not a number: '" + s + "'");
        if (!head.empty() && !all_digits(head))
            throw ParseError("not a number: '" + s + "'");
        if (!frac.empty() && !all_digits(frac))
            throw ParseError("not a number: '" + s + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = (head.empty() ? Int(0) : Int(head)) * scale +
                  (frac.empty() ? Int(0) : Int(frac));
        if (negative) num = -num;
        return Rational(num, scale);
    }

    return Rational(parse_int(s));
}

std::string format_rational(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace wturan
