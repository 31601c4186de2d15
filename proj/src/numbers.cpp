#include "pomo/numbers.hpp"

#include <cctype>
#include <sstream>

#include "pomo/errors.hpp"

namespace pomo {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> Rational {
        fail(ErrorKind::ParseError, "invalid rational literal '" + text + "'");
    };

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!valid_integer_token(num) || !valid_integer_token(den)) return bad();
        Integer d(den);
        if (d == 0) return bad();
        return Rational(Integer(num), d);
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (!valid_integer_token(whole) || frac.empty()) return bad();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return bad();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer whole_i(whole);
        Integer frac_i(frac);
        bool negative = !whole.empty() && whole[0] == '-';
        Integer num = whole_i * scale + (negative ? -frac_i : frac_i);
        return Rational(num, scale);
    }

    if (!valid_integer_token(text)) return bad();
    return Rational(Integer(text));
}

std::string rational_string(const Rational& q) {
    std::ostringstream out;
    if (boost::multiprecision::denominator(q) == 1) {
        out << boost::multiprecision::numerator(q);
    } else {
        out << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
    }
    return out.str();
}

std::string integer_string(const Integer& n) {
    std::ostringstream out;
    out << n;
    return out.str();
}

}  // namespace pomo
