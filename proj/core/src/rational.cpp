#include "tailocus/rational.hpp"

#include <cctype>

#include "tailocus/errors.hpp"

namespace tailocus {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text)) {
            throw ConfigError("not a rational number: '" + text + "'");
        }
        return Rational(Int(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den)) {
        throw ConfigError("not a rational number: '" + text + "'");
    }
    const Int q(den);
    if (q == 0) {
        throw ConfigError("zero denominator in '" + text + "'");
    }
    return Rational(Int(num), q);
}

std::string format_rational(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

std::vector<Rational> canonicalize_rational_vector(const std::vector<Rational>& input) {
    std::vector<Rational> v = input;
    Int lcm_den = 1;
    for (const auto& x : v) {
        lcm_den = lcm(lcm_den, denominator(x));
    }
    std::vector<Int> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        ints.push_back(numerator(x) * (lcm_den / denominator(x)));
    }
    Int g = 0;
    for (const auto& x : ints) {
        g = gcd(g, x);
    }
    if (g == 0) {
        return v;  // zero vector stays put
    }
    Int sign = 0;
    for (const auto& x : ints) {
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rational(ints[i] * sign / g);
    }
    return v;
}

}  // namespace tailocus
