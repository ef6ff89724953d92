#include "bracketeer/rational.hpp"

#include <cctype>

namespace bracketeer {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    Rational value;
    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        value = Rational(BigInt{std::string(num)}, d);
    } else if (dot != std::string_view::npos) {
        auto ip = text.substr(0, dot);
        auto fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !all_digits(ip)) return std::nullopt;
        if (!fp.empty() && !all_digits(fp)) return std::nullopt;
        BigInt scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole = ip.empty() ? BigInt(0) : BigInt{std::string(ip)};
        BigInt frac = fp.empty() ? BigInt(0) : BigInt{std::string(fp)};
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(text)) return std::nullopt;
        value = Rational(BigInt{std::string(text)});
    }
    if (neg) value = -value;
    return value;
}

std::string to_string(const Rational& r) {
    std::string s = numer(r).str();
    if (!is_integer(r)) {
        s += "/";
        s += denom(r).str();
    }
    return s;
}

}  // namespace bracketeer
