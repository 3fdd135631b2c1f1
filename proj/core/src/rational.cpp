#include "oramsey/rational.hpp"

#include <charconv>
#include <limits>

#include "oramsey/errors.hpp"

namespace oramsey {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParameterError("not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto p = parse_int(text.substr(0, slash), text);
        const auto q = parse_int(text.substr(slash + 1), text);
        if (q == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip.front() == '-';
        if (neg) ip.remove_prefix(1);
        if (fp.empty() || fp.size() > 15 || (!fp.empty() && (fp.front() == '-' || fp.front() == '+')))
            throw ParameterError("not a rational number: '" + std::string(text) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        const std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
        const std::int64_t frac = parse_int(fp, text);
        if (whole > std::numeric_limits<std::int64_t>::max() / den - 1)
            throw ParameterError("rational out of range: '" + std::string(text) + "'");
        Rational r(whole * den + frac, den);
        return neg ? -r : r;
    }
    return Rational(parse_int(text, text));
}

long double to_long_double(const Rational& r) {
    return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
}

}  // namespace oramsey
