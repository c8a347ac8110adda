#include "funceq/rational.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace funceq {

namespace {

long long parse_integer(std::string_view text, const std::string& context) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("parse_rational: malformed number in '" + context + "'");
    }
    return value;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_integer(text, text));
    }
    const long long num = parse_integer(std::string_view(text).substr(0, slash), text);
    const long long den = parse_integer(std::string_view(text).substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    }
    return Rat(num, den);
}

std::string format_rational(const Rat& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace funceq
