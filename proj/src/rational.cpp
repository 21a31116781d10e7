#include "hjps/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hjps {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("invalid rational: '" + text + "'"); };
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) fail();
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size()) fail();
        Integer den(text.substr(den_start));
        if (den == 0) fail();
    }
    Rational q(text[0] == '+' ? text.substr(1) : text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

double to_double(const Rational& value) {
    return value.get_d();
}

}  // namespace hjps
