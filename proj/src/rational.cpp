#include "cornerjet/rational.hpp"

#include <stdexcept>

namespace cornerjet {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_fraction(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace cornerjet
