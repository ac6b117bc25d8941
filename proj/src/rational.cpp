#include "jetkit/rational.hpp"

#include "jetkit/errors.hpp"

#include <cctype>

namespace jetkit {

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) throw SchemaError("malformed rational: '" + std::string(text) + "'");
    Rational r(parse_integer(num_text));
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+')
            throw SchemaError("malformed rational: '" + std::string(text) + "'");
        const mpz_class den = parse_integer(den_text);
        if (den == 0) throw SchemaError("zero denominator: '" + std::string(text) + "'");
        r = Rational(r.get_num(), den);
        r.canonicalize();
    }
    return r;
}

std::string to_decimal(const Rational& r, int digits)
{
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Rational scaled = abs(r) * scale;
    // Round half away from zero.
    mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (r < 0 && q != 0 ? "-" : "") + body;
}

Rational power(const Rational& base, int exponent)
{
    Rational result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational factorial(int n)
{
    Rational result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(std::span<const Rational> v)
{
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace jetkit
