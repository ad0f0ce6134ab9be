#include "dihom/bigint.hpp"
#include "dihom/error.hpp"

#include <cctype>
#include <string>

namespace dihom {

BigCount pow(const BigCount& base, unsigned long exponent)
{
    BigCount out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, unsigned long exponent)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

BigCount degree_power(long degree, unsigned long exponent)
{
    if (exponent == 0)
        return 1;
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(degree), exponent);
    return out;
}

BigCount from_u64(std::uint64_t value)
{
    BigCount out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
    return out;
}

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        BigCount d(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        out = Rational(BigCount(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))
            || (whole.empty() && frac.empty()))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        out = Rational(BigCount(digits, 10), pow(BigCount(10), frac.size()));
    } else {
        if (!all_digits(s))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        out = Rational(BigCount(std::string(s), 10));
    }
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

} // namespace dihom
