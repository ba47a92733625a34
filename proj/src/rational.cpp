#include "ft/rational.hpp"

#include "ft/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ft {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }

    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-')
        num_digits.remove_prefix(1);

    if (!all_digits(num_digits))
        throw validation_error("invalid rational '" + std::string(text) + "': bad numerator");

    Integer p{std::string(num)};
    Rational value{p};
    if (den.data() != nullptr) {
        if (!all_digits(den))
            throw validation_error("invalid rational '" + std::string(text) + "': bad denominator");
        Integer q{std::string(den)};
        if (q == 0)
            throw validation_error("invalid rational '" + std::string(text) + "': zero denominator");
        value /= Rational{q};
    }
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::string to_string(const Integer& value)
{
    return value.get_str();
}

} // namespace ft
