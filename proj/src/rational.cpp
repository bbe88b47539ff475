#include "homlie/rational.hpp"

#include <cctype>

namespace homlie {

std::optional<Rat> parse_rational(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string num, den;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num.push_back(text[i++]);
    if (num.empty())
        return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            den.push_back(text[i++]);
        if (den.empty())
            return std::nullopt;
    }
    if (i != text.size())
        return std::nullopt;  // trailing junk, including '.' of float literals
    boost::multiprecision::mpz_int n(num);
    boost::multiprecision::mpz_int d = den.empty() ? 1 : boost::multiprecision::mpz_int(den);
    if (d == 0)
        return std::nullopt;
    Rat r(n, d);
    return neg ? Rat(-r) : r;
}

}  // namespace homlie
