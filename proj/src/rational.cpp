#include "dualcoh/rational.hpp"

#include <stdexcept>

namespace dualcoh {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    auto parse_int = [](std::string_view s, mpz_class& out) {
        if (s.empty() || out.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("malformed rational component '" + std::string(s) + "'");
    };
    if (slash == std::string_view::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
        if (den == 0)
            throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace dualcoh
