#include "qap/rational.hpp"

#include <cctype>

namespace qap {

Rat parse_rational(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("empty rational token");
    auto check_digits = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) start = 1;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num;
    std::string den = "1";
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);  // mpz_set_str rejects '+'
        return s;
    };
    auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        if (!check_digits(token, true))
            throw std::invalid_argument("malformed rational: '" + std::string(token) + "'");
        num = strip_plus(std::string(token));
    } else {
        auto n = token.substr(0, slash);
        auto d = token.substr(slash + 1);
        if (!check_digits(n, true) || !check_digits(d, false))
            throw std::invalid_argument("malformed rational: '" + std::string(token) + "'");
        num = strip_plus(std::string(n));
        den = std::string(d);
    }
    mpz_class nz(num), dz(den);
    if (dz <= 0)
        throw std::invalid_argument("denominator must be positive in '" + std::string(token) + "'");
    Rat r(nz, dz);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool fits_int64(const Rat& x) {
    if (x.get_den() != 1) return false;
    return x.get_num().fits_slong_p() != 0;
}

std::int64_t to_int64(const Rat& x) { return static_cast<std::int64_t>(x.get_num().get_si()); }

}  // namespace qap
