#include "hyplac/rational.hpp"

#include <cctype>
#include <ostream>

namespace hyplac {

std::optional<Rational> Rational::parse(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view() : text.substr(slash + 1);

    auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<Integer> {
        if (s.empty()) return std::nullopt;
        bool negative = false;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) {
            negative = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        Integer v;
        if (mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0) return std::nullopt;
        if (negative) v = -v;
        return v;
    };

    auto num = parse_int(num_part, true);
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(*num);

    auto den = parse_int(den_part, false);
    if (!den || sgn(*den) == 0) return std::nullopt;
    return Rational(*num, *den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer denominator_lcm(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        Integer d = v.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace hyplac
