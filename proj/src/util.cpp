#include "util.hpp"

#include <cctype>

namespace gdet {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    uint128 u = neg ? uint128(0) - uint128(v) : uint128(v);
    char buf[48];
    int pos = sizeof(buf);
    while (u > 0) {
        buf[--pos] = char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) buf[--pos] = '-';
    return std::string(buf + pos, buf + sizeof(buf));
}

mpz_class mpz_from_i128(int128 v) {
    const bool neg = v < 0;
    uint128 u = neg ? uint128(0) - uint128(v) : uint128(v);
    mpz_class hi = mpz_class(uint64_t(u >> 64));
    mpz_class out = (hi << 64) + mpz_class(uint64_t(u));
    return neg ? mpz_class(-out) : out;
}

int128 i128_from_mpz(const mpz_class& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 127)
        throw unsupported_range_error("integer does not fit in 128 bits: " + v.get_str());
    mpz_class a = abs(v);
    mpz_class hi = a >> 64;
    mpz_class lo = a - (hi << 64);
    uint128 u = (uint128(hi.get_ui()) << 64) | uint128(lo.get_ui());
    return v < 0 ? -int128(u) : int128(u);
}

mpz_class parse_mpz(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer: '" + s + "'");
    mpz_class out;
    if (out.set_str(s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return out;
}

}  // namespace gdet
