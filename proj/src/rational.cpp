#include "tvw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tvw {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + s + "'");
    Int n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    return Rat(n, d);
}

std::string rat_to_string(const Rat& r) {
    return r.str();
}

Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Int rat_ceil(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

int sign(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

Rat rat_pow(Rat base, unsigned e) {
    Rat r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace tvw
