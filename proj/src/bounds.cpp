#include "tvw/bounds.hpp"

#include <stdexcept>

namespace tvw {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Int sierksma_number(int d, int q) {
    if (d < 1 || q < 1) throw std::invalid_argument("sierksma_number needs d >= 1, q >= 1");
    return int_pow(factorial(static_cast<unsigned>(q - 1)), static_cast<unsigned>(d));
}

Int vz_lower_bound(int d, int q) {
    if (d < 1) throw std::invalid_argument("vz_lower_bound needs d >= 1");
    if (q < 2 || !is_prime(static_cast<unsigned>(q)))
        throw std::invalid_argument("vz_lower_bound requires prime q");
    if (q == 2) return 1; // base q/2 = 1 regardless of the (then half-integral) exponent
    const unsigned k = static_cast<unsigned>((d + 1) * (q - 1)) / 2;
    const Rat value = Rat(int_pow(Int(q), k), int_pow(Int(2), k) * factorial(q - 1));
    return rat_ceil(value);
}

Int winding_lower_bound_d2(int q) {
    if (q < 2 || !is_prime(static_cast<unsigned>(q)))
        throw std::invalid_argument("winding_lower_bound_d2 requires prime q");
    const unsigned k = static_cast<unsigned>(2 * (q - 1));
    const Int fac = factorial(q - 1);
    const Rat value = Rat(int_pow(Int(q), k), int_pow(Int(2), k) * fac * fac);
    return rat_ceil(value);
}

} // namespace tvw
