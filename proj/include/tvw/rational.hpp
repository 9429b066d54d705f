#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace tvw {

// Exact arbitrary-precision scalars. Rat is always kept in canonical form
// (lowest terms, positive denominator): arithmetic on canonical values stays
// canonical, and rat_from_string canonicalizes explicitly because the mpq
// string constructor does not.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Parses "n" or "n/d" (optional leading minus on either part).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Lowest-terms decimal-free form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& r);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

int sign(const Rat& r);

Int factorial(unsigned n);
Int int_pow(Int base, unsigned e);
Rat rat_pow(Rat base, unsigned e);

// Deterministic 64-bit mixer used for seeded perturbations and generators.
std::uint64_t mix64(std::uint64_t x);

} // namespace tvw
