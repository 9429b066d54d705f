#pragma once

#include "tvw/rational.hpp"

namespace tvw {

bool is_prime(unsigned n);

// Sierksma's conjectured count ((q-1)!)^d; attained by sierksma_config.
Int sierksma_number(int d, int q);

// ceil( (q/2)^{(d+1)(q-1)/2} / (q-1)! ), valid for prime q (checked).
// Throws std::invalid_argument when q is not prime or d < 1.
Int vz_lower_bound(int d, int q);

// Planar winding-partition bound ceil( (q/2)^{2(q-1)} / ((q-1)!)^2 ),
// valid for prime q (checked).
Int winding_lower_bound_d2(int q);

} // namespace tvw
