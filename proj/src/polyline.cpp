#include "tvw/polyline.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvw {

void validate_polyline(const Polyline& c) {
    if (c.pts.size() < 2)
        throw std::invalid_argument("polyline needs at least 2 points");
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i)
        if (c.pts[i] == c.pts[i + 1])
            throw std::invalid_argument("polyline has equal consecutive points");
}

bool is_closed(const Polyline& c) {
    return c.pts.size() >= 2 && c.pts.front() == c.pts.back();
}

Polyline reversed(const Polyline& c) {
    Polyline r = c;
    std::reverse(r.pts.begin(), r.pts.end());
    return r;
}

} // namespace tvw
