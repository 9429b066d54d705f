#pragma once

#include "tvw/config.hpp"
#include "tvw/drawing.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_partitions.hpp"

#include <string>

namespace tvw {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// All serialization uses rationals as "num" or "num/den" strings in lowest
// terms; parse(serialize(x)) == x bit-exactly. Parsers throw ParseError on
// malformed documents.

std::string configuration_to_json(const PointConfiguration& c, int indent = 2);
PointConfiguration configuration_from_json(const std::string& text);

// extra_star, when nonempty, is recorded under "deleted_star" (informational;
// ignored when parsing the drawing back).
std::string drawing_to_json(const Drawing& d, int indent = 2,
                            const std::vector<std::pair<int, int>>& extra_star = {});
Drawing drawing_from_json(const std::string& text);

std::string tverberg_certificate_to_json(const TverbergCertificate& c, int indent = 2);
TverbergCertificate tverberg_certificate_from_json(const std::string& text);

std::string winding_certificate_to_json(const WindingCertificate& c, int indent = 2);
WindingCertificate winding_certificate_from_json(const std::string& text);

// "configuration" or "drawing", by the document's "type" field.
std::string sniff_json_kind(const std::string& text);

} // namespace tvw
