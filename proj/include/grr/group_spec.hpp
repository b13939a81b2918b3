#pragma once

#include "grr/group.hpp"

#include <string>

namespace grr {

// Raised on malformed group spec text; position is a 0-based byte offset.
struct spec_parse_error : std::invalid_argument {
    size_t position;
    spec_parse_error(const std::string& what, size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/**
 * Parses the group mini-language:
 *   C<n>  D<n>  EA<k>  Q8  Dic(<spec>)  Dic(<spec>;y=<index>)
 * joined by 'x' into left-associative direct products, e.g. "Q8xC2xC2".
 * Whitespace is not permitted. The result's label is the normalized text.
 */
FiniteGroup parse_group_spec(const std::string& text);

}  // namespace grr
