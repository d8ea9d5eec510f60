#pragma once

#include <string>
#include <string_view>

#include "ringforge/algebra.hpp"

namespace ringforge {

// Inline constructor grammar, nestable:
//   zmod(n) | product(R, R, ...) | matrix(k, R) | integers
//   | congruence-pairs(n) | poly(R) | nagata(R, M, E)
// where M is a module spec and E an endomorphism spec.
RingPtr parse_ring_spec(std::string_view text);

// identity | swap | eval-at-zero | negate-offdiagonal, applied to a ring.
EndoPtr parse_endo_spec(std::string_view text, const RingPtr& ring);

// self | ring-power(k), over a ring.
ModulePtr parse_module_spec(std::string_view text, const RingPtr& ring);

}  // namespace ringforge
