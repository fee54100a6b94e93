#pragma once

// Canonical text form of a Certificate.
//
//   steinberg-certificate 1
//   n 3
//   q 2^1
//   a 1
//   ell 3
//   w0 1 2 1
//   poly <level> <coefficients, constant term first>      (one per level used)
//   claimed 2
//   max_level 8
//   max_entry_level 8
//   input <term count>
//   <scalar> <level:value> ...                             (c_r ... c_1)
//   steps <step count>
//   step <term count> <role>
//   <scalar> <level> <n*n row-major raw entries>
//
// Terms are sorted, so equal certificates serialize to equal bytes.

#include <string>
#include <string_view>

#include "steinberg/engine.hpp"

namespace steinberg {

std::string write_certificate(const Certificate& cert, const FieldTower& tower);

/// Parses the text form. Throws ValidationError on malformed input or when a
/// recorded polynomial differs from the tower's polynomial at that level.
Certificate read_certificate(std::string_view text, const FieldTower& tower);

}  // namespace steinberg
