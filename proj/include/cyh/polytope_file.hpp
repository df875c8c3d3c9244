#pragma once

#include <string>
#include <string_view>

#include "cyh/polytope.hpp"

namespace cyh {

struct ParseOptions {
  /// Divide non-primitive normals by their gcd (the offset must be divisible
  /// too) instead of rejecting them.
  bool normalize = false;
};

/// Line-oriented polytope format:
///
///   # comment
///   name unit 2-simplex
///   dim 2
///   facet -1  0 0
///   facet  0 -1 0
///   facet  1  1 1
///
/// `dim` must precede every `facet`; each facet line carries dim normal
/// entries followed by the integer offset lambda^0. `name` is optional.
/// Throws ParseError (or NonPrimitiveNormalError / NonIntegerOffsetError)
/// with 1-based line and column.
HalfSpaceSpec parse_polytope_file(std::string_view text, const ParseOptions& options = {});

/// Canonical form: optional name line, dim line, one facet line per facet,
/// single spaces, trailing newline.
std::string serialize_polytope_file(const HalfSpaceSpec& spec);

}  // namespace cyh
