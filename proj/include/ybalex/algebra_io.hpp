#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ybalex/algebra.hpp"

namespace ybalex {

/// An algebra file: structure constants plus any named linear maps. Only the
/// map "mu" is meaningful to the pipeline today.
struct AlgebraFile {
  Algebra algebra;
  std::optional<LinMap> mu;
};

/// Parses the JSON algebra format
///   {"dim": d,
///    "structure": [[["c_ijk", ...], ...], ...],
///    "maps": {"mu": [[entries]]}}
/// where structure[i][j][k] is the e_(k+1) coordinate of e_(i+1) e_(j+1) and
/// map entries are row-major. Every entry is a canonical scalar string.
/// Validation runs before returning; structural violations surface as
/// NotUnital / NotAssociative.
AlgebraFile parse_algebra_json(const std::string& text);

/// Reads and parses an algebra file from disk.
AlgebraFile load_algebra_file(const std::string& path);

/// Serializes in the same format, including "mu" when present.
std::string algebra_to_json(const AlgebraFile& file);

}  // namespace ybalex
