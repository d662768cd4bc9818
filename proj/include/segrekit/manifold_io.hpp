#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "segrekit/algebraic_map.hpp"
#include "segrekit/cr_manifold.hpp"

namespace segrekit {

/// Manifold file:
///   vars z1 z2          (or a range: vars z1..z3)
///   rho: z1*~z1 + z2*~z2 - 1
///   chart: projective 0 (optional; also `chart: affine`)
/// `#` starts a comment. Errors carry line numbers.
CRManifold parse_manifold(std::string_view text);
CRManifold load_manifold(const std::filesystem::path& path);
std::string format_manifold(const CRManifold& manifold);

/// Map file:
///   vars z1 z2
///   map: z1^2            (optionally `map: <num> | <den>`)
///   map: z2^2
/// or, for multivalued maps,
///   vars z1 z2
///   target y1 y2
///   relation: y1^2 - z1
AlgebraicMap parse_map(std::string_view text);
AlgebraicMap load_map(const std::filesystem::path& path);

/// Point syntax: comma-separated Gaussian rationals, e.g. "1,0" or "3/5,4/5*i".
std::vector<GaussianRational> parse_point(std::string_view text);
std::string format_point(const std::vector<GaussianRational>& p);

/// Reads a whole file; InputError when missing.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace segrekit
