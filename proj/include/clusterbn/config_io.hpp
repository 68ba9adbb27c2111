#pragma once

// Text format, one statement per line, '#' starts a comment:
//
//   surface p2            | surface f <delta>
//   <id> origin
//   <id> -> <parent-id> [<second-proximity-id>]

#include <filesystem>
#include <string>
#include <string_view>

#include "clusterbn/configuration.hpp"

namespace clusterbn {

/// Throws Error(ParseError) with the line number for syntax errors and for
/// references to ids not defined on an earlier line; structural errors come
/// from build_configuration.
Configuration parse_configuration(std::string_view text);
Configuration read_configuration_file(const std::filesystem::path& path);

/// `p2` or `f <delta>` (also `f<delta>`). Throws ParseError.
SurfaceModel parse_surface(std::string_view text);

std::string to_config_text(const Configuration& c);

}  // namespace clusterbn
