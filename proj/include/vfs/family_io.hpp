// Field-family files:
//   { "space_dim": 4, "claimed_field": "R",
//     "fields": [ { "name": "M1", "matrix": [["0","0","-1","0"], ...] } ] }
// Entries are exact "p/q" or integer strings, row-major, v(x) = M x.

#ifndef VFS_FAMILY_IO_HPP
#define VFS_FAMILY_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "vfs/fields.hpp"

namespace vfs {

nlohmann::ordered_json family_to_json(const FieldFamily& family);

/// Throws DomainError describing the first malformed element.
FieldFamily family_from_json(const nlohmann::json& j);

/// Two-space indented JSON followed by a newline.
std::string format_family(const FieldFamily& family);
FieldFamily parse_family(const std::string& text);

FieldFamily read_family(const std::filesystem::path& path);
void write_family(const FieldFamily& family, const std::filesystem::path& path);

}  // namespace vfs

#endif  // VFS_FAMILY_IO_HPP
