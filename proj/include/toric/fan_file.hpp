#pragma once

#include "toric/fan.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace toric {

/// Line-oriented fan description:
///
///     # comment
///     id 147
///     name CP4
///     dim 4
///     rays 5
///     1 0 0 0
///     ...
///     cones 5
///     0 1 2 3
///     ...
///     expect 2160 752
///
/// Cone indices are 0-based. `id`, `name` and `expect` are optional; `id`
/// defaults to the file stem.
struct FanFile {
  std::string id;
  std::optional<std::string> name;
  Fan fan;
  std::optional<std::pair<std::int64_t, std::int64_t>> expected;
};

/// Throws Error(ParseError) with "source:line: ..." for syntax problems and
/// Error(ValidationError) for structurally invalid content (index out of
/// range, wrong arity, non-primitive ray).
FanFile parse_fan_text(std::string_view text, const std::string& source = "<input>");
FanFile parse_fan_file(const std::filesystem::path& path);

std::string serialize_fan_file(const FanFile& file);

}  // namespace toric
