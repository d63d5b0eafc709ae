#pragma once

#include <filesystem>
#include <string>

namespace deckforge {

std::string read_file(const std::filesystem::path& path);

/// Atomic write: write to a sibling temp file, then rename over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& data);

}  // namespace deckforge
