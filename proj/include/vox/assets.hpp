#pragma once

#include <string>

namespace vox::assets {

// Resolution order: VOXBENCH_ASSETS env var, then the compile-time default
// (the repository's assets/ directory). Throws if neither exists.
std::string asset_dir();

std::string read_file(const std::string& path);
std::string asset_text(const std::string& relative);

void write_file(const std::string& path, const std::string& bytes);

}  // namespace vox::assets
