#pragma once

#include <filesystem>
#include <string>

#include "cowpath/polyline.hpp"

namespace cowpath {

/// Reads a path file. JSON: {"dimension": d, "vertices": [[...], ...]}.
/// CSV (by .csv extension): header "x1,...,xd", one vertex per row.
/// Cumulative lengths are always recomputed, never read.
/// Throws std::runtime_error with a line/position diagnostic on bad input.
Polyline load_path(const std::filesystem::path& file);

void save_path_json(const Polyline& path, const std::filesystem::path& file);
void save_path_csv(const Polyline& path, const std::filesystem::path& file);

/// Saves by extension: .csv writes CSV, anything else JSON.
void save_path(const Polyline& path, const std::filesystem::path& file);

/// FNV-1a 64-bit digest of the file bytes, as "fnv1a64:<hex>".
std::string file_digest(const std::filesystem::path& file);

} // namespace cowpath
