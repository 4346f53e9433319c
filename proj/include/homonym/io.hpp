#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "homonym/collision.hpp"
#include "homonym/ingest.hpp"

namespace homonym {

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

// RFC 4180 quoting when the field needs it.
std::string csv_field(std::string_view text);

std::string report_json(const IngestReport& report);

// Hex SHA-256 of the file contents.
std::string sha256_file(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, std::string_view text);

/// Curve summary CSV: `n,mean,stderr,replicates,logit,probit`. Transformed
/// columns use the mean clamped into [eps, 1 - eps], eps = 1/(2 n R).
std::string curve_csv(const CollisionCurve& curve);

// Long form `n,replicate,value`.
std::string curve_long_csv(const CollisionCurve& curve);

// Reads any CSV with columns n, mean, stderr, replicates (others ignored).
CollisionCurve read_curve_csv(const std::filesystem::path& path);

}  // namespace homonym
