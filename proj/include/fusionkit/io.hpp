#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/orbit_rep.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

/// Malformed text input; the message names the token and the expected grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `[3,2,1]`, `[]`; trailing zeros allowed.
Partition parse_partition(const std::string& text);
/// `{a_1,...,a_{N-1}}`.
Weight parse_weight(const std::string& text);
/// `(2,1,0)` with entries in 0..N-1, any order; returned in standard form.
OrbitRep parse_orbit(const std::string& text, int N);
/// Comma-separated non-negative integers, optionally wrapped in `[]` or `()`.
std::vector<std::int64_t> parse_counts(const std::string& text);

inline constexpr const char* kTableSchema = "fusionkit/table/v1";
inline constexpr const char* kExpansionSchema = "fusionkit/expansion/v1";
inline constexpr const char* kDualitySchema = "fusionkit/duality/v1";

nlohmann::json table_to_json(const FusionTable& t);
/// Throws std::runtime_error on a schema mismatch or malformed document.
FusionTable table_from_json(const nlohmann::json& j);

/// --cache-dir, else $FUSIONKIT_CACHE, else $XDG_CACHE_HOME/fusionkit, else ~/.cache/fusionkit.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);
std::filesystem::path cache_file(const std::filesystem::path& dir, const FusionContext& ctx);

/// Loads a cached table. Missing files return nullopt silently; unreadable,
/// corrupt or stale ones return nullopt after a warning on `warn`.
std::optional<FusionTable> cache_lookup(const std::filesystem::path& dir, const FusionContext& ctx, std::ostream& warn);
/// Writes the table via a temporary file and rename. Returns the final path.
std::filesystem::path cache_store(const std::filesystem::path& dir, const FusionTable& t);
/// Writes JSON to `path` atomically.
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace fusionkit
