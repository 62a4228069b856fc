#pragma once

#include <cstdint>
#include <string>

#include "trexp/budget.hpp"

namespace trexp {

enum class OutputFormat { Json, Csv, Edgelist };

struct RunConfig {
    Budget budget{};
    int workers = 1;
    bool deterministic = true;
    OutputFormat format = OutputFormat::Json;
    std::string cache_dir;  ///< empty: no result cache
    std::uint64_t seed = 20240601;
};

/// Parses `key = value` lines (`#` comments, optional quotes around strings).
/// Keys: max_nodes, time_limit, workers, deterministic, format, cache_dir,
/// seed. Throws InputError on unknown keys or bad values.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Sets a single key; same validation as the file parser.
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// TREXP_CACHE_DIR overrides cache_dir when set.
void apply_environment(RunConfig& cfg);

OutputFormat parse_format(const std::string& s);

}  // namespace trexp
