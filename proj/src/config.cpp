#include "trexp/config.hpp"

#include <cstdlib>
#include <sstream>

#include "trexp/io.hpp"

namespace trexp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
    return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    T x{};
    if (!(in >> x) || !in.eof()) throw InputError("config: bad value '" + value + "' for " + key);
    return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw InputError("config: bad boolean '" + value + "' for " + key);
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "edgelist") return OutputFormat::Edgelist;
    throw InputError("format must be json, csv or edgelist");
}

void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& raw) {
    const std::string value = unquote(trim(raw));
    if (key == "max_nodes") {
        cfg.budget.max_nodes = parse_number<std::int64_t>(key, value);
        if (cfg.budget.max_nodes < 0) throw InputError("config: max_nodes must be >= 0");
    } else if (key == "time_limit") {
        cfg.budget.time_limit_seconds = parse_number<double>(key, value);
        if (cfg.budget.time_limit_seconds < 0) throw InputError("config: time_limit must be >= 0");
    } else if (key == "workers") {
        cfg.workers = parse_number<int>(key, value);
        if (cfg.workers < 1) throw InputError("config: workers must be >= 1");
    } else if (key == "deterministic") {
        cfg.deterministic = parse_bool(key, value);
    } else if (key == "format") {
        cfg.format = parse_format(value);
    } else if (key == "cache_dir") {
        cfg.cache_dir = value;
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else {
        throw InputError("config: unknown key '" + key + "'");
    }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_config_value(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) { apply_config_text(cfg, read_file(path)); }

void apply_environment(RunConfig& cfg) {
    if (const char* dir = std::getenv("TREXP_CACHE_DIR"); dir && *dir) cfg.cache_dir = dir;
}

}  // namespace trexp
