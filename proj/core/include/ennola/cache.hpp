#pragma once

// On-disk cache of the Schur coefficients of Psi, one JSON file per (k, n).

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ennola/symfunc.hpp"

namespace ennola {

inline constexpr int kCacheVersion = 1;

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// $XDG_DATA_HOME/ennola, else $HOME/.local/share/ennola, else ./ennola-cache.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, int k, int n);

/// {version, k, n, entries: [{mu: [partition strings], poly: [...]}]} with
/// entries in enumeration order.
nlohmann::json psi_to_json(const SymFunc& psi_schur);

/// Inverse of psi_to_json; throws CacheError on malformed input or a
/// version mismatch.
SymFunc psi_from_json(const nlohmann::json& j, int k, int n);

/// Writes the file atomically (temporary file + rename). Throws CacheError.
void save_psi(const std::filesystem::path& dir, const SymFunc& psi_schur);

/// Reads a cached Psi_n; nullopt if absent. Unreadable or mismatched files
/// give nullopt and a message in *warning.
std::optional<SymFunc> load_psi(const std::filesystem::path& dir, int k, int n, std::string* warning = nullptr);

/// Removes every cache file in dir; returns the number removed. Throws CacheError.
std::size_t clear_cache(const std::filesystem::path& dir);

}  // namespace ennola
