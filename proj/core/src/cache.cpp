#include "ennola/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

namespace ennola {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return fs::path(xdg) / "ennola";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".local" / "share" / "ennola";
  return fs::path("ennola-cache");
}

fs::path cache_file(const fs::path& dir, int k, int n) {
  return dir / ("psi_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json");
}

nlohmann::json psi_to_json(const SymFunc& psi_schur) {
  if (psi_schur.basis() != Basis::Schur) throw std::invalid_argument("psi_to_json expects the Schur basis");
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [mu, c] : psi_schur.terms()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : mu.components()) parts.push_back(p.to_string());
    entries.push_back({{"mu", parts}, {"poly", c.to_poly().to_json()}});
  }
  return {{"version", kCacheVersion}, {"k", psi_schur.k()}, {"n", psi_schur.n()}, {"entries", entries}};
}

SymFunc psi_from_json(const nlohmann::json& j, int k, int n) {
  try {
    const int version = j.at("version").get<int>();
    if (version != kCacheVersion) {
      throw CacheError("cache format version " + std::to_string(version) + " (expected " + std::to_string(kCacheVersion) + ")");
    }
    if (j.at("k").get<int>() != k || j.at("n").get<int>() != n) throw CacheError("cache file is for a different (k, n)");
    SymFunc f(k, n, Basis::Schur);
    for (const auto& e : j.at("entries")) {
      std::vector<Partition> comps;
      for (const auto& s : e.at("mu")) comps.push_back(parse_partition(s.get<std::string>()));
      f.set(MultiPartition(std::move(comps)), RatQU(PolyQU::from_json(e.at("poly"))));
    }
    return f;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("malformed cache file: ") + e.what());
  }
}

void save_psi(const fs::path& dir, const SymFunc& psi_schur) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create " + dir.string() + ": " + ec.message());
  const fs::path target = cache_file(dir, psi_schur.k(), psi_schur.n());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << psi_to_json(psi_schur).dump(1) << '\n';
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) throw CacheError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::optional<SymFunc> load_psi(const fs::path& dir, int k, int n, std::string* warning) {
  const fs::path file = cache_file(dir, k, n);
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    if (warning) *warning = "cannot read " + file.string() + "; recomputing";
    return std::nullopt;
  }
  try {
    const auto j = nlohmann::json::parse(in);
    return psi_from_json(j, k, n);
  } catch (const std::exception& e) {
    if (warning) *warning = file.string() + ": " + e.what() + "; ignoring cache and recomputing";
    return std::nullopt;
  }
}

std::size_t clear_cache(const fs::path& dir) {
  std::error_code ec;
  if (!fs::exists(dir, ec)) return 0;
  std::size_t removed = 0;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    const std::string name = it->path().filename().string();
    if (name.rfind("psi_k", 0) != 0 || it->path().extension() != ".json") continue;
    if (!fs::remove(it->path(), ec) || ec) throw CacheError("cannot remove " + it->path().string());
    ++removed;
  }
  if (ec) throw CacheError("cannot list " + dir.string() + ": " + ec.message());
  return removed;
}

}  // namespace ennola
