#include "crg/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace crg {

std::string cache_dir_from_env() {
  const char* dir = std::getenv("CRG_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::filesystem::path entry_path(const std::string& dir,
                                 const std::string& key) {
  std::ostringstream name;
  name << std::hex << fnv1a64(key) << ".kv";
  return std::filesystem::path(dir) / name.str();
}

}  // namespace

std::optional<std::string> cache_load(const std::string& dir,
                                      const std::string& key) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(entry_path(dir, key));
  if (!in) return std::nullopt;
  std::string stored_key;
  if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  return rest.str();
}

void cache_store(const std::string& dir, const std::string& key,
                 const std::string& payload) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path target = entry_path(dir, key);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << key << "\n" << payload;
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace crg
