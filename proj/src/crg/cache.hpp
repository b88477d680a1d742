#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace crg {

// Tiny content-addressed file cache. Entries are keyed by an arbitrary
// string; the key is stored inside the file and checked on load, so hash
// collisions degrade to misses.
std::string cache_dir_from_env();
std::uint64_t fnv1a64(const std::string& s);
std::optional<std::string> cache_load(const std::string& dir,
                                      const std::string& key);
void cache_store(const std::string& dir, const std::string& key,
                 const std::string& payload);

}  // namespace crg
