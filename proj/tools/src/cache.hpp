#ifndef POLYRING_TOOLS_CACHE_HPP
#define POLYRING_TOOLS_CACHE_HPP

#include <stdexcept>
#include <string>

namespace polyring::cli {

inline constexpr int kCacheSchemaVersion = 1;

// Unreadable or unwritable file, bad JSON, wrong schema version, or a lattice
// whose key does not match the one recorded next to it.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheStats {
  std::size_t polytopes = 0;
  std::size_t bb_tables = 0;
};

// Writes the registry and every cached BB table; the file is replaced atomically.
CacheStats save_cache(const std::string& path);
// Interns every stored lattice and seeds the BB tables.
CacheStats load_cache(const std::string& path);

}  // namespace polyring::cli

#endif
