#pragma once

#include <optional>
#include <string>

namespace gcanon {

// Content-addressed text cache: key -> file named by the key's FNV-1a hash.
// Used for symbolic form serializations, stratum bases, and command output
// replay (cache hits are byte-identical to cold runs).
class DiskCache {
  public:
    explicit DiskCache(std::string dir);  // empty dir disables the cache
    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;
    const std::string& dir() const { return dir_; }

  private:
    std::string dir_;
    std::string path_for(const std::string& key) const;
};

}  // namespace gcanon
