#include "gcanon/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcanon/rational.hpp"

namespace gcanon {

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string DiskCache::path_for(const std::string& key) const {
    std::ostringstream os;
    os << dir_ << "/" << std::hex << fnv1a(key) << ".txt";
    return os.str();
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::string p = path_for(key);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    std::string s = body.str();
    // stored as: key '\n' value, to guard hash collisions
    auto nl = s.find('\n');
    if (nl == std::string::npos || s.substr(0, nl) != key) return std::nullopt;
    return s.substr(nl + 1);
}

void DiskCache::put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    std::ofstream out(path_for(key), std::ios::binary);
    out << key << "\n" << value;
}

}  // namespace gcanon
