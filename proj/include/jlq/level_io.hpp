#ifndef JLQ_LEVEL_IO_HPP
#define JLQ_LEVEL_IO_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jlq/level_table.hpp"

namespace jlq {

// Environment/cache problems (lock conflicts, missing files, bad paths).
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};
struct ChecksumMismatch : CacheError {
    explicit ChecksumMismatch(const std::string& what) : CacheError(what) {}
};
struct FormatVersionUnsupported : CacheError {
    explicit FormatVersionUnsupported(const std::string& what) : CacheError(what) {}
};
struct IncompleteLevel : CacheError {
    explicit IncompleteLevel(const std::string& what) : CacheError(what) {}
};

std::string sha256_hex(std::string_view data);

// Line-oriented level file (UTF-8, LF):
//   format=jlambda-level/1
//   n=<weight>
//   <partition>|<coefficients>      one record per partition, revlex order
std::string serialize_level(const LevelTable& table);
LevelTable parse_level(std::string_view text);

// One process owns a cache directory (advisory flock on .lock, held for the
// object's lifetime). Level files are written temp-then-rename with the
// manifest updated after each durable write.
class CacheDir {
  public:
    struct Entry {
        std::string file;
        std::string sha256;
        std::size_t records = 0;
        std::size_t max_degree = 0;
    };

    explicit CacheDir(const std::filesystem::path& dir);
    ~CacheDir();
    CacheDir(const CacheDir&) = delete;
    CacheDir& operator=(const CacheDir&) = delete;

    const std::filesystem::path& path() const { return dir_; }
    bool has_level(unsigned n) const { return manifest_.count(n) != 0; }
    unsigned max_contiguous_level() const;

    LevelTable load_level(unsigned n) const;  // verifies checksum + invariants
    void save_level(const LevelTable& table);

    const std::map<unsigned, Entry>& manifest() const { return manifest_; }

  private:
    void load_manifest();
    void write_manifest() const;

    std::filesystem::path dir_;
    int lock_fd_ = -1;
    std::map<unsigned, Entry> manifest_;
};

}  // namespace jlq

#endif
