#include "jlq/level_io.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace jlq {
namespace {

constexpr std::string_view kLevelHeader = "format=jlambda-level/1";
constexpr std::string_view kManifestHeader = "format=jlambda-manifest/1";
constexpr const char* kManifestName = "manifest.txt";
constexpr const char* kLockName = ".lock";

std::string level_file_name(unsigned n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "level_%05u.txt", n);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// write-temp, fsync, atomic rename, fsync directory
void atomic_write(const std::filesystem::path& path, std::string_view data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd < 0) throw CacheError("cannot create " + tmp.string() + ": " + std::strerror(errno));
    std::size_t written = 0;
    while (written < data.size()) {
        const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
        if (n < 0) {
            ::close(fd);
            throw CacheError("write failed on " + tmp.string());
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fsync(fd) != 0) {
        ::close(fd);
        throw CacheError("fsync failed on " + tmp.string());
    }
    ::close(fd);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheError("rename to " + path.string() + " failed: " + ec.message());
    const int dir_fd = ::open(path.parent_path().c_str(), O_RDONLY | O_DIRECTORY);
    if (dir_fd >= 0) {
        ::fsync(dir_fd);
        ::close(dir_fd);
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string serialize_level(const LevelTable& table) {
    std::ostringstream out;
    out << kLevelHeader << '\n' << "n=" << table.weight() << '\n';
    for (std::size_t i = 0; i < table.size(); ++i)
        out << table.partition(i).to_string() << '|' << table.poly(i).to_string() << '\n';
    return std::move(out).str();
}

LevelTable parse_level(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kLevelHeader)
        throw FormatVersionUnsupported("unrecognized level file header");
    if (lines.size() < 2 || !lines[1].starts_with("n="))
        throw IncompleteLevel("missing weight line");
    unsigned n = 0;
    try {
        n = static_cast<unsigned>(std::stoul(std::string(lines[1].substr(2))));
    } catch (const std::exception&) {
        throw IncompleteLevel("bad weight line");
    }

    std::vector<Partition> partitions;
    std::vector<IntPoly> polys;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        if (line.empty()) continue;
        const std::size_t bar = line.find('|');
        if (bar == std::string_view::npos)
            throw IncompleteLevel("record " + std::to_string(i - 1) + " has no separator");
        try {
            partitions.push_back(Partition::parse(line.substr(0, bar)));
            polys.push_back(IntPoly::parse(line.substr(bar + 1)));
        } catch (const std::exception& e) {
            throw IncompleteLevel("record " + std::to_string(i - 1) + ": " + e.what());
        }
    }

    // Records must be exactly the partitions of n in enumeration order.
    std::size_t idx = 0;
    for (const Partition& expect : PartitionRange(n)) {
        if (idx >= partitions.size() || !(partitions[idx] == expect))
            throw IncompleteLevel("record order broken at index " + std::to_string(idx) +
                                  " (expected " + expect.to_string() + ")");
        ++idx;
    }
    if (idx != partitions.size())
        throw IncompleteLevel("level has " + std::to_string(partitions.size()) +
                              " records, expected " + std::to_string(idx));
    return LevelTable(n, std::move(partitions), std::move(polys));
}

CacheDir::CacheDir(const std::filesystem::path& dir) : dir_(dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string());
    const auto lock_path = dir_ / kLockName;
    lock_fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (lock_fd_ < 0) throw CacheError("cannot open lock file " + lock_path.string());
    if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
        ::close(lock_fd_);
        lock_fd_ = -1;
        throw CacheError("cache directory " + dir_.string() +
                         " is locked by another process");
    }
    load_manifest();
}

CacheDir::~CacheDir() {
    if (lock_fd_ >= 0) ::close(lock_fd_);  // releases the flock
}

void CacheDir::load_manifest() {
    const auto path = dir_ / kManifestName;
    if (!std::filesystem::exists(path)) return;
    const std::string text = read_file(path);
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kManifestHeader)
        throw FormatVersionUnsupported("unrecognized manifest header");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        const std::string line(lines[i]);
        while (pos <= line.size()) {
            std::size_t bar = line.find('|', pos);
            if (bar == std::string::npos) bar = line.size();
            fields.push_back(line.substr(pos, bar - pos));
            pos = bar + 1;
        }
        if (fields.size() != 5) throw CacheError("malformed manifest line: " + line);
        Entry e{fields[1], fields[2], std::stoul(fields[3]), std::stoul(fields[4])};
        const auto n = static_cast<unsigned>(std::stoul(fields[0]));
        if (!std::filesystem::exists(dir_ / e.file))
            throw CacheError("manifest lists missing file " + e.file);
        manifest_[n] = std::move(e);
    }
}

void CacheDir::write_manifest() const {
    std::ostringstream out;
    out << kManifestHeader << '\n';
    for (const auto& [n, e] : manifest_)
        out << n << '|' << e.file << '|' << e.sha256 << '|' << e.records << '|' << e.max_degree
            << '\n';
    atomic_write(dir_ / kManifestName, out.str());
}

unsigned CacheDir::max_contiguous_level() const {
    unsigned n = 0;
    while (manifest_.count(n + 1)) ++n;
    return n;
}

LevelTable CacheDir::load_level(unsigned n) const {
    auto it = manifest_.find(n);
    if (it == manifest_.end())
        throw CacheError("level " + std::to_string(n) + " not in cache");
    const std::string data = read_file(dir_ / it->second.file);
    const std::string digest = sha256_hex(data);
    if (digest != it->second.sha256)
        throw ChecksumMismatch("level " + std::to_string(n) + ": checksum " + digest +
                               " does not match manifest " + it->second.sha256);
    LevelTable table = parse_level(data);
    if (table.weight() != n)
        throw IncompleteLevel("level file for " + std::to_string(n) + " declares weight " +
                              std::to_string(table.weight()));
    return table;
}

void CacheDir::save_level(const LevelTable& table) {
    const std::string data = serialize_level(table);
    const std::string name = level_file_name(table.weight());
    atomic_write(dir_ / name, data);
    manifest_[table.weight()] =
        Entry{name, sha256_hex(data), table.size(), table.max_degree()};
    write_manifest();
}

}  // namespace jlq
