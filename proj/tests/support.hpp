#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "ottr/core.hpp"

// Shared test helpers: scratch directories and deterministic generators.

namespace testsupport {

namespace fs = std::filesystem;

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<uint64_t> counter{0};
        path_ = fs::temp_directory_path() /
                ("ottr_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string rand_word(Rng& rng, int min_len = 1, int max_len = 10) {
    int len = rand_int(rng, min_len, max_len);
    std::string w;
    for (int i = 0; i < len; ++i) w += static_cast<char>('a' + rand_int(rng, 0, 25));
    return w;
}

// Multi-line text with a small alphabet so diffs contain real matches.
inline std::string rand_text(Rng& rng, int max_lines = 12) {
    static const char* pool[] = {"alpha", "bravo", "charlie", "delta", "echo",
                                 "foxtrot", "golf", "hotel", "india", ""};
    int n = rand_int(rng, 0, max_lines);
    std::string out;
    for (int i = 0; i < n; ++i) {
        out += pool[rand_int(rng, 0, 9)];
        if (i + 1 < n || rand_int(rng, 0, 3) != 0) out += '\n';
    }
    return out;
}

}  // namespace testsupport
