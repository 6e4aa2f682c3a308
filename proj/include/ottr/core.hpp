#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

namespace ottr {

namespace fs = std::filesystem;

// Config/usage problems map to exit code 2, I/O and network problems to 3.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Severity { Warning, Error };

inline std::string_view severity_name(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

// ---------------------------------------------------------------- strings

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Splits on '\n'. A trailing newline does not produce a final empty element;
// an empty input produces zero lines.
inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

// CRLF and lone CR are normalized to LF.
inline std::string normalize_newlines(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\r') {
            if (i + 1 < text.size() && text[i + 1] == '\n') continue;
            out += '\n';
        } else {
            out += c;
        }
    }
    return out;
}

inline std::vector<std::string> split_csv(std::string_view s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        std::string item = trim(s.substr(pos, comma - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = comma + 1;
    }
    return out;
}

// ------------------------------------------------------------------ globs

// Glob syntax: '*' matches any run (including '/'), '?' one character,
// '[abc]'/'[a-z]' classes with leading '!' negation, '\' escapes the next
// character. Validation rejects unterminated classes and trailing escapes.
inline std::optional<std::string> glob_error(std::string_view pattern) {
    for (size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        if (c == '\\') {
            if (i + 1 >= pattern.size()) return "trailing escape";
            ++i;
        } else if (c == '[') {
            size_t j = i + 1;
            if (j < pattern.size() && pattern[j] == '!') ++j;
            if (j < pattern.size() && pattern[j] == ']') ++j;  // literal ']' first
            while (j < pattern.size() && pattern[j] != ']') ++j;
            if (j >= pattern.size()) return "unterminated character class";
            i = j;
        }
    }
    return std::nullopt;
}

namespace detail {

inline bool glob_match_at(std::string_view pat, size_t pi, std::string_view str, size_t si) {
    while (pi < pat.size()) {
        char pc = pat[pi];
        if (pc == '*') {
            // collapse consecutive stars
            while (pi < pat.size() && pat[pi] == '*') ++pi;
            if (pi == pat.size()) return true;
            for (size_t k = si; k <= str.size(); ++k)
                if (glob_match_at(pat, pi, str, k)) return true;
            return false;
        }
        if (si >= str.size()) return false;
        if (pc == '?') {
            ++pi;
            ++si;
            continue;
        }
        if (pc == '[') {
            size_t j = pi + 1;
            bool negate = false;
            if (j < pat.size() && pat[j] == '!') {
                negate = true;
                ++j;
            }
            bool matched = false;
            bool first = true;
            char c = str[si];
            while (j < pat.size() && (pat[j] != ']' || first)) {
                if (j + 2 < pat.size() && pat[j + 1] == '-' && pat[j + 2] != ']') {
                    if (pat[j] <= c && c <= pat[j + 2]) matched = true;
                    j += 3;
                } else {
                    if (pat[j] == c) matched = true;
                    ++j;
                }
                first = false;
            }
            if (j >= pat.size()) return false;  // unterminated; validation catches this
            if (matched == negate) return false;
            pi = j + 1;
            ++si;
            continue;
        }
        if (pc == '\\' && pi + 1 < pat.size()) ++pi;
        if (pat[pi] != str[si]) return false;
        ++pi;
        ++si;
    }
    return si == str.size();
}

}  // namespace detail

inline bool glob_match(std::string_view pattern, std::string_view str) {
    return detail::glob_match_at(pattern, 0, str, 0);
}

inline bool matches_any_glob(const std::vector<std::string>& patterns, std::string_view str) {
    for (const auto& p : patterns)
        if (glob_match(p, str)) return true;
    return false;
}

// ------------------------------------------------------------------- paths

// True when `rel` stays inside the root it is resolved against: relative,
// and never walks above the start through ".." segments.
inline bool path_stays_inside_root(std::string_view rel) {
    if (rel.empty()) return false;
    fs::path p{std::string(rel)};
    if (p.is_absolute()) return false;
    int depth = 0;
    for (const auto& part : p) {
        std::string s = part.string();
        if (s == "..") {
            if (--depth < 0) return false;
        } else if (s != "." && !s.empty()) {
            ++depth;
        }
    }
    return true;
}

inline bool is_url(std::string_view s) {
    return starts_with(s, "http://") || starts_with(s, "https://");
}

// ---------------------------------------------------------------- file io

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::optional<std::string> read_file_if_exists(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) return std::nullopt;
    return read_file(path);
}

inline void write_file(const fs::path& path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("short write to " + path.string());
}

// Write to a sibling temp file, then rename over the destination.
inline void write_file_atomic(const fs::path& path, std::string_view content) {
    fs::path tmp = path;
    tmp += ".tmp";
    write_file(tmp, content);
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string());
    }
}

// All regular files under root, as sorted generic relative paths.
inline std::vector<std::string> list_files_recursive(const fs::path& root) {
    std::vector<std::string> out;
    if (!fs::exists(root)) return out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file())
            out.push_back(fs::relative(entry.path(), root).generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ----------------------------------------------------------------- encoding

inline bool is_valid_utf8(std::string_view s) {
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        size_t extra;
        unsigned min_cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            extra = 1;
            min_cp = 0x80;
        } else if ((c & 0xf0) == 0xe0) {
            extra = 2;
            min_cp = 0x800;
        } else if ((c & 0xf8) == 0xf0) {
            extra = 3;
            min_cp = 0x10000;
        } else {
            return false;
        }
        if (i + extra >= s.size()) return false;
        unsigned cp = c & (0x3f >> extra);
        for (size_t k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3f);
        }
        if (cp < min_cp || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return false;
        i += extra + 1;
    }
    return true;
}

inline std::string base64_encode(std::string_view data) {
    static const char alphabet[] =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    size_t i = 0;
    while (i + 2 < data.size()) {
        unsigned v = (static_cast<unsigned char>(data[i]) << 16) |
                     (static_cast<unsigned char>(data[i + 1]) << 8) |
                     static_cast<unsigned char>(data[i + 2]);
        out += alphabet[(v >> 18) & 63];
        out += alphabet[(v >> 12) & 63];
        out += alphabet[(v >> 6) & 63];
        out += alphabet[v & 63];
        i += 3;
    }
    if (i < data.size()) {
        unsigned v = static_cast<unsigned char>(data[i]) << 16;
        bool two = i + 1 < data.size();
        if (two) v |= static_cast<unsigned char>(data[i + 1]) << 8;
        out += alphabet[(v >> 18) & 63];
        out += alphabet[(v >> 12) & 63];
        out += two ? alphabet[(v >> 6) & 63] : '=';
        out += '=';
    }
    return out;
}

inline std::optional<std::string> base64_decode(std::string_view text) {
    auto value_of = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::string out;
    unsigned buffer = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=' || c == '\n' || c == '\r') continue;
        int v = value_of(c);
        if (v < 0) return std::nullopt;
        buffer = (buffer << 6) | static_cast<unsigned>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out += static_cast<char>((buffer >> bits) & 0xff);
        }
    }
    return out;
}

// ------------------------------------------------------------------- hash

inline std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("EVP_Digest failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

// Stable digest of a directory tree: sha256 over "<path>\0<content-hash>\n"
// lines in sorted path order.
inline std::string tree_hash(const fs::path& root) {
    std::string acc;
    for (const auto& rel : list_files_recursive(root)) {
        acc += rel;
        acc += '\0';
        acc += sha256_hex(read_file(root / rel));
        acc += '\n';
    }
    return sha256_hex(acc);
}

}  // namespace ottr
