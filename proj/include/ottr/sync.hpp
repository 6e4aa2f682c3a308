#pragma once

#include <ctime>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ottr/core.hpp"
#include "ottr/diff.hpp"
#include "ottr/http.hpp"
#include "ottr/manifest.hpp"

// Template synchronization: upstream template changes flow to downstream
// courses as reviewable patchsets, and borrowed chapters are fetched with
// hash pinning. The lockfile `_ottr.lock` records content hashes:
//
//   sha256 <hex> <origin> <file>
//
// sorted by (origin, file), one entry per pinned file.

namespace ottr {

class OptInDisabled : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class UpstreamUnreachable : public IoError {
public:
    using IoError::IoError;
};

class OriginUnreachable : public IoError {
public:
    using IoError::IoError;
};

class HashMismatch : public std::runtime_error {
public:
    HashMismatch(std::string origin, std::string file, std::string expected, std::string actual)
        : std::runtime_error("hash mismatch for " + origin + "/" + file + ": pinned " + expected +
                             ", fetched " + actual),
          origin_(std::move(origin)),
          file_(std::move(file)),
          expected_(std::move(expected)),
          actual_(std::move(actual)) {}

    const std::string& expected() const { return expected_; }
    const std::string& actual() const { return actual_; }
    const std::string& origin() const { return origin_; }
    const std::string& file() const { return file_; }

private:
    std::string origin_, file_, expected_, actual_;
};

class StaleDownstream : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- lockfile

inline constexpr std::string_view kLockFileName = "_ottr.lock";

class Lockfile {
public:
    static Lockfile load(const fs::path& course_root) {
        Lockfile lock;
        lock.path_ = course_root / kLockFileName;
        if (auto text = read_file_if_exists(lock.path_)) {
            for (const auto& line : split_lines(*text)) {
                if (trim(line).empty()) continue;
                // "sha256 <hex> <origin> <file>"; file may contain spaces
                size_t s1 = line.find(' ');
                size_t s2 = line.find(' ', s1 + 1);
                size_t s3 = line.find(' ', s2 + 1);
                if (s1 == std::string::npos || s2 == std::string::npos || s3 == std::string::npos)
                    continue;
                if (line.substr(0, s1) != "sha256") continue;
                std::string hash = line.substr(s1 + 1, s2 - s1 - 1);
                std::string origin = line.substr(s2 + 1, s3 - s2 - 1);
                std::string file = line.substr(s3 + 1);
                lock.entries_[{origin, file}] = hash;
            }
        }
        return lock;
    }

    std::optional<std::string> hash_for(const std::string& origin, const std::string& file) const {
        auto it = entries_.find({origin, file});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void record(const std::string& origin, const std::string& file, const std::string& hash) {
        auto& slot = entries_[{origin, file}];
        if (slot != hash) {
            slot = hash;
            dirty_ = true;
        }
    }

    void remove(const std::string& origin, const std::string& file) {
        if (entries_.erase({origin, file}) > 0) dirty_ = true;
    }

    bool dirty() const { return dirty_; }

    void save() {
        if (!dirty_) return;
        std::string out;
        for (const auto& [key, hash] : entries_)
            out += "sha256 " + hash + " " + key.first + " " + key.second + "\n";
        write_file_atomic(path_, out);
        dirty_ = false;
    }

    const std::map<std::pair<std::string, std::string>, std::string>& entries() const {
        return entries_;
    }

private:
    fs::path path_;
    std::map<std::pair<std::string, std::string>, std::string> entries_;
    bool dirty_ = false;
};

// ------------------------------------------------------- borrowed content

struct FetchedContent {
    std::string content;
    std::string hash;
};

// Fetches a chapter from a local directory or an http(s) origin. The first
// fetch pins the content hash in the lockfile; later fetches verify it and
// throw HashMismatch if the origin silently changed. URL fetches are
// served from `cache_dir` when the cached bytes still match the pin.
// Relative local origins resolve against `local_base` (the course root);
// the lockfile keeps the origin string as written.
inline FetchedContent fetch_borrowed_chapter(const std::string& origin, const std::string& file,
                                             Lockfile& lockfile, const fs::path& cache_dir = {},
                                             const fs::path& local_base = {}) {
    auto pinned = lockfile.hash_for(origin, file);
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = cache_dir / (sha256_hex(origin + std::string(1, '\0') + file).substr(0, 16) +
                                  "__" + fs::path(file).filename().string());
        if (pinned && fs::exists(cache_file)) {
            std::string cached = read_file(cache_file);
            if (sha256_hex(cached) == *pinned) return {std::move(cached), *pinned};
        }
    }

    std::string content;
    if (is_url(origin)) {
        std::string url = origin;
        if (!url.empty() && url.back() != '/') url += '/';
        url += file;
        std::string error;
        auto body = http_get(url, &error);
        if (!body) throw OriginUnreachable("cannot fetch borrowed chapter: " + error);
        content = std::move(*body);
    } else {
        fs::path origin_path(origin);
        if (origin_path.is_relative() && !local_base.empty()) origin_path = local_base / origin_path;
        fs::path source = origin_path / file;
        auto text = read_file_if_exists(source);
        if (!text) throw OriginUnreachable("cannot read borrowed chapter: " + source.string());
        content = std::move(*text);
    }

    std::string hash = sha256_hex(content);
    if (pinned && *pinned != hash) throw HashMismatch(origin, file, *pinned, hash);
    if (!pinned) lockfile.record(origin, file, hash);
    if (!cache_file.empty()) write_file_atomic(cache_file, content);
    return {std::move(content), std::move(hash)};
}

// --------------------------------------------------------------- patchset

enum class PatchAction { Add, Update, Delete };

inline constexpr std::string_view patch_action_name(PatchAction a) {
    switch (a) {
        case PatchAction::Add: return "add";
        case PatchAction::Update: return "update";
        case PatchAction::Delete: return "delete";
    }
    return "";
}

struct PatchEntry {
    std::string path;
    PatchAction action = PatchAction::Update;
    std::string old_hash;  // empty for add
    std::string new_hash;  // empty for delete
    std::string diff;      // unified diff text
};

struct PatchSet {
    std::string upstream;       // path or URL as configured
    std::string upstream_hash;  // tree hash of the upstream synced file set
    int64_t created_at = 0;
    std::vector<PatchEntry> entries;  // sorted by path

    bool empty() const { return entries.empty(); }
};

struct SyncOptions {
    std::optional<std::string> upstream_override;  // defaults to manifest sync.upstream
    std::vector<std::string> extra_exclusions;
    std::optional<int64_t> timestamp;
};

namespace sync_detail {

inline std::vector<std::string> owned_files(const fs::path& root,
                                            const std::vector<std::string>& owned,
                                            const std::vector<std::string>& exclusions) {
    std::vector<std::string> out;
    for (const auto& rel : list_files_recursive(root)) {
        if (rel == kLockFileName) continue;
        if (!matches_any_glob(owned, rel)) continue;
        if (matches_any_glob(exclusions, rel)) continue;
        out.push_back(rel);
    }
    return out;
}

}  // namespace sync_detail

// Computes the exclusion-filtered patchset turning the downstream's synced
// file set into the upstream's. The downstream must have opted in. Files
// are deleted only when the downstream lockfile marks them template-owned.
inline PatchSet compute_patchset(const fs::path& downstream_root,
                                 const SyncOptions& options = {}) {
    CourseManifest downstream = load_manifest(downstream_root);
    if (!downstream.sync || !downstream.sync->opt_in)
        throw OptInDisabled("template sync requires sync.opt_in: true in the downstream manifest");

    const std::string upstream_ref = options.upstream_override
                                         ? *options.upstream_override
                                         : downstream.sync->upstream;
    if (upstream_ref.empty())
        throw ConfigError("no upstream configured (manifest key: sync.upstream)");
    // Tree sync works against a local checkout of the template.
    if (is_url(upstream_ref))
        throw UpstreamUnreachable("tree sync needs a local upstream path, got URL: " +
                                  upstream_ref);
    fs::path upstream_root = fs::path(upstream_ref).is_absolute()
                                 ? fs::path(upstream_ref)
                                 : downstream_root / upstream_ref;
    if (!fs::is_directory(upstream_root))
        throw UpstreamUnreachable("upstream not readable: " + upstream_root.string());

    // The upstream's own manifest declares which files it owns.
    std::vector<std::string> owned = SyncConfig::default_owned();
    if (auto raw = read_file_if_exists(upstream_root / kManifestFileName)) {
        auto parsed = parse_manifest(*raw);
        if (parsed.ok() && parsed.manifest->sync) owned = parsed.manifest->sync->owned;
    }

    std::vector<std::string> exclusions = downstream.sync->exclusions;
    exclusions.insert(exclusions.end(), options.extra_exclusions.begin(),
                      options.extra_exclusions.end());

    Lockfile lock = Lockfile::load(downstream_root);

    auto upstream_files = sync_detail::owned_files(upstream_root, owned, exclusions);
    auto downstream_files = sync_detail::owned_files(downstream_root, owned, exclusions);

    PatchSet patchset;
    patchset.upstream = upstream_ref;
    patchset.created_at = options.timestamp ? *options.timestamp
                                            : static_cast<int64_t>(std::time(nullptr));

    std::string upstream_acc;
    std::map<std::string, std::string> upstream_content;
    for (const auto& rel : upstream_files) {
        upstream_content[rel] = read_file(upstream_root / rel);
        upstream_acc += rel;
        upstream_acc += '\0';
        upstream_acc += sha256_hex(upstream_content[rel]);
        upstream_acc += '\n';
    }
    patchset.upstream_hash = sha256_hex(upstream_acc);

    std::set<std::string> downstream_set(downstream_files.begin(), downstream_files.end());

    for (const auto& rel : upstream_files) {
        const std::string& new_content = upstream_content[rel];
        auto old_content = read_file_if_exists(downstream_root / rel);
        if (old_content && *old_content == new_content) continue;
        PatchEntry entry;
        entry.path = rel;
        entry.new_hash = sha256_hex(new_content);
        if (old_content) {
            entry.action = PatchAction::Update;
            entry.old_hash = sha256_hex(*old_content);
            entry.diff = diff::unified_diff(*old_content, new_content, "a/" + rel, "b/" + rel);
        } else {
            entry.action = PatchAction::Add;
            entry.diff = diff::unified_diff("", new_content, "/dev/null", "b/" + rel);
        }
        patchset.entries.push_back(std::move(entry));
    }

    for (const auto& rel : downstream_files) {
        if (upstream_content.count(rel)) continue;
        // Only delete files the lockfile pinned as template-owned.
        if (!lock.hash_for(upstream_ref, rel)) continue;
        std::string old_content = read_file(downstream_root / rel);
        PatchEntry entry;
        entry.path = rel;
        entry.action = PatchAction::Delete;
        entry.old_hash = sha256_hex(old_content);
        entry.diff = diff::unified_diff(old_content, "", "a/" + rel, "/dev/null");
        patchset.entries.push_back(std::move(entry));
    }

    std::sort(patchset.entries.begin(), patchset.entries.end(),
              [](const PatchEntry& a, const PatchEntry& b) { return a.path < b.path; });
    return patchset;
}

enum class ApplyMode { DryRun, Apply };

struct ApplyReport {
    ApplyMode mode = ApplyMode::DryRun;
    std::vector<std::pair<std::string, PatchAction>> changes;
};

// Applies a patchset all-or-nothing. Every entry is verified against the
// current downstream bytes first; any mismatch aborts with StaleDownstream
// before a single file is touched.
inline ApplyReport apply_patchset(const PatchSet& patchset, const fs::path& downstream_root,
                                  ApplyMode mode) {
    ApplyReport report;
    report.mode = mode;

    struct StagedWrite {
        fs::path target;
        std::string content;
    };
    std::vector<StagedWrite> writes;
    std::vector<fs::path> deletes;

    for (const auto& entry : patchset.entries) {
        fs::path target = downstream_root / entry.path;
        auto current = read_file_if_exists(target);
        switch (entry.action) {
            case PatchAction::Add:
                if (current)
                    throw StaleDownstream("file appeared since patchset computation: " +
                                          entry.path);
                break;
            case PatchAction::Update:
            case PatchAction::Delete: {
                if (!current)
                    throw StaleDownstream("file vanished since patchset computation: " +
                                          entry.path);
                std::string have = sha256_hex(*current);
                if (have != entry.old_hash)
                    throw StaleDownstream("file changed since patchset computation: " + entry.path +
                                          " (expected " + entry.old_hash.substr(0, 12) + ", found " +
                                          have.substr(0, 12) + ")");
                break;
            }
        }
        if (entry.action == PatchAction::Delete) {
            deletes.push_back(target);
        } else {
            std::string base = current ? *current : "";
            std::string next;
            try {
                next = diff::apply_unified(entry.diff, base);
            } catch (const diff::ApplyConflict& e) {
                throw StaleDownstream("diff no longer applies to " + entry.path + ": " + e.what());
            }
            if (sha256_hex(next) != entry.new_hash)
                throw StaleDownstream("applied content for " + entry.path +
                                      " does not match the recorded hash");
            writes.push_back({target, std::move(next)});
        }
        report.changes.emplace_back(entry.path, entry.action);
    }

    if (mode == ApplyMode::DryRun) return report;

    for (const auto& w : writes) write_file_atomic(w.target, w.content);
    std::error_code ec;
    for (const auto& d : deletes) fs::remove(d, ec);

    Lockfile lock = Lockfile::load(downstream_root);
    for (const auto& entry : patchset.entries) {
        if (entry.action == PatchAction::Delete)
            lock.remove(patchset.upstream, entry.path);
        else
            lock.record(patchset.upstream, entry.path, entry.new_hash);
    }
    lock.save();
    return report;
}

// ------------------------------------------------------------ serialization

// Diff text for files that are not valid UTF-8 (binary tooling assets)
// rides in base64 so the JSON serialization stays lossless.
inline nlohmann::ordered_json patchset_json(const PatchSet& p) {
    nlohmann::ordered_json j;
    j["upstream"] = p.upstream;
    j["upstream_hash"] = p.upstream_hash;
    j["created_at"] = p.created_at;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : p.entries) {
        bool text = is_valid_utf8(e.diff);
        j["entries"].push_back({{"path", e.path},
                                {"action", std::string(patch_action_name(e.action))},
                                {"old_hash", e.old_hash},
                                {"new_hash", e.new_hash},
                                {"diff_encoding", text ? "utf-8" : "base64"},
                                {"diff", text ? e.diff : base64_encode(e.diff)}});
    }
    return j;
}

inline std::string patchset_diff_text(const PatchSet& p) {
    std::string out;
    for (const auto& e : p.entries) out += e.diff;
    return out;
}

inline PatchSet patchset_from_json(const nlohmann::json& j) {
    PatchSet p;
    p.upstream = j.at("upstream").get<std::string>();
    p.upstream_hash = j.at("upstream_hash").get<std::string>();
    p.created_at = j.at("created_at").get<int64_t>();
    for (const auto& e : j.at("entries")) {
        PatchEntry entry;
        entry.path = e.at("path").get<std::string>();
        std::string action = e.at("action").get<std::string>();
        if (action == "add")
            entry.action = PatchAction::Add;
        else if (action == "update")
            entry.action = PatchAction::Update;
        else if (action == "delete")
            entry.action = PatchAction::Delete;
        else
            throw ConfigError("patchset entry has unknown action: " + action);
        entry.old_hash = e.at("old_hash").get<std::string>();
        entry.new_hash = e.at("new_hash").get<std::string>();
        entry.diff = e.at("diff").get<std::string>();
        if (e.value("diff_encoding", "utf-8") == "base64") {
            auto decoded = base64_decode(entry.diff);
            if (!decoded) throw ConfigError("patchset entry has invalid base64 diff: " + entry.path);
            entry.diff = std::move(*decoded);
        }
        p.entries.push_back(std::move(entry));
    }
    return p;
}

}  // namespace ottr
