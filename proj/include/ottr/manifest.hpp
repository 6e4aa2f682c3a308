#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "ottr/core.hpp"

// The course manifest `_ottr.yml`: the single configuration file that
// drives chapter order, publishing targets, check toggles, credits and
// template-sync behavior. Values are immutable after parsing.

namespace ottr {

enum class Target { Site, Leanpub, Coursera };

inline constexpr std::string_view target_name(Target t) {
    switch (t) {
        case Target::Site: return "site";
        case Target::Leanpub: return "leanpub";
        case Target::Coursera: return "coursera";
    }
    return "";
}

inline std::optional<Target> target_from_name(std::string_view s) {
    if (s == "site") return Target::Site;
    if (s == "leanpub") return Target::Leanpub;
    if (s == "coursera") return Target::Coursera;
    return std::nullopt;
}

inline const std::vector<Target>& all_targets() {
    static const std::vector<Target> t{Target::Site, Target::Leanpub, Target::Coursera};
    return t;
}

enum class CheckKind { Spelling, Urls, Quizzes, AltText };

inline constexpr std::string_view check_name(CheckKind c) {
    switch (c) {
        case CheckKind::Spelling: return "spelling";
        case CheckKind::Urls: return "urls";
        case CheckKind::Quizzes: return "quizzes";
        case CheckKind::AltText: return "alt_text";
    }
    return "";
}

inline std::optional<CheckKind> check_from_name(std::string_view s) {
    if (s == "spelling") return CheckKind::Spelling;
    if (s == "urls") return CheckKind::Urls;
    if (s == "quizzes") return CheckKind::Quizzes;
    if (s == "alt_text") return CheckKind::AltText;
    return std::nullopt;
}

inline const std::vector<CheckKind>& all_checks() {
    static const std::vector<CheckKind> c{CheckKind::Spelling, CheckKind::Urls,
                                          CheckKind::Quizzes, CheckKind::AltText};
    return c;
}

struct CheckToggles {
    bool spelling = true;
    bool urls = true;
    bool quizzes = true;
    bool alt_text = true;

    bool operator==(const CheckToggles&) const = default;

    bool enabled(CheckKind c) const {
        switch (c) {
            case CheckKind::Spelling: return spelling;
            case CheckKind::Urls: return urls;
            case CheckKind::Quizzes: return quizzes;
            case CheckKind::AltText: return alt_text;
        }
        return false;
    }

    void set(CheckKind c, bool on) {
        switch (c) {
            case CheckKind::Spelling: spelling = on; break;
            case CheckKind::Urls: urls = on; break;
            case CheckKind::Quizzes: quizzes = on; break;
            case CheckKind::AltText: alt_text = on; break;
        }
    }
};

struct BorrowRef {
    std::string origin;  // local path or http(s) URL of the other course
    std::string file;    // chapter path relative to the origin

    bool operator==(const BorrowRef&) const = default;
};

struct ChapterEntry {
    std::string source;  // empty when borrowed
    std::optional<BorrowRef> borrow;
    std::optional<std::string> title_override;
    int line = 0;

    bool is_borrowed() const { return borrow.has_value(); }

    // The stem naming this chapter's output files across all targets.
    std::string output_stem() const {
        const std::string& p = borrow ? borrow->file : source;
        return fs::path(p).stem().string();
    }

    bool operator==(const ChapterEntry& o) const {
        return source == o.source && borrow == o.borrow && title_override == o.title_override;
    }
};

struct Contributor {
    std::string name;
    std::vector<std::string> roles;  // highest involvement first

    bool operator==(const Contributor&) const = default;
};

struct SyncConfig {
    std::string upstream;
    std::vector<std::string> exclusions;
    bool opt_in = false;
    // Globs naming the template-owned file set, declared by the upstream's
    // own manifest. Sync never touches files outside these.
    std::vector<std::string> owned = default_owned();

    static std::vector<std::string> default_owned() {
        return {"tooling/*", ".github/*"};
    }

    bool operator==(const SyncConfig&) const = default;
};

struct CourseManifest {
    std::string title;
    std::vector<ChapterEntry> chapters;
    std::vector<Target> targets = all_targets();
    CheckToggles checks;
    std::string quiz_dir = "quizzes";
    std::string wordlist = "dictionary.txt";
    std::vector<std::string> url_exclusions;
    std::optional<std::string> feedback_url;
    std::vector<Contributor> credits;
    std::optional<SyncConfig> sync;
    std::optional<std::string> base_url;

    bool has_target(Target t) const {
        return std::find(targets.begin(), targets.end(), t) != targets.end();
    }

    bool operator==(const CourseManifest&) const = default;
};

struct ManifestError {
    enum class Kind { MissingField, DuplicateChapter, EmptyTargets, BadGlob, PathEscape, Syntax };

    Kind kind;
    std::string key;
    int line = 0;
    std::string detail;

    std::string message() const {
        std::string_view name;
        switch (kind) {
            case Kind::MissingField: name = "MissingField"; break;
            case Kind::DuplicateChapter: name = "DuplicateChapter"; break;
            case Kind::EmptyTargets: name = "EmptyTargets"; break;
            case Kind::BadGlob: name = "BadGlob"; break;
            case Kind::PathEscape: name = "PathEscape"; break;
            case Kind::Syntax: name = "Syntax"; break;
        }
        std::string out = std::string(name) + ": " + key;
        if (line > 0) out += " (line " + std::to_string(line) + ")";
        if (!detail.empty()) out += ": " + detail;
        return out;
    }
};

struct ManifestParse {
    std::optional<CourseManifest> manifest;
    std::vector<ManifestError> errors;
    std::vector<std::string> warnings;

    bool ok() const { return manifest.has_value() && errors.empty(); }
};

namespace detail {

inline int mark_line(const YAML::Node& n) {
    return n.Mark().line >= 0 ? n.Mark().line + 1 : 0;
}

inline std::optional<std::string> scalar(const YAML::Node& n) {
    if (n && n.IsScalar()) return n.as<std::string>();
    return std::nullopt;
}

inline void check_relative_path(const std::string& value, const std::string& key, int line,
                                std::vector<ManifestError>& errors) {
    if (!path_stays_inside_root(value))
        errors.push_back({ManifestError::Kind::PathEscape, key, line,
                          "'" + value + "' leaves the course root"});
}

inline void check_globs(const YAML::Node& list, const std::string& key,
                        std::vector<std::string>& out, std::vector<ManifestError>& errors) {
    if (!list) return;
    if (!list.IsSequence()) {
        errors.push_back({ManifestError::Kind::BadGlob, key, mark_line(list), "expected a list"});
        return;
    }
    for (const auto& item : list) {
        auto s = scalar(item);
        if (!s) {
            errors.push_back({ManifestError::Kind::BadGlob, key, mark_line(item), "expected a string"});
            continue;
        }
        if (auto err = glob_error(*s)) {
            errors.push_back({ManifestError::Kind::BadGlob, key, mark_line(item),
                              "'" + *s + "': " + *err});
            continue;
        }
        out.push_back(*s);
    }
}

inline void warn_unknown_keys(const YAML::Node& map, const std::set<std::string>& known,
                              const std::string& scope, std::vector<std::string>& warnings) {
    if (!map || !map.IsMap()) return;
    for (const auto& kv : map) {
        std::string key = kv.first.as<std::string>("");
        if (!known.count(key))
            warnings.push_back("unknown key '" + (scope.empty() ? key : scope + "." + key) +
                               "' (line " + std::to_string(mark_line(kv.first)) + ") ignored");
    }
}

}  // namespace detail

inline ManifestParse parse_manifest(const std::string& raw) {
    using Kind = ManifestError::Kind;
    ManifestParse result;
    auto& errors = result.errors;
    auto& warnings = result.warnings;

    YAML::Node root;
    try {
        root = YAML::Load(raw);
    } catch (const YAML::Exception& e) {
        errors.push_back({Kind::Syntax, "_ottr.yml", e.mark.line + 1, e.msg});
        return result;
    }
    if (!root.IsMap()) {
        errors.push_back({Kind::Syntax, "_ottr.yml", 1, "manifest must be a YAML mapping"});
        return result;
    }

    CourseManifest m;
    detail::warn_unknown_keys(root,
                              {"title", "chapters", "targets", "checks", "quiz_dir", "wordlist",
                               "url_exclusions", "feedback_url", "credits", "sync", "base_url"},
                              "", warnings);

    // title
    if (auto t = detail::scalar(root["title"]); t && !trim(*t).empty()) {
        m.title = trim(*t);
    } else {
        errors.push_back({Kind::MissingField, "title", detail::mark_line(root["title"]),
                          "course title is required"});
    }

    // chapters
    const YAML::Node chapters = root["chapters"];
    if (!chapters || !chapters.IsSequence() || chapters.size() == 0) {
        errors.push_back({Kind::MissingField, "chapters",
                          chapters ? detail::mark_line(chapters) : 0,
                          "at least one chapter is required"});
    } else {
        std::set<std::string> seen_stems;
        size_t idx = 0;
        for (const auto& node : chapters) {
            std::string key = "chapters[" + std::to_string(idx++) + "]";
            int line = detail::mark_line(node);
            if (!node.IsMap()) {
                errors.push_back({Kind::MissingField, key, line, "expected {source: ...} or {borrow: ...}"});
                continue;
            }
            detail::warn_unknown_keys(node, {"source", "borrow", "title_override"}, key, warnings);
            ChapterEntry entry;
            entry.line = line;
            auto source = detail::scalar(node["source"]);
            const YAML::Node borrow = node["borrow"];
            if (source && borrow) {
                errors.push_back({Kind::MissingField, key, line, "chapter has both source and borrow"});
                continue;
            }
            if (source) {
                entry.source = *source;
                detail::check_relative_path(entry.source, key + ".source", line, errors);
            } else if (borrow && borrow.IsMap()) {
                auto origin = detail::scalar(borrow["origin"]);
                auto file = detail::scalar(borrow["file"]);
                if (!origin || !file) {
                    errors.push_back({Kind::MissingField, key + ".borrow", detail::mark_line(borrow),
                                      "borrow needs origin and file"});
                    continue;
                }
                entry.borrow = BorrowRef{*origin, *file};
                detail::check_relative_path(*file, key + ".borrow.file", line, errors);
            } else {
                errors.push_back({Kind::MissingField, key, line, "chapter needs source or borrow"});
                continue;
            }
            if (auto to = detail::scalar(node["title_override"])) entry.title_override = *to;

            std::string stem = entry.output_stem();
            if (!seen_stems.insert(stem).second) {
                errors.push_back({Kind::DuplicateChapter, key, line,
                                  "duplicate chapter output name '" + stem + "'"});
                continue;
            }
            m.chapters.push_back(std::move(entry));
        }
        if (m.chapters.empty() && errors.empty())
            errors.push_back({Kind::MissingField, "chapters", detail::mark_line(chapters),
                              "at least one chapter is required"});
    }

    // targets
    if (const YAML::Node targets = root["targets"]) {
        if (!targets.IsSequence()) {
            errors.push_back({Kind::EmptyTargets, "targets", detail::mark_line(targets),
                              "expected a list of targets"});
        } else {
            std::vector<Target> parsed;
            for (const auto& item : targets) {
                auto s = detail::scalar(item);
                auto t = s ? target_from_name(*s) : std::nullopt;
                if (!t) {
                    warnings.push_back("unknown target '" + s.value_or("?") + "' (line " +
                                       std::to_string(detail::mark_line(item)) + ") ignored");
                    continue;
                }
                if (std::find(parsed.begin(), parsed.end(), *t) != parsed.end()) {
                    warnings.push_back("duplicate target '" + *s + "' (line " +
                                       std::to_string(detail::mark_line(item)) + ") ignored");
                    continue;
                }
                parsed.push_back(*t);
            }
            if (parsed.empty()) {
                errors.push_back({Kind::EmptyTargets, "targets", detail::mark_line(targets),
                                  "no usable target; pick from site, leanpub, coursera"});
            } else {
                // canonical order: site, leanpub, coursera
                m.targets.clear();
                for (Target t : all_targets())
                    if (std::find(parsed.begin(), parsed.end(), t) != parsed.end())
                        m.targets.push_back(t);
            }
        }
    }

    // checks
    if (const YAML::Node checks = root["checks"]) {
        if (checks.IsMap()) {
            detail::warn_unknown_keys(checks, {"spelling", "urls", "quizzes", "alt_text"},
                                      "checks", warnings);
            for (CheckKind c : all_checks()) {
                const YAML::Node v = checks[std::string(check_name(c))];
                if (v && v.IsScalar()) m.checks.set(c, v.as<bool>(true));
            }
        } else if (!checks.IsNull()) {
            warnings.push_back("checks: expected a mapping; using defaults");
        }
    }

    // paths
    if (auto q = detail::scalar(root["quiz_dir"])) {
        m.quiz_dir = *q;
        detail::check_relative_path(m.quiz_dir, "quiz_dir", detail::mark_line(root["quiz_dir"]), errors);
    }
    if (auto w = detail::scalar(root["wordlist"])) {
        m.wordlist = *w;
        detail::check_relative_path(m.wordlist, "wordlist", detail::mark_line(root["wordlist"]), errors);
    }

    detail::check_globs(root["url_exclusions"], "url_exclusions", m.url_exclusions, errors);

    if (auto f = detail::scalar(root["feedback_url"])) m.feedback_url = *f;
    if (auto b = detail::scalar(root["base_url"])) m.base_url = *b;

    // credits
    if (const YAML::Node credits = root["credits"]) {
        if (credits.IsSequence()) {
            size_t idx = 0;
            for (const auto& node : credits) {
                std::string key = "credits[" + std::to_string(idx++) + "]";
                Contributor c;
                auto name = detail::scalar(node["name"]);
                if (!name || trim(*name).empty()) {
                    errors.push_back({Kind::MissingField, key + ".name", detail::mark_line(node),
                                      "contributor name is required"});
                    continue;
                }
                c.name = trim(*name);
                const YAML::Node roles = node["roles"];
                if (roles && roles.IsSequence())
                    for (const auto& r : roles)
                        if (auto s = detail::scalar(r)) c.roles.push_back(*s);
                if (c.roles.empty()) {
                    errors.push_back({Kind::MissingField, key + ".roles", detail::mark_line(node),
                                      "at least one role is required"});
                    continue;
                }
                detail::warn_unknown_keys(node, {"name", "roles"}, key, warnings);
                m.credits.push_back(std::move(c));
            }
        } else {
            warnings.push_back("credits: expected a list; ignored");
        }
    }

    // sync
    if (const YAML::Node sync = root["sync"]) {
        if (sync.IsMap()) {
            detail::warn_unknown_keys(sync, {"upstream", "exclusions", "opt_in", "owned"},
                                      "sync", warnings);
            SyncConfig sc;
            if (auto up = detail::scalar(sync["upstream"])) {
                sc.upstream = *up;
            } else {
                errors.push_back({Kind::MissingField, "sync.upstream", detail::mark_line(sync),
                                  "sync requires an upstream path or URL"});
            }
            detail::check_globs(sync["exclusions"], "sync.exclusions", sc.exclusions, errors);
            if (const YAML::Node o = sync["opt_in"]; o && o.IsScalar()) sc.opt_in = o.as<bool>(false);
            if (sync["owned"]) {
                sc.owned.clear();
                detail::check_globs(sync["owned"], "sync.owned", sc.owned, errors);
            }
            m.sync = std::move(sc);
        } else {
            warnings.push_back("sync: expected a mapping; ignored");
        }
    }

    if (errors.empty()) result.manifest = std::move(m);
    return result;
}

namespace detail {

inline std::string yaml_quote(const std::string& s) {
    // Plain scalars only for a conservative charset; anything that could
    // collide with YAML indicators gets double quotes.
    bool plain = !s.empty() && s.front() != ' ' && s.back() != ' ' && s.front() != '-' &&
                 s != "true" && s != "false" && s != "null" &&
                 s.find_first_not_of(
                     "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789._/ -") ==
                     std::string::npos;
    if (plain) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

inline std::string yaml_string_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += yaml_quote(items[i]);
    }
    out += "]";
    return out;
}

}  // namespace detail

// Canonical manifest rendering: parse_manifest(render_manifest(m)) yields a
// manifest equal to m. Optional fields at their defaults are still written
// so the file documents the effective configuration.
inline std::string render_manifest(const CourseManifest& m) {
    using detail::yaml_quote;
    std::string out;
    out += "title: " + yaml_quote(m.title) + "\n";
    std::vector<std::string> tnames;
    for (Target t : m.targets) tnames.emplace_back(target_name(t));
    out += "targets: " + detail::yaml_string_list(tnames) + "\n";
    out += "chapters:\n";
    for (const auto& ch : m.chapters) {
        if (ch.is_borrowed())
            out += "  - borrow: {origin: " + yaml_quote(ch.borrow->origin) +
                   ", file: " + yaml_quote(ch.borrow->file) + "}\n";
        else
            out += "  - source: " + yaml_quote(ch.source) + "\n";
        if (ch.title_override)
            out += "    title_override: " + yaml_quote(*ch.title_override) + "\n";
    }
    out += "checks: {spelling: " + std::string(m.checks.spelling ? "true" : "false") +
           ", urls: " + (m.checks.urls ? "true" : "false") +
           ", quizzes: " + (m.checks.quizzes ? "true" : "false") +
           ", alt_text: " + (m.checks.alt_text ? "true" : "false") + "}\n";
    out += "quiz_dir: " + yaml_quote(m.quiz_dir) + "\n";
    out += "wordlist: " + yaml_quote(m.wordlist) + "\n";
    if (!m.url_exclusions.empty())
        out += "url_exclusions: " + detail::yaml_string_list(m.url_exclusions) + "\n";
    if (m.feedback_url) out += "feedback_url: " + yaml_quote(*m.feedback_url) + "\n";
    if (m.base_url) out += "base_url: " + yaml_quote(*m.base_url) + "\n";
    if (!m.credits.empty()) {
        out += "credits:\n";
        for (const auto& c : m.credits)
            out += "  - {name: " + yaml_quote(c.name) +
                   ", roles: " + detail::yaml_string_list(c.roles) + "}\n";
    }
    if (m.sync) {
        out += "sync:\n";
        out += "  upstream: " + yaml_quote(m.sync->upstream) + "\n";
        if (!m.sync->exclusions.empty())
            out += "  exclusions: " + detail::yaml_string_list(m.sync->exclusions) + "\n";
        out += "  opt_in: " + std::string(m.sync->opt_in ? "true" : "false") + "\n";
        if (m.sync->owned != SyncConfig::default_owned())
            out += "  owned: " + detail::yaml_string_list(m.sync->owned) + "\n";
    }
    return out;
}

inline constexpr std::string_view kManifestFileName = "_ottr.yml";

// Loads and parses `<course_root>/_ottr.yml`, throwing ConfigError on any
// parse error. CLI-facing convenience; library callers use parse_manifest.
inline CourseManifest load_manifest(const fs::path& course_root,
                                    std::vector<std::string>* warnings = nullptr) {
    fs::path file = course_root / kManifestFileName;
    auto raw = read_file_if_exists(file);
    if (!raw) throw ConfigError("no manifest found at " + file.string());
    ManifestParse parsed = parse_manifest(*raw);
    if (warnings) *warnings = parsed.warnings;
    if (!parsed.ok()) {
        std::string msg = "invalid manifest " + file.string();
        for (const auto& e : parsed.errors) msg += "\n  " + e.message();
        throw ConfigError(msg);
    }
    return *parsed.manifest;
}

}  // namespace ottr
