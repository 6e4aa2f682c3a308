#pragma once

#include <atomic>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ottr/course.hpp"
#include "ottr/manifest.hpp"
#include "ottr/markdown.hpp"
#include "ottr/probe.hpp"
#include "ottr/quiz.hpp"
#include "ottr/wordlist.hpp"

// The configurable validation suite: spelling, URLs, quiz format, alt
// text. Each check produces findings; run_checks executes exactly the
// manifest-enabled ones and aggregates a deterministic report.

namespace ottr {

struct CheckFinding {
    CheckKind check = CheckKind::Spelling;
    Severity severity = Severity::Warning;
    std::string path;
    int line = 0;
    std::string detail;

    bool operator==(const CheckFinding&) const = default;

    // Report order: by check, then path, then line, then detail.
    bool operator<(const CheckFinding& o) const {
        if (check != o.check) return static_cast<int>(check) < static_cast<int>(o.check);
        if (path != o.path) return path < o.path;
        if (line != o.line) return line < o.line;
        return detail < o.detail;
    }
};

struct CheckReport {
    std::vector<CheckFinding> findings;  // sorted
    CheckToggles enabled;
    int64_t started = 0;
    int64_t finished = 0;

    int count(CheckKind check, Severity severity) const {
        int n = 0;
        for (const auto& f : findings)
            if (f.check == check && f.severity == severity) ++n;
        return n;
    }

    int error_count() const {
        int n = 0;
        for (const auto& f : findings)
            if (f.severity == Severity::Error) ++n;
        return n;
    }

    int warning_count() const { return static_cast<int>(findings.size()) - error_count(); }

    bool failed() const { return error_count() > 0; }

    std::string_view status() const { return failed() ? "fail" : "pass"; }
};

// ----------------------------------------------------------------- spelling

// Flags every prose token missing from dictionary ∪ project_wordlist.
// Fenced code, code spans, URLs and image targets never reach the prose
// stream, so they are skipped by construction.
inline std::vector<CheckFinding> spell_check(const std::vector<ChapterDoc>& docs,
                                             const std::set<std::string>& dictionary,
                                             const std::set<std::string>& project_wordlist) {
    std::vector<CheckFinding> findings;
    for (const auto& doc : docs) {
        for (const auto& prose : doc.prose) {
            for (const auto& token : spell_tokens(prose.text)) {
                if (!word_known(token, dictionary, project_wordlist))
                    findings.push_back({CheckKind::Spelling, Severity::Warning, doc.source_path,
                                        prose.line, "unknown word: " + token});
            }
        }
    }
    return findings;
}

// --------------------------------------------------------------------- urls

struct UrlCheckOptions {
    int parallelism = 8;
};

// Internal relative links resolve against existing files and collected
// anchors; external http(s) links are probed with bounded parallelism.
// mailto:, non-http schemes and exclusion-glob matches are skipped. A
// chapter repeating one broken target yields a single finding for it.
inline std::vector<CheckFinding> url_check(const std::vector<ChapterDoc>& docs,
                                           const fs::path& course_root,
                                           const std::vector<std::string>& exclusions,
                                           const UrlProber& prober,
                                           const UrlCheckOptions& options = {}) {
    std::vector<CheckFinding> findings;
    std::set<std::pair<std::string, std::string>> reported;  // (chapter, target)
    auto add_finding = [&](const std::string& path, int line, const std::string& target,
                           std::string detail) {
        if (!reported.insert({path, target}).second) return;
        findings.push_back({CheckKind::Urls, Severity::Error, path, line, std::move(detail)});
    };

    std::map<std::string, std::set<std::string>> anchors_by_path;
    for (const auto& doc : docs) {
        auto& anchors = anchors_by_path[doc.source_path];
        for (const auto& h : doc.headings) anchors.insert(h.anchor);
    }

    struct ExternalProbe {
        std::string url;
        std::string path;
        int line;
    };
    std::vector<ExternalProbe> external;

    for (const auto& doc : docs) {
        // Borrowed chapters live outside the course tree (source_path is
        // origin-qualified); their relative links cannot be resolved here,
        // only their external ones.
        bool relative_checkable = !is_url(doc.source_path) &&
                                  path_stays_inside_root(doc.source_path) &&
                                  fs::exists(course_root / doc.source_path);
        for (const auto& link : doc.links) {
            const std::string& target = link.target;
            if (matches_any_glob(exclusions, target)) continue;
            if (starts_with(target, "mailto:")) continue;
            if (is_url(target)) {
                external.push_back({target, doc.source_path, link.line});
                continue;
            }
            if (target.find("://") != std::string::npos) continue;  // other schemes

            std::string path_part = target;
            std::string fragment;
            if (size_t hash = target.find('#'); hash != std::string::npos) {
                path_part = target.substr(0, hash);
                fragment = target.substr(hash + 1);
            }
            if (path_part.empty()) {
                // same-document anchor
                if (!anchors_by_path[doc.source_path].count(fragment))
                    add_finding(doc.source_path, link.line, target, "broken anchor: #" + fragment);
                continue;
            }
            if (!relative_checkable) continue;
            fs::path base = fs::path(doc.source_path).parent_path();
            fs::path resolved = (base / path_part).lexically_normal();
            std::string resolved_str = resolved.generic_string();
            if (!path_stays_inside_root(resolved_str) ||
                !fs::exists(course_root / resolved)) {
                add_finding(doc.source_path, link.line, resolved_str,
                            "broken internal link: " + target);
                continue;
            }
            if (!fragment.empty() && anchors_by_path.count(resolved_str) &&
                !anchors_by_path[resolved_str].count(fragment)) {
                add_finding(doc.source_path, link.line, resolved_str + "#" + fragment,
                            "broken anchor: " + target);
            }
        }
    }

    if (!external.empty()) {
        // Probe each unique URL once, with bounded parallelism.
        std::vector<std::string> unique_urls;
        {
            std::set<std::string> seen;
            for (const auto& e : external)
                if (seen.insert(e.url).second) unique_urls.push_back(e.url);
        }
        std::map<std::string, ProbeResult> results;
        std::mutex results_mutex;
        std::atomic<size_t> next{0};
        size_t n_workers = std::min<size_t>(static_cast<size_t>(std::max(options.parallelism, 1)),
                                            unique_urls.size());
        std::vector<std::thread> workers;
        for (size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= unique_urls.size()) break;
                    ProbeResult r;
                    try {
                        r = prober.probe(unique_urls[i]);
                    } catch (const std::exception& e) {
                        r = {0, e.what()};
                    }
                    std::lock_guard<std::mutex> lock(results_mutex);
                    results[unique_urls[i]] = r;
                }
            });
        }
        for (auto& t : workers) t.join();

        for (const auto& e : external) {
            const ProbeResult& r = results[e.url];
            if (!r.ok())
                add_finding(e.path, e.line, e.url, "dead link " + e.url + " (" + r.describe() + ")");
        }
    }
    return findings;
}

// ----------------------------------------------------------------- alt text

inline std::vector<CheckFinding> alt_text_check(const std::vector<ChapterDoc>& docs) {
    std::vector<CheckFinding> findings;
    for (const auto& doc : docs) {
        for (const auto& image : doc.images)
            if (trim(image.alt).empty())
                findings.push_back({CheckKind::AltText, Severity::Warning, doc.source_path,
                                    image.line, "image missing alt text: " + image.target});
        for (const auto& embed : doc.slide_embeds)
            if (trim(embed.alt).empty())
                findings.push_back({CheckKind::AltText, Severity::Warning, doc.source_path,
                                    embed.line,
                                    "slide embed missing alt text: " + embed.deck_id + "/" +
                                        embed.slide_id});
    }
    return findings;
}

// ------------------------------------------------------------------ quizzes

inline std::vector<CheckFinding> quiz_check(const Course& course) {
    std::vector<CheckFinding> findings;
    auto add = [&](const QuizDiagnostic& d) {
        findings.push_back({CheckKind::Quizzes, d.severity, d.path, d.line,
                            "[" + d.code + "] " + d.message});
    };
    for (const auto& qp : course.quizzes)
        for (const auto& d : qp.diagnostics) add(d);
    for (const auto& d : validate_quizzes(course.quizzes, course.referenced_quiz_ids)) add(d);
    // Chapters may reference quizzes that do not exist at all.
    std::set<std::string> known;
    for (const auto& qp : course.quizzes) known.insert(qp.quiz.id);
    for (const auto& chapter : course.chapters)
        for (const auto& ref : chapter.doc.quiz_refs)
            if (!known.count(ref.quiz_id))
                findings.push_back({CheckKind::Quizzes, Severity::Error, chapter.doc.source_path,
                                    ref.line, "unknown quiz id: " + ref.quiz_id});
    return findings;
}

// ---------------------------------------------------------------- run/report

struct RunOptions {
    UrlCheckOptions url;
    std::optional<int64_t> timestamp;  // fixes both report timestamps
};

// Runs exactly the manifest-enabled checks over a loaded course and sorts
// the combined findings, so output is independent of execution order.
inline CheckReport run_checks(const Course& course, const UrlProber& prober,
                              const RunOptions& options = {}) {
    CheckReport report;
    report.enabled = course.manifest.checks;
    report.started = options.timestamp ? *options.timestamp
                                       : static_cast<int64_t>(std::time(nullptr));

    std::vector<ChapterDoc> docs;
    for (const auto& chapter : course.chapters) docs.push_back(chapter.doc);

    if (course.manifest.checks.spelling) {
        fs::path wordlist_path = course.root / course.manifest.wordlist;
        auto text = read_file_if_exists(wordlist_path);
        if (!text)
            throw ConfigError("MissingWordlist: " + wordlist_path.string() +
                              " (manifest key: wordlist)");
        auto project_words = parse_wordlist(*text);
        for (auto& f : spell_check(docs, base_dictionary(), project_words))
            report.findings.push_back(std::move(f));
    }
    if (course.manifest.checks.urls) {
        for (auto& f :
             url_check(docs, course.root, course.manifest.url_exclusions, prober, options.url))
            report.findings.push_back(std::move(f));
        // Slide embeds that failed to resolve are dead image resources.
        for (const auto& failure : course.slide_failures) {
            std::string path;
            for (const auto& chapter : course.chapters)
                for (const auto& embed : chapter.doc.slide_embeds)
                    if (embed.deck_id == failure.deck_id && embed.slide_id == failure.slide_id &&
                        embed.line == failure.line)
                        path = chapter.doc.source_path;
            report.findings.push_back({CheckKind::Urls, Severity::Error, path, failure.line,
                                       "unresolved slide embed: " + failure.deck_id + "/" +
                                           failure.slide_id});
        }
    }
    if (course.manifest.checks.quizzes) {
        for (auto& f : quiz_check(course)) report.findings.push_back(std::move(f));
    }
    if (course.manifest.checks.alt_text) {
        for (auto& f : alt_text_check(docs)) report.findings.push_back(std::move(f));
    }

    std::sort(report.findings.begin(), report.findings.end());
    report.finished = options.timestamp ? *options.timestamp
                                        : static_cast<int64_t>(std::time(nullptr));
    return report;
}

// Markdown report: summary table, then findings grouped per check.
// Byte-deterministic for equal reports.
inline std::string render_report(const CheckReport& report) {
    std::string out = "# Check report\n\n";
    out += "| check | errors | warnings | status |\n";
    out += "| --- | --- | --- | --- |\n";
    for (CheckKind check : all_checks()) {
        out += "| " + std::string(check_name(check)) + " | ";
        if (!report.enabled.enabled(check)) {
            out += "- | - | OFF |\n";
            continue;
        }
        int errors = report.count(check, Severity::Error);
        int warnings = report.count(check, Severity::Warning);
        std::string status = errors > 0 ? "FAIL" : (warnings > 0 ? "WARN" : "PASS");
        out += std::to_string(errors) + " | " + std::to_string(warnings) + " | " + status + " |\n";
    }
    out += "\nOverall: " + std::string(report.failed() ? "FAIL" : "PASS") + " (" +
           std::to_string(report.error_count()) + " errors, " +
           std::to_string(report.warning_count()) + " warnings)\n";

    for (CheckKind check : all_checks()) {
        std::string section;
        for (const auto& f : report.findings) {
            if (f.check != check) continue;
            section += "- `" + f.path + ":" + std::to_string(f.line) + "` " +
                       std::string(severity_name(f.severity)) + ": " + f.detail + "\n";
        }
        if (!section.empty()) out += "\n## " + std::string(check_name(check)) + "\n\n" + section;
    }

    out += "\nStarted: " + std::to_string(report.started) +
           "\nFinished: " + std::to_string(report.finished) + "\n";
    return out;
}

// Same data as the markdown report, stable key order.
inline nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["status"] = std::string(report.status());
    j["started"] = report.started;
    j["finished"] = report.finished;
    j["checks"] = nlohmann::ordered_json::object();
    for (CheckKind check : all_checks()) {
        nlohmann::ordered_json c;
        c["enabled"] = report.enabled.enabled(check);
        c["errors"] = report.count(check, Severity::Error);
        c["warnings"] = report.count(check, Severity::Warning);
        j["checks"][std::string(check_name(check))] = std::move(c);
    }
    j["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : report.findings) {
        j["findings"].push_back({{"check", std::string(check_name(f.check))},
                                 {"severity", std::string(severity_name(f.severity))},
                                 {"path", f.path},
                                 {"line", f.line},
                                 {"detail", f.detail}});
    }
    return j;
}

}  // namespace ottr
