#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ottr/checks.hpp"
#include "ottr/course.hpp"

// Rendering the validated course into the three target bundles. Bundles
// are assembled in memory and written atomically (temp dir + rename), so
// a failed build never leaves a partial target on disk. With a fixed
// timestamp the whole build is a pure function of the course tree bytes.

namespace ottr {

struct RenderPlan {
    std::vector<Target> targets;  // must be ⊆ manifest.targets
    fs::path output_root;         // default: <course_root>/_output
    std::optional<int64_t> fixed_timestamp;
    std::optional<std::string> base_url;  // overrides the manifest for embeds
    bool force = false;
};

struct TargetBundle {
    Target target = Target::Site;
    std::vector<std::pair<std::string, std::string>> files;  // (relative path, bytes)
    std::string entrypoint;

    const std::string* find(const std::string& rel) const {
        for (const auto& [path, bytes] : files)
            if (path == rel) return &bytes;
        return nullptr;
    }
};

class RenderError : public IoError {
public:
    using IoError::IoError;
};

// ------------------------------------------------------------- html bits

namespace html {

inline std::string escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// `**strong**` and `*em*` on already-escaped text.
inline std::string emphasize(const std::string& escaped) {
    std::string out;
    bool in_strong = false, in_em = false;
    size_t i = 0;
    while (i < escaped.size()) {
        if (escaped.compare(i, 2, "**") == 0) {
            out += in_strong ? "</strong>" : "<strong>";
            in_strong = !in_strong;
            i += 2;
        } else if (escaped[i] == '*') {
            out += in_em ? "</em>" : "<em>";
            in_em = !in_em;
            ++i;
        } else {
            out += escaped[i++];
        }
    }
    if (in_em) out += "</em>";
    if (in_strong) out += "</strong>";
    return out;
}

// Optional per-target rewriting of link/image destinations.
struct TargetRewriters {
    std::function<std::string(const std::string&)> link;
    std::function<std::string(const std::string&)> image;

    std::string rewrite_link(const std::string& t) const { return link ? link(t) : t; }
    std::string rewrite_image(const std::string& t) const { return image ? image(t) : t; }
};

inline std::string render_inline(const std::string& line, const TargetRewriters& rewriters = {}) {
    std::string out;
    for (const auto& tok : scan_inline(line, 1)) {
        switch (tok.kind) {
            case InlineToken::Kind::Text:
                out += emphasize(escape(tok.text));
                break;
            case InlineToken::Kind::Code:
                out += "<code>" + escape(tok.text) + "</code>";
                break;
            case InlineToken::Kind::Link:
            case InlineToken::Kind::Autolink:
                out += "<a href=\"" + escape(rewriters.rewrite_link(tok.target)) + "\">" +
                       (tok.kind == InlineToken::Kind::Link ? emphasize(escape(tok.text))
                                                            : escape(tok.target)) +
                       "</a>";
                break;
            case InlineToken::Kind::Image:
                out += "<img src=\"" + escape(rewriters.rewrite_image(tok.target)) + "\" alt=\"" +
                       escape(tok.text) + "\">";
                break;
        }
    }
    return out;
}

inline constexpr std::string_view kDefaultCss =
    "body{margin:0;font-family:sans-serif;line-height:1.5;color:#222}"
    "nav.sidebar{position:fixed;top:0;bottom:0;left:0;width:16rem;overflow:auto;"
    "background:#f5f5f5;padding:1rem;box-sizing:border-box}"
    "nav.sidebar ol{padding-left:1.2rem}"
    "main{margin-left:17rem;max-width:46rem;padding:2rem}"
    "pre{background:#f0f0f0;padding:.8rem;overflow:auto}"
    "code{background:#f0f0f0}"
    "blockquote{border-left:4px solid #ccc;margin-left:0;padding-left:1rem;color:#555}"
    "table.credits{border-collapse:collapse}table.credits td,table.credits th"
    "{border:1px solid #999;padding:.3rem .6rem}"
    ".quiz{border:1px solid #bbb;padding:1rem;margin:1rem 0;background:#fafafa}"
    "nav.pager{display:flex;justify-content:space-between;margin-top:2rem}"
    "footer{margin-top:2rem;border-top:1px solid #ddd;padding-top:.5rem;font-size:.9rem}";

}  // namespace html

// ---------------------------------------------------------- site renderer

namespace publish_detail {

// Non-graded review block for the site; answers sit behind <details>.
inline std::string render_quiz_review(const Quiz& quiz) {
    std::string out = "<div class=\"quiz\">\n";
    for (const auto& question : quiz.questions) {
        out += "<p class=\"quiz-prompt\">" + html::escape(question.prompt) + "</p>\n";
        if (question.kind == QuestionKind::MultipleChoice) {
            out += "<ol type=\"a\">\n";
            for (const auto& choice : question.choices)
                out += "<li>" + html::escape(choice.text) + "</li>\n";
            out += "</ol>\n";
            std::string answers;
            for (const auto& choice : question.choices)
                if (choice.correct) {
                    if (!answers.empty()) answers += ", ";
                    answers += std::string(1, choice.label) + ") " + choice.text;
                }
            out += "<details><summary>Answer</summary>" + html::escape(answers) +
                   "</details>\n";
        } else {
            out += "<p><em>Fill in the blank.</em></p>\n";
            std::string answers;
            for (const auto& a : question.accepted_answers) {
                if (!answers.empty()) answers += ", ";
                answers += a;
            }
            out += "<details><summary>Answer</summary>" + html::escape(answers) +
                   "</details>\n";
        }
    }
    out += "</div>\n";
    return out;
}

// Per-chapter rewriting context shared by the site and manuscript paths.
struct ChapterContext {
    fs::path source_dir_rel;   // chapter directory inside the course tree
    fs::path content_dir_abs;  // where relative image targets load from
    bool relative_resolvable = false;  // false for borrowed chapters
};

inline ChapterContext make_context(const Course& course, const LoadedChapter& chapter) {
    ChapterContext ctx;
    if (!chapter.entry.is_borrowed()) {
        ctx.relative_resolvable = true;
        ctx.source_dir_rel = fs::path(chapter.entry.source).parent_path();
        ctx.content_dir_abs = course.root / ctx.source_dir_rel;
    } else if (!is_url(chapter.entry.borrow->origin)) {
        fs::path origin(chapter.entry.borrow->origin);
        if (origin.is_relative()) origin = course.root / origin;
        ctx.content_dir_abs = origin / fs::path(chapter.entry.borrow->file).parent_path();
    }
    return ctx;
}

// When `target` names another chapter file, yields that chapter's stem.
inline std::optional<std::string> chapter_stem_for_link(const Course& course,
                                                        const ChapterContext& ctx,
                                                        const std::string& target,
                                                        std::string* fragment) {
    std::string path_part = target;
    fragment->clear();
    if (size_t hash = target.find('#'); hash != std::string::npos) {
        path_part = target.substr(0, hash);
        *fragment = target.substr(hash);
    }
    if (path_part.empty() || is_url(path_part) || path_part.find("://") != std::string::npos ||
        starts_with(path_part, "mailto:") || !ctx.relative_resolvable)
        return std::nullopt;
    std::string resolved = (ctx.source_dir_rel / path_part).lexically_normal().generic_string();
    for (const auto& chapter : course.chapters) {
        if (chapter.entry.is_borrowed()) continue;
        if (fs::path(chapter.entry.source).lexically_normal().generic_string() == resolved)
            return chapter.stem;
    }
    return std::nullopt;
}

// Relative image target -> bundled resources/ path, collecting the copy.
inline std::optional<std::string> image_resource_path(const ChapterContext& ctx,
                                                      const std::string& target,
                                                      std::map<std::string, fs::path>& copies) {
    if (target.empty() || is_url(target) || starts_with(target, kSlideScheme) ||
        target.find("://") != std::string::npos)
        return std::nullopt;
    fs::path normalized = fs::path(target).lexically_normal();
    if (!path_stays_inside_root(normalized.generic_string())) return std::nullopt;
    fs::path keyed = ctx.relative_resolvable
                         ? (ctx.source_dir_rel / normalized).lexically_normal()
                         : normalized;
    std::string bundled = "resources/" + keyed.generic_string();
    if (!ctx.content_dir_abs.empty()) copies.emplace(bundled, ctx.content_dir_abs / normalized);
    return bundled;
}

inline std::string list_item_text(const std::string& line) {
    std::string_view s = line;
    size_t indent = 0;
    while (indent < s.size() && s[indent] == ' ') ++indent;
    s = s.substr(indent);
    if (!s.empty() && (s[0] == '-' || s[0] == '*' || s[0] == '+') && s.size() > 1 && s[1] == ' ')
        return std::string(s.substr(2));
    size_t d = 0;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    if (d > 0 && d + 1 < s.size() && (s[d] == '.' || s[d] == ')') && s[d + 1] == ' ')
        return std::string(s.substr(d + 2));
    return std::string(s);
}

inline bool is_ordered_list(const std::string& first_line) {
    std::string_view s = first_line;
    size_t indent = 0;
    while (indent < s.size() && s[indent] == ' ') ++indent;
    return indent < s.size() && std::isdigit(static_cast<unsigned char>(s[indent]));
}

// Chapter body HTML from the block AST. Cross-chapter links become
// <stem>.html, relative images move under resources/ (copies collected).
inline std::string render_chapter_body(const Course& course, const ChapterContext& ctx,
                                       const ChapterDoc& doc,
                                       std::map<std::string, fs::path>& copies) {
    html::TargetRewriters rewriters;
    rewriters.link = [&](const std::string& target) {
        std::string fragment;
        if (auto stem = chapter_stem_for_link(course, ctx, target, &fragment))
            return *stem + ".html" + fragment;
        return target;
    };
    rewriters.image = [&](const std::string& target) {
        if (auto bundled = image_resource_path(ctx, target, copies)) return *bundled;
        return target;
    };

    std::string out;
    size_t heading_index = 0;
    for (const auto& block : doc.blocks) {
        switch (block.kind) {
            case BlockKind::Heading: {
                std::string anchor = heading_index < doc.headings.size()
                                         ? doc.headings[heading_index].anchor
                                         : slugify(block.text);
                ++heading_index;
                std::string tag = "h" + std::to_string(block.level);
                out += "<" + tag + " id=\"" + anchor + "\">" + html::render_inline(block.text, rewriters) +
                       "</" + tag + ">\n";
                break;
            }
            case BlockKind::Paragraph: {
                std::string joined;
                for (const auto& line : block.raw_lines) {
                    if (trim(line).empty()) continue;
                    if (!joined.empty()) joined += "\n";
                    joined += html::render_inline(line, rewriters);
                }
                if (!joined.empty()) out += "<p>" + joined + "</p>\n";
                break;
            }
            case BlockKind::FencedCode: {
                // raw_lines: opening fence, body, optional closing fence,
                // then any span-extension blank lines
                auto fence = detail::fence_open(block.raw_lines.front());
                size_t body_end = block.raw_lines.size();
                for (size_t i = 1; i < block.raw_lines.size(); ++i)
                    if (fence && detail::fence_close(block.raw_lines[i], *fence)) {
                        body_end = i;
                        break;
                    }
                std::string body;
                for (size_t i = 1; i < body_end; ++i) {
                    body += block.raw_lines[i];
                    body += '\n';
                }
                std::string cls = block.fence_language.empty()
                                      ? ""
                                      : " class=\"language-" + html::escape(block.fence_language) +
                                            "\"";
                out += "<pre><code" + cls + ">" + html::escape(body) + "</code></pre>\n";
                break;
            }
            case BlockKind::List: {
                std::vector<std::string> content_lines;
                for (const auto& line : block.raw_lines)
                    if (!trim(line).empty()) content_lines.push_back(line);
                if (content_lines.empty()) break;
                bool ordered = is_ordered_list(content_lines.front());
                out += ordered ? "<ol>\n" : "<ul>\n";
                for (const auto& line : content_lines)
                    out += "<li>" + html::render_inline(list_item_text(line), rewriters) + "</li>\n";
                out += ordered ? "</ol>\n" : "</ul>\n";
                break;
            }
            case BlockKind::Blockquote: {
                std::string joined;
                for (const auto& line : block.raw_lines) {
                    std::string_view s = line;
                    if (!s.empty() && s[0] == '>') {
                        s = s.substr(1);
                        if (!s.empty() && s[0] == ' ') s = s.substr(1);
                    }
                    if (trim(s).empty()) continue;
                    if (!joined.empty()) joined += "\n";
                    joined += html::render_inline(std::string(s), rewriters);
                }
                if (!joined.empty()) out += "<blockquote><p>" + joined + "</p></blockquote>\n";
                break;
            }
            case BlockKind::Image: {
                for (const auto& line : block.raw_lines) {
                    if (trim(line).empty()) continue;
                    out += "<p>" + html::render_inline(line, rewriters) + "</p>\n";
                }
                break;
            }
            case BlockKind::HtmlPassthrough: {
                for (const auto& line : block.raw_lines) {
                    out += line;
                    out += '\n';
                }
                break;
            }
            case BlockKind::QuizRef: {
                if (const Quiz* quiz = course.find_quiz(block.text))
                    out += render_quiz_review(*quiz);
                else
                    out += "<p class=\"quiz-missing\">Quiz " + html::escape(block.text) +
                           " is not available.</p>\n";
                break;
            }
        }
    }
    return out;
}

inline std::string credits_table(const CourseManifest& manifest) {
    if (manifest.credits.empty()) return "";
    std::string out = "<h2 id=\"credits\">Credits</h2>\n<table class=\"credits\">\n";
    out += "<tr><th>Contributor</th><th>Roles</th></tr>\n";
    for (const auto& c : manifest.credits) {
        std::string roles;
        for (size_t i = 0; i < c.roles.size(); ++i) {
            if (i) roles += ", ";
            roles += c.roles[i];
        }
        out += "<tr><td>" + html::escape(c.name) + "</td><td>" + html::escape(roles) +
               "</td></tr>\n";
    }
    out += "</table>\n";
    return out;
}

inline std::string page_shell(const std::string& page_title, const std::string& body,
                              bool user_css) {
    std::string head = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    head += "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
    head += "<title>" + html::escape(page_title) + "</title>\n";
    head += "<style>" + std::string(html::kDefaultCss) + "</style>\n";
    if (user_css) head += "<link rel=\"stylesheet\" href=\"style.css\">\n";
    head += "</head>\n<body>\n";
    return head + body + "</body>\n</html>\n";
}

}  // namespace publish_detail

// One HTML page per chapter plus index.html: sidebar in manifest order,
// prev/next pager, credits table on the final chapter, feedback link in
// the footer of every page.
inline TargetBundle render_site(const Course& course, const RenderPlan& plan) {
    (void)plan;
    TargetBundle bundle;
    bundle.target = Target::Site;
    bundle.entrypoint = "index.html";

    auto user_css = read_file_if_exists(course.root / "style.css");

    auto sidebar = [&](const std::string& active_stem) {
        std::string out = "<nav class=\"sidebar\">\n<h2><a href=\"index.html\">" +
                          html::escape(course.manifest.title) + "</a></h2>\n<ol>\n";
        for (const auto& chapter : course.chapters) {
            bool active = chapter.stem == active_stem;
            out += std::string("<li") + (active ? " class=\"active\"" : "") + "><a href=\"" +
                   chapter.stem + ".html\">" + html::escape(chapter.doc.title) + "</a></li>\n";
        }
        out += "</ol>\n</nav>\n";
        return out;
    };

    std::string footer;
    if (course.manifest.feedback_url)
        footer = "<footer><a href=\"" + html::escape(*course.manifest.feedback_url) +
                 "\">Give feedback on this course</a></footer>\n";

    // index: course title + ordered chapter list
    {
        std::string body = sidebar("");
        body += "<main>\n<h1>" + html::escape(course.manifest.title) + "</h1>\n<ol>\n";
        for (const auto& chapter : course.chapters)
            body += "<li><a href=\"" + chapter.stem + ".html\">" +
                    html::escape(chapter.doc.title) + "</a></li>\n";
        body += "</ol>\n";
        if (!course.chapters.empty())
            body += "<p><a href=\"" + course.chapters.front().stem +
                    ".html\">Start the course</a></p>\n";
        body += footer + "</main>\n";
        bundle.files.emplace_back("index.html",
                                  publish_detail::page_shell(course.manifest.title, body,
                                                             user_css.has_value()));
    }

    std::map<std::string, fs::path> copies;  // bundle resources/ path -> source
    for (size_t i = 0; i < course.chapters.size(); ++i) {
        const auto& chapter = course.chapters[i];
        auto ctx = publish_detail::make_context(course, chapter);
        std::string body = sidebar(chapter.stem);
        body += "<main>\n";
        body += publish_detail::render_chapter_body(course, ctx, chapter.doc, copies);
        if (i + 1 == course.chapters.size())
            body += publish_detail::credits_table(course.manifest);
        body += "<nav class=\"pager\">\n";
        if (i > 0)
            body += "<a href=\"" + course.chapters[i - 1].stem + ".html\">&larr; " +
                    html::escape(course.chapters[i - 1].doc.title) + "</a>\n";
        else
            body += "<span></span>\n";
        if (i + 1 < course.chapters.size())
            body += "<a href=\"" + course.chapters[i + 1].stem + ".html\">" +
                    html::escape(course.chapters[i + 1].doc.title) + " &rarr;</a>\n";
        else
            body += "<span></span>\n";
        body += "</nav>\n" + footer + "</main>\n";
        bundle.files.emplace_back(
            chapter.stem + ".html",
            publish_detail::page_shell(chapter.doc.title + " - " + course.manifest.title, body,
                                       user_css.has_value()));
    }

    for (const auto& [bundled, source] : copies) {
        if (auto bytes = read_file_if_exists(source))
            bundle.files.emplace_back(bundled, *bytes);
    }
    if (user_css) bundle.files.emplace_back("style.css", *user_css);
    return bundle;
}

// ------------------------------------------------------- leanpub renderer

namespace publish_detail {

// Rewrites one manuscript line: relative images move under resources/
// (copies collected) and cross-chapter links point at the flattened
// <stem>.md manuscript files.
inline std::string rewrite_manuscript_line(const std::string& line, const Course& course,
                                           const ChapterContext& ctx,
                                           std::map<std::string, fs::path>& copies) {
    if (line.find('[') == std::string::npos) return line;
    auto tokens = scan_inline(line, 1, 1);
    std::string out;
    bool changed = false;
    for (size_t t = 0; t < tokens.size(); ++t) {
        size_t begin = static_cast<size_t>(tokens[t].column - 1);
        size_t end =
            t + 1 < tokens.size() ? static_cast<size_t>(tokens[t + 1].column - 1) : line.size();
        if (t == 0) out += line.substr(0, begin);
        const InlineToken& tok = tokens[t];
        if (tok.kind == InlineToken::Kind::Image) {
            if (auto bundled = image_resource_path(ctx, tok.target, copies)) {
                out += "![" + tok.text + "](" + *bundled + ")";
                changed = true;
                continue;
            }
        } else if (tok.kind == InlineToken::Kind::Link) {
            std::string fragment;
            if (auto stem = chapter_stem_for_link(course, ctx, tok.target, &fragment)) {
                out += "[" + tok.text + "](" + *stem + ".md" + fragment + ")";
                changed = true;
                continue;
            }
        }
        out += line.substr(begin, end - begin);
    }
    return changed ? out : line;
}

}  // namespace publish_detail

// Markua manuscript: one text file per chapter with canonical quiz blocks
// inserted at their reference points, Book.txt listing the chapter files
// in manifest order, and referenced images copied under resources/.
inline TargetBundle render_leanpub(const Course& course, const RenderPlan& plan) {
    (void)plan;
    TargetBundle bundle;
    bundle.target = Target::Leanpub;
    bundle.entrypoint = "manuscript/Book.txt";

    std::string book_txt;
    std::map<std::string, fs::path> copies;  // bundle path -> source file
    std::vector<std::pair<std::string, std::string>> chapter_files;

    for (const auto& chapter : course.chapters) {
        book_txt += chapter.stem + ".md\n";
        auto ctx = publish_detail::make_context(course, chapter);

        std::string text;
        for (const auto& block : chapter.doc.blocks) {
            if (block.kind == BlockKind::QuizRef) {
                if (const Quiz* quiz = course.find_quiz(block.text)) {
                    text += render_leanpub_quiz(*quiz);
                    // keep the blank separation the directive line had
                    for (size_t i = 1; i < block.raw_lines.size(); ++i) text += "\n";
                    continue;
                }
            }
            bool opaque = block.kind == BlockKind::FencedCode ||
                          block.kind == BlockKind::HtmlPassthrough;
            for (const auto& line : block.raw_lines) {
                text += opaque
                            ? line
                            : publish_detail::rewrite_manuscript_line(line, course, ctx, copies);
                text += '\n';
            }
        }
        chapter_files.emplace_back("manuscript/" + chapter.stem + ".md", std::move(text));
    }

    bundle.files.emplace_back("manuscript/Book.txt", book_txt);
    for (auto& f : chapter_files) bundle.files.push_back(std::move(f));
    for (const auto& [bundled, source] : copies) {
        if (auto bytes = read_file_if_exists(source))
            bundle.files.emplace_back("manuscript/" + bundled, *bytes);
        // missing image files are already surfaced by checks; skip quietly
    }
    return bundle;
}

// ------------------------------------------------------ coursera renderer

// Minimal embed page per chapter: a single full-viewport iframe pointing
// at the hosted site page, plus the converted quiz bank.
inline TargetBundle render_coursera(const Course& course, const RenderPlan& plan) {
    std::optional<std::string> base_opt =
        plan.base_url ? plan.base_url : course.manifest.base_url;
    if (!base_opt)
        throw ConfigError(
            "coursera target needs the site's hosted URL (manifest key: base_url)");
    std::string base = *base_opt;
    while (!base.empty() && base.back() == '/') base.pop_back();

    TargetBundle bundle;
    bundle.target = Target::Coursera;
    bundle.entrypoint = "index.html";

    std::string index = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    index += "<title>" + html::escape(course.manifest.title) + " embed pages</title>\n";
    index += "</head>\n<body>\n<h1>" + html::escape(course.manifest.title) + "</h1>\n<ol>\n";

    for (const auto& chapter : course.chapters) {
        std::string src = base + "/" + chapter.stem + ".html";
        std::string page =
            "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" +
            html::escape(chapter.doc.title) +
            "</title>\n<style>html,body{margin:0;height:100%}iframe{border:0;width:100%;"
            "height:100vh}</style>\n</head>\n<body>\n<iframe src=\"" +
            html::escape(src) + "\" title=\"" + html::escape(chapter.doc.title) +
            "\"></iframe>\n</body>\n</html>\n";
        bundle.files.emplace_back(chapter.stem + ".html", page);
        index += "<li><a href=\"" + chapter.stem + ".html\">" + html::escape(chapter.doc.title) +
                 "</a></li>\n";
    }
    index += "</ol>\n</body>\n</html>\n";
    bundle.files.insert(bundle.files.begin(), {"index.html", index});

    std::vector<Quiz> quizzes;
    for (const auto& qp : course.quizzes)
        if (qp.ok()) quizzes.push_back(qp.quiz);
    bundle.files.emplace_back("quiz_bank.json", quiz_bank_text(quiz_bank(quizzes)));
    return bundle;
}

// ----------------------------------------------------------------- build

struct BuildResult {
    CheckReport report;
    std::vector<TargetBundle> bundles;
    bool rendered = false;
};

// Latest content-file modification time; the default deterministic-build
// clock when no explicit timestamp is given.
inline int64_t latest_content_mtime(const fs::path& root) {
    int64_t latest = 0;
    if (!fs::exists(root)) return latest;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        std::string first = entry.path().lexically_relative(root).begin()->string();
        if (first == "_output" || first == "reports" || first == ".ottr_cache" || first == ".git")
            continue;
        if (!entry.is_regular_file()) continue;
        // file_clock's epoch is implementation-defined; rebase onto the
        // system clock for a unix-ish value
        auto mtime = fs::last_write_time(entry);
        auto sys = std::chrono::system_clock::now() +
                   std::chrono::duration_cast<std::chrono::system_clock::duration>(
                       mtime - fs::file_time_type::clock::now());
        auto epoch =
            std::chrono::duration_cast<std::chrono::seconds>(sys.time_since_epoch()).count();
        latest = std::max<int64_t>(latest, epoch);
    }
    return latest;
}

inline void write_bundle(const TargetBundle& bundle, const fs::path& output_root) {
    std::string name(target_name(bundle.target));
    fs::path final_dir = output_root / name;
    fs::path tmp_dir = output_root / ("." + name + ".tmp");
    std::error_code ec;
    fs::remove_all(tmp_dir, ec);
    fs::create_directories(tmp_dir);
    for (const auto& [rel, bytes] : bundle.files) write_file(tmp_dir / rel, bytes);
    fs::remove_all(final_dir, ec);
    fs::rename(tmp_dir, final_dir, ec);
    if (ec) throw RenderError("cannot move bundle into place: " + final_dir.string());
}

inline TargetBundle render_target(const Course& course, Target target, const RenderPlan& plan) {
    switch (target) {
        case Target::Site: return render_site(course, plan);
        case Target::Leanpub: return render_leanpub(course, plan);
        case Target::Coursera: return render_coursera(course, plan);
    }
    throw RenderError("unknown target");
}

// Full pipeline: parse manifest -> load chapters (borrows, slide embeds)
// -> run checks -> render every planned target. One invocation refreshes
// all requested platforms. A failing report stops the build before any
// bundle is written unless plan.force is set.
inline BuildResult build(const fs::path& course_root, const RenderPlan& plan,
                         const SlideResolver& resolver, const UrlProber& prober) {
    Course course = load_course(course_root, resolver);

    std::vector<Target> targets = plan.targets.empty() ? course.manifest.targets : plan.targets;
    for (Target t : targets)
        if (!course.manifest.has_target(t))
            throw ConfigError("target '" + std::string(target_name(t)) +
                              "' is not enabled in the manifest (key: targets)");
    // Fail fast on missing coursera prerequisites even before rendering.
    if (std::find(targets.begin(), targets.end(), Target::Coursera) != targets.end() &&
        !plan.base_url && !course.manifest.base_url)
        throw ConfigError(
            "coursera target needs the site's hosted URL (manifest key: base_url)");

    RunOptions run_options;
    run_options.timestamp =
        plan.fixed_timestamp ? plan.fixed_timestamp
                             : std::optional<int64_t>(latest_content_mtime(course_root));

    BuildResult result;
    result.report = run_checks(course, prober, run_options);

    fs::path reports_dir = course_root / "reports";
    write_file_atomic(reports_dir / "check_report.md", render_report(result.report));
    write_file_atomic(reports_dir / "check_report.json", report_json(result.report).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n");

    if (result.report.failed() && !plan.force) return result;

    fs::path output_root = plan.output_root.empty() ? course_root / "_output" : plan.output_root;
    RenderPlan effective = plan;
    effective.targets = targets;
    // Render everything in memory first; only then touch the output tree.
    for (Target t : targets) result.bundles.push_back(render_target(course, t, effective));
    for (const TargetBundle& bundle : result.bundles) write_bundle(bundle, output_root);
    result.rendered = true;
    return result;
}

}  // namespace ottr
