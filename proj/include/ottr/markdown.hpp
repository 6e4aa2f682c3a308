#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ottr/core.hpp"

// Chapter markdown parser. Produces a block AST with source spans plus
// flat extraction lists (headings, links, images, slide embeds, quiz
// references, prose) that the check suite and renderers consume.
//
// Supported subset: ATX headings, fenced code, blockquotes, lists,
// paragraphs, raw-HTML passthrough, inline links/images/code spans and
// `<http...>` autolinks. Inline constructs do not span lines. Two
// directives extend plain markdown:
//   ![alt](slides://<deck_id>/<slide_id>)   slide-deck image embed
//   {quiz: <quiz_id>}                       quiz reference on its own line
// Malformed input never fails the parse; it degrades to paragraphs.

namespace ottr {

enum class BlockKind {
    Heading,
    Paragraph,
    FencedCode,
    List,
    Blockquote,
    Image,
    HtmlPassthrough,
    QuizRef,
};

struct BlockNode {
    BlockKind kind = BlockKind::Paragraph;
    int start_line = 0;  // 1-based, inclusive; spans cover every input line
    int end_line = 0;
    std::vector<std::string> raw_lines;  // exact source lines of the span
    int level = 0;                       // heading only
    std::string text;                    // heading text / image alt / quiz id
    std::string target;                  // image target
    std::string fence_language;          // fenced code only

    bool operator==(const BlockNode&) const = default;
};

struct HeadingRef {
    int level = 0;
    std::string text;
    std::string anchor;
    int line = 0;

    bool operator==(const HeadingRef&) const = default;
};

struct LinkRef {
    std::string target;
    std::string text;
    int line = 0;
    int column = 0;  // 1-based column of the '[' or '<'

    bool operator==(const LinkRef&) const = default;
};

struct ImageRef {
    std::string target;
    std::string alt;  // may be empty; alt_text check flags that later
    int line = 0;

    bool operator==(const ImageRef&) const = default;
};

struct SlideEmbed {
    std::string deck_id;
    std::string slide_id;
    std::string alt;
    int line = 0;

    bool operator==(const SlideEmbed&) const = default;
};

struct QuizRef {
    std::string quiz_id;
    int line = 0;

    bool operator==(const QuizRef&) const = default;
};

struct ProseLine {
    int line = 0;
    std::string text;  // prose with code spans and targets excised

    bool operator==(const ProseLine&) const = default;
};

struct ChapterDoc {
    std::string source_path;
    std::string title;
    std::vector<BlockNode> blocks;
    std::vector<HeadingRef> headings;
    std::vector<LinkRef> links;
    std::vector<ImageRef> images;
    std::vector<SlideEmbed> slide_embeds;
    std::vector<QuizRef> quiz_refs;
    std::vector<ProseLine> prose;
    std::vector<std::string> warnings;
    int line_count = 0;

    bool operator==(const ChapterDoc&) const = default;

    // Normalized source text reassembled from block spans.
    std::string source_text() const {
        std::string out;
        for (const auto& b : blocks) out += join_lines(b.raw_lines);
        return out;
    }
};

// -------------------------------------------------------------- slugify

// Heading text to anchor id: lowercase, alphanumerics kept, whitespace
// becomes '-', everything else dropped, dash runs collapsed.
inline std::string slugify(std::string_view heading) {
    std::string out;
    bool pending_dash = false;
    for (char ch : heading) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (c < 0x80 && std::isalnum(c)) {
            if (pending_dash && !out.empty()) out += '-';
            pending_dash = false;
            out += static_cast<char>(std::tolower(c));
        } else if (std::isspace(c)) {
            pending_dash = true;
        }
    }
    return out;
}

// Document-order collision handling: second "setup" becomes "setup-1".
class SlugDeduper {
public:
    std::string next(std::string_view heading) {
        std::string base = slugify(heading);
        if (base.empty()) base = "section";
        std::string anchor = base;
        int suffix = 0;
        while (taken_.count(anchor)) anchor = base + "-" + std::to_string(++suffix);
        taken_.insert(anchor);
        return anchor;
    }

private:
    std::set<std::string> taken_;
};

// ------------------------------------------------------------ inline scan

struct InlineToken {
    enum class Kind { Text, Code, Link, Image, Autolink };

    Kind kind = Kind::Text;
    std::string text;    // prose text / code content / link text / image alt
    std::string target;  // link or image destination
    int line = 0;
    int column = 0;  // 1-based in the original source line
};

namespace detail {

inline size_t backtick_run(std::string_view s, size_t pos) {
    size_t n = 0;
    while (pos + n < s.size() && s[pos + n] == '`') ++n;
    return n;
}

}  // namespace detail

// Tokenizes one source line. `col_base` is the 1-based source column of
// s[0] (greater than 1 for blockquote-stripped content).
inline std::vector<InlineToken> scan_inline(std::string_view s, int line_no, int col_base = 1) {
    std::vector<InlineToken> tokens;
    std::string pending;
    size_t pending_start = 0;

    auto flush_text = [&](size_t /*end*/) {
        if (!pending.empty()) {
            tokens.push_back({InlineToken::Kind::Text, pending, "", line_no,
                              static_cast<int>(pending_start) + col_base});
            pending.clear();
        }
    };

    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '\\' && i + 1 < s.size()) {
            if (pending.empty()) pending_start = i;
            pending += s[i + 1];
            i += 2;
            continue;
        }
        if (c == '`') {
            size_t open = detail::backtick_run(s, i);
            size_t j = i + open;
            while (j < s.size()) {
                if (s[j] == '`') {
                    size_t close = detail::backtick_run(s, j);
                    if (close == open) break;
                    j += close;
                } else {
                    ++j;
                }
            }
            if (j < s.size()) {
                flush_text(i);
                tokens.push_back({InlineToken::Kind::Code,
                                  std::string(s.substr(i + open, j - i - open)), "", line_no,
                                  static_cast<int>(i) + col_base});
                i = j + open;
                continue;
            }
            // no closing run: literal backticks
            if (pending.empty()) pending_start = i;
            pending += std::string(s.substr(i, open));
            i += open;
            continue;
        }
        if (c == '<') {
            size_t close = s.find('>', i + 1);
            if (close != std::string_view::npos) {
                std::string_view inner = s.substr(i + 1, close - i - 1);
                if (is_url(inner) || starts_with(inner, "mailto:")) {
                    flush_text(i);
                    tokens.push_back({InlineToken::Kind::Autolink, std::string(inner),
                                      std::string(inner), line_no, static_cast<int>(i) + col_base});
                    i = close + 1;
                    continue;
                }
            }
        }
        bool is_image = c == '!' && i + 1 < s.size() && s[i + 1] == '[';
        if (c == '[' || is_image) {
            size_t lb = is_image ? i + 1 : i;
            size_t depth = 1;
            size_t j = lb + 1;
            while (j < s.size() && depth > 0) {
                if (s[j] == '\\') {
                    j += 2;
                    continue;
                }
                if (s[j] == '[') ++depth;
                if (s[j] == ']') --depth;
                ++j;
            }
            if (depth == 0 && j < s.size() && s[j] == '(') {
                size_t close = s.find(')', j + 1);
                if (close != std::string_view::npos) {
                    std::string label(s.substr(lb + 1, j - lb - 2));
                    std::string target(trim(s.substr(j + 1, close - j - 1)));
                    // strip an optional markdown title: (url "title")
                    if (size_t sp = target.find(' '); sp != std::string::npos)
                        target = target.substr(0, sp);
                    flush_text(i);
                    tokens.push_back({is_image ? InlineToken::Kind::Image : InlineToken::Kind::Link,
                                      label, target, line_no, static_cast<int>(i) + col_base});
                    i = close + 1;
                    continue;
                }
            }
        }
        if (pending.empty()) pending_start = i;
        pending += c;
        ++i;
    }
    flush_text(s.size());
    return tokens;
}

// ----------------------------------------------------------------- parse

inline constexpr std::string_view kSlideScheme = "slides://";

namespace detail {

struct FenceInfo {
    char marker;
    size_t length;
    std::string language;
};

inline std::optional<FenceInfo> fence_open(const std::string& line) {
    std::string t = trim(line);
    if (t.size() < 3) return std::nullopt;
    char marker = t[0];
    if (marker != '`' && marker != '~') return std::nullopt;
    size_t n = 0;
    while (n < t.size() && t[n] == marker) ++n;
    if (n < 3) return std::nullopt;
    std::string rest = trim(t.substr(n));
    if (marker == '`' && rest.find('`') != std::string::npos) return std::nullopt;
    std::string language = rest.substr(0, rest.find(' '));
    return FenceInfo{marker, n, language};
}

inline bool fence_close(const std::string& line, const FenceInfo& open) {
    std::string t = trim(line);
    if (t.size() < open.length) return false;
    size_t n = 0;
    while (n < t.size() && t[n] == open.marker) ++n;
    return n >= open.length && trim(t.substr(n)).empty();
}

inline bool is_blank(const std::string& line) { return trim(line).empty(); }

inline std::optional<int> heading_level(const std::string& line) {
    size_t n = 0;
    while (n < line.size() && line[n] == '#') ++n;
    if (n == 0 || n > 6) return std::nullopt;
    if (n < line.size() && line[n] != ' ' && line[n] != '\t') return std::nullopt;
    return static_cast<int>(n);
}

inline std::string heading_text(const std::string& line, int level) {
    std::string t = trim(line.substr(static_cast<size_t>(level)));
    // optional closing hash run: "## title ##"
    size_t e = t.size();
    while (e > 0 && t[e - 1] == '#') --e;
    if (e < t.size() && (e == 0 || t[e - 1] == ' ')) t = trim(t.substr(0, e));
    return t;
}

inline bool is_list_item(const std::string& line) {
    std::string_view s = line;
    size_t indent = 0;
    while (indent < s.size() && s[indent] == ' ') ++indent;
    if (indent > 3) return false;
    s = s.substr(indent);
    if (s.size() >= 2 && (s[0] == '-' || s[0] == '*' || s[0] == '+') && s[1] == ' ') return true;
    size_t d = 0;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    return d > 0 && d + 1 < s.size() && (s[d] == '.' || s[d] == ')') && s[d + 1] == ' ';
}

inline std::optional<std::string> quiz_ref_id(const std::string& line) {
    std::string t = trim(line);
    if (!starts_with(t, "{quiz:") || t.back() != '}') return std::nullopt;
    std::string id = trim(t.substr(6, t.size() - 7));
    if (id.empty() || id.find_first_not_of(
                          "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
                          std::string::npos)
        return std::nullopt;
    return id;
}

// A line that begins a standalone image block: a single image and nothing
// else on the line.
inline bool is_image_line(const std::string& line) {
    std::string t = trim(line);
    if (!starts_with(t, "![")) return false;
    auto tokens = scan_inline(t, 1);
    return tokens.size() == 1 && tokens[0].kind == InlineToken::Kind::Image;
}

inline bool starts_new_block(const std::string& line) {
    return is_blank(line) || heading_level(line).has_value() || fence_open(line).has_value() ||
           line.starts_with('>') || is_list_item(line) || quiz_ref_id(line).has_value() ||
           line.starts_with('<') || is_image_line(line);
}

}  // namespace detail

inline ChapterDoc parse_chapter(std::string_view raw, const std::string& source_path) {
    ChapterDoc doc;
    doc.source_path = source_path;

    const std::string normalized = normalize_newlines(raw);
    const std::vector<std::string> lines = split_lines(normalized);
    doc.line_count = static_cast<int>(lines.size());

    // Pass 1: block boundaries (0-based [begin, end) line ranges).
    struct RawBlock {
        BlockKind kind;
        size_t begin;
        size_t end;
        detail::FenceInfo fence{'`', 3, ""};
        int level = 0;
    };
    std::vector<RawBlock> raw_blocks;

    size_t i = 0;
    const size_t n = lines.size();
    while (i < n) {
        const std::string& line = lines[i];
        if (detail::is_blank(line)) {
            ++i;  // attached to a neighbour block during span extension
            continue;
        }
        if (auto fence = detail::fence_open(line)) {
            size_t j = i + 1;
            while (j < n && !detail::fence_close(lines[j], *fence)) ++j;
            bool terminated = j < n;
            if (!terminated)
                doc.warnings.push_back("unterminated code fence opened at line " +
                                       std::to_string(i + 1) + "; closed at end of file");
            size_t end = terminated ? j + 1 : n;
            raw_blocks.push_back({BlockKind::FencedCode, i, end, *fence});
            i = end;
            continue;
        }
        if (auto level = detail::heading_level(line)) {
            raw_blocks.push_back({BlockKind::Heading, i, i + 1, {}, *level});
            ++i;
            continue;
        }
        if (detail::quiz_ref_id(line)) {
            raw_blocks.push_back({BlockKind::QuizRef, i, i + 1});
            ++i;
            continue;
        }
        if (line.starts_with('>')) {
            size_t j = i;
            while (j < n && lines[j].starts_with('>')) ++j;
            raw_blocks.push_back({BlockKind::Blockquote, i, j});
            i = j;
            continue;
        }
        if (detail::is_list_item(line)) {
            size_t j = i + 1;
            while (j < n && !detail::is_blank(lines[j]) && !detail::fence_open(lines[j]) &&
                   (detail::is_list_item(lines[j]) || lines[j].starts_with("  ")))
                ++j;
            raw_blocks.push_back({BlockKind::List, i, j});
            i = j;
            continue;
        }
        if (line.starts_with('<')) {
            size_t j = i + 1;
            while (j < n && !detail::is_blank(lines[j])) ++j;
            raw_blocks.push_back({BlockKind::HtmlPassthrough, i, j});
            i = j;
            continue;
        }
        if (detail::is_image_line(line)) {
            raw_blocks.push_back({BlockKind::Image, i, i + 1});
            ++i;
            continue;
        }
        // paragraph: until blank line or the start of any other block
        size_t j = i + 1;
        while (j < n && !detail::starts_new_block(lines[j])) ++j;
        raw_blocks.push_back({BlockKind::Paragraph, i, j});
        i = j;
    }

    // Whole file blank (or empty with lines): one empty paragraph so the
    // span-coverage invariant holds.
    if (raw_blocks.empty() && n > 0) raw_blocks.push_back({BlockKind::Paragraph, 0, n});

    // Pass 2: extend spans over separating blank lines; materialize blocks.
    SlugDeduper slugs;
    for (size_t bi = 0; bi < raw_blocks.size(); ++bi) {
        RawBlock& rb = raw_blocks[bi];
        size_t span_begin = bi == 0 ? 0 : rb.begin;
        size_t span_end = bi + 1 < raw_blocks.size() ? raw_blocks[bi + 1].begin : n;

        BlockNode block;
        block.kind = rb.kind;
        block.start_line = static_cast<int>(span_begin) + 1;
        block.end_line = static_cast<int>(span_end);
        block.raw_lines.assign(lines.begin() + static_cast<long>(span_begin),
                               lines.begin() + static_cast<long>(span_end));
        block.level = rb.level;

        auto collect_tokens = [&](const std::string& text, int line_no, int col_base) {
            std::string prose;
            for (const auto& tok : scan_inline(text, line_no, col_base)) {
                switch (tok.kind) {
                    case InlineToken::Kind::Text:
                        if (!prose.empty()) prose += ' ';
                        prose += tok.text;
                        break;
                    case InlineToken::Kind::Code:
                        break;
                    case InlineToken::Kind::Autolink:
                        doc.links.push_back({tok.target, tok.target, tok.line, tok.column});
                        break;
                    case InlineToken::Kind::Link:
                        doc.links.push_back({tok.target, tok.text, tok.line, tok.column});
                        if (!prose.empty()) prose += ' ';
                        prose += tok.text;
                        break;
                    case InlineToken::Kind::Image: {
                        if (starts_with(tok.target, kSlideScheme)) {
                            std::string rest = tok.target.substr(kSlideScheme.size());
                            size_t slash = rest.find('/');
                            std::string deck = slash == std::string::npos ? rest : rest.substr(0, slash);
                            std::string slide = slash == std::string::npos ? "" : rest.substr(slash + 1);
                            doc.slide_embeds.push_back({deck, slide, tok.text, tok.line});
                        } else {
                            doc.images.push_back({tok.target, tok.text, tok.line});
                        }
                        if (!prose.empty()) prose += ' ';
                        prose += tok.text;
                        break;
                    }
                }
            }
            if (!trim(prose).empty()) doc.prose.push_back({line_no, prose});
        };

        switch (rb.kind) {
            case BlockKind::Heading: {
                const std::string& line = lines[rb.begin];
                block.text = detail::heading_text(line, rb.level);
                std::string anchor = slugs.next(block.text);
                doc.headings.push_back(
                    {rb.level, block.text, anchor, static_cast<int>(rb.begin) + 1});
                // scan the raw remainder so token columns stay exact
                collect_tokens(line.substr(static_cast<size_t>(rb.level)),
                               static_cast<int>(rb.begin) + 1, rb.level + 1);
                break;
            }
            case BlockKind::Paragraph:
            case BlockKind::List:
                for (size_t li = rb.begin; li < rb.end; ++li)
                    collect_tokens(lines[li], static_cast<int>(li) + 1, 1);
                break;
            case BlockKind::Blockquote:
                for (size_t li = rb.begin; li < rb.end; ++li) {
                    std::string_view s = lines[li];
                    size_t strip = 0;
                    if (!s.empty() && s[0] == '>') {
                        strip = 1;
                        if (strip < s.size() && s[strip] == ' ') ++strip;
                    }
                    collect_tokens(std::string(s.substr(strip)), static_cast<int>(li) + 1,
                                   static_cast<int>(strip) + 1);
                }
                break;
            case BlockKind::Image: {
                collect_tokens(lines[rb.begin], static_cast<int>(rb.begin) + 1, 1);
                if (!doc.slide_embeds.empty() &&
                    doc.slide_embeds.back().line == static_cast<int>(rb.begin) + 1) {
                    block.text = doc.slide_embeds.back().alt;
                    block.target = kSlideScheme;
                } else if (!doc.images.empty() &&
                           doc.images.back().line == static_cast<int>(rb.begin) + 1) {
                    block.text = doc.images.back().alt;
                    block.target = doc.images.back().target;
                }
                break;
            }
            case BlockKind::QuizRef: {
                auto id = detail::quiz_ref_id(lines[rb.begin]);
                block.text = *id;
                doc.quiz_refs.push_back({*id, static_cast<int>(rb.begin) + 1});
                break;
            }
            case BlockKind::FencedCode:
                block.fence_language = rb.fence.language;
                break;
            case BlockKind::HtmlPassthrough:
                break;
        }
        doc.blocks.push_back(std::move(block));
    }

    for (const auto& h : doc.headings)
        if (h.level == 1) {
            doc.title = h.text;
            break;
        }
    if (doc.title.empty()) doc.title = fs::path(source_path).stem().string();

    return doc;
}

}  // namespace ottr
