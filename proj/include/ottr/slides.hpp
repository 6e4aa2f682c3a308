#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ottr/markdown.hpp"

// Slide-deck image resolution. Chapters embed deck images as
// `![alt](slides://<deck_id>/<slide_id>)`; a SlideResolver maps the pair
// to a concrete image location so every rendered target sees an ordinary
// image whose bytes track the deck. Resolvers must be safe to call from
// concurrent chapter resolutions.

namespace ottr {

class SlideResolver {
public:
    virtual ~SlideResolver() = default;

    virtual std::optional<std::string> resolve(const std::string& deck_id,
                                               const std::string& slide_id) const = 0;
};

// Maps embeds onto a local fixture tree: <root>/<deck>/<slide>.png.
class OfflineSlideResolver final : public SlideResolver {
public:
    explicit OfflineSlideResolver(std::string root) : root_(std::move(root)) {
        while (!root_.empty() && root_.back() == '/') root_.pop_back();
    }

    std::optional<std::string> resolve(const std::string& deck_id,
                                       const std::string& slide_id) const override {
        return root_ + "/" + deck_id + "/" + slide_id + ".png";
    }

private:
    std::string root_;
};

// The hosted slide service's PNG export endpoint.
class GoogleSlideResolver final : public SlideResolver {
public:
    std::optional<std::string> resolve(const std::string& deck_id,
                                       const std::string& slide_id) const override {
        return "https://docs.google.com/presentation/d/" + deck_id + "/export/png?id=" + deck_id +
               "&pageid=" + slide_id;
    }
};

// Resolver that fails every lookup; test hook for failure paths.
class FailingSlideResolver final : public SlideResolver {
public:
    std::optional<std::string> resolve(const std::string&, const std::string&) const override {
        return std::nullopt;
    }
};

struct SlideResolveFailure {
    std::string deck_id;
    std::string slide_id;
    int line = 0;
};

struct SlideResolveResult {
    ChapterDoc doc;
    std::vector<SlideResolveFailure> failures;
};

namespace detail {

// Rebuilds one line with slide-embed images swapped for resolved targets.
// Token columns slice the original text, so escapes, code spans and
// spacing survive untouched.
inline std::string rewrite_slide_line(const std::string& line, const SlideResolver& resolver,
                                      int line_no, std::vector<SlideResolveFailure>& failures) {
    if (line.find(kSlideScheme) == std::string::npos) return line;
    auto tokens = scan_inline(line, line_no, 1);
    std::string out;
    for (size_t t = 0; t < tokens.size(); ++t) {
        size_t begin = static_cast<size_t>(tokens[t].column - 1);
        size_t end = t + 1 < tokens.size() ? static_cast<size_t>(tokens[t + 1].column - 1)
                                           : line.size();
        if (t == 0) out += line.substr(0, begin);
        const InlineToken& tok = tokens[t];
        if (tok.kind == InlineToken::Kind::Image && starts_with(tok.target, kSlideScheme)) {
            std::string rest = tok.target.substr(kSlideScheme.size());
            size_t slash = rest.find('/');
            std::string deck = slash == std::string::npos ? rest : rest.substr(0, slash);
            std::string slide = slash == std::string::npos ? "" : rest.substr(slash + 1);
            if (auto resolved = resolver.resolve(deck, slide)) {
                out += "![" + tok.text + "](" + *resolved + ")";
                continue;
            }
            failures.push_back({deck, slide, line_no});
        }
        out += line.substr(begin, end - begin);
    }
    return tokens.empty() ? line : out;
}

}  // namespace detail

// Rewrites every slide embed into an ordinary image reference whose target
// comes from the resolver; alt text carries over verbatim. Documents with
// no embeds come back unchanged. Applying twice equals applying once.
inline SlideResolveResult resolve_slide_embeds(const ChapterDoc& doc,
                                               const SlideResolver& resolver) {
    if (doc.slide_embeds.empty()) return {doc, {}};

    std::vector<SlideResolveFailure> failures;
    std::string rewritten;
    for (const auto& block : doc.blocks) {
        bool opaque = block.kind == BlockKind::FencedCode || block.kind == BlockKind::HtmlPassthrough;
        int line_no = block.start_line;
        for (const auto& line : block.raw_lines) {
            rewritten += opaque ? line
                                : detail::rewrite_slide_line(line, resolver, line_no, failures);
            rewritten += '\n';
            ++line_no;
        }
    }
    SlideResolveResult result{parse_chapter(rewritten, doc.source_path), std::move(failures)};
    return result;
}

}  // namespace ottr
