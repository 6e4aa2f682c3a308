#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ottr/core.hpp"

// Line-oriented diffing: Myers shortest edit script rendered as unified
// diffs, plus exact (no-fuzz) application of parsed unified diffs.
// Reference: E. Myers, "An O(ND) Difference Algorithm and Its Variations".

namespace ottr::diff {

class ApplyConflict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A line plus whether it was newline-terminated. Only the final line of a
// file may carry nl == false; the distinction makes "a" vs "a\n" diff.
struct Line {
    std::string text;
    bool nl = true;

    bool operator==(const Line&) const = default;
};

inline std::vector<Line> split_for_diff(std::string_view content) {
    std::vector<Line> lines;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back({std::string(content.substr(pos)), false});
            break;
        }
        lines.push_back({std::string(content.substr(pos, nl - pos)), true});
        pos = nl + 1;
    }
    return lines;
}

inline std::string join_diff_lines(const std::vector<Line>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l.text;
        if (l.nl) out += '\n';
    }
    return out;
}

enum class Op { Keep, Del, Ins };

struct Edit {
    Op op;
    size_t index;  // into old (Keep/Del) or new (Ins)
};

namespace detail {

// Myers greedy algorithm with full trace kept for backtracking.
inline std::vector<Edit> edit_script(const std::vector<Line>& a, const std::vector<Line>& b) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    const int max_d = n + m;
    if (max_d == 0) return {};

    std::vector<std::vector<int>> trace;
    std::vector<int> v(2 * max_d + 1, 0);
    const int off = max_d;
    int final_d = -1;

    for (int d = 0; d <= max_d && final_d < 0; ++d) {
        for (int k = -d; k <= d; k += 2) {
            int x;
            if (k == -d || (k != d && v[off + k - 1] < v[off + k + 1]))
                x = v[off + k + 1];
            else
                x = v[off + k - 1] + 1;
            int y = x - k;
            while (x < n && y < m && a[x] == b[y]) {
                ++x;
                ++y;
            }
            v[off + k] = x;
            if (x >= n && y >= m) final_d = d;
        }
        trace.push_back(v);
    }

    // Backtrack from (n, m) through the stored rounds.
    std::vector<Edit> rev;
    int x = n, y = m;
    for (int d = final_d; d > 0; --d) {
        const auto& pv = trace[d - 1];
        int k = x - y;
        int prev_k;
        if (k == -d || (k != d && pv[off + k - 1] < pv[off + k + 1]))
            prev_k = k + 1;
        else
            prev_k = k - 1;
        int px = pv[off + prev_k];
        int py = px - prev_k;
        while (x > px && y > py) {
            rev.push_back({Op::Keep, static_cast<size_t>(--x)});
            --y;
        }
        if (x == px) {
            rev.push_back({Op::Ins, static_cast<size_t>(--y)});
        } else {
            rev.push_back({Op::Del, static_cast<size_t>(--x)});
        }
    }
    while (x > 0 && y > 0) {
        rev.push_back({Op::Keep, static_cast<size_t>(--x)});
        --y;
    }
    return {rev.rbegin(), rev.rend()};
}

}  // namespace detail

struct Hunk {
    size_t old_start = 0;  // 1-based; 0 when the old side is empty
    size_t old_count = 0;
    size_t new_start = 0;
    size_t new_count = 0;
    // Body lines including the leading ' ', '-', '+' marker. A
    // "\ No newline at end of file" marker line may follow any body line.
    std::vector<std::string> lines;
};

struct FileDiff {
    std::string old_name;
    std::string new_name;
    std::vector<Hunk> hunks;
};

inline std::string format_hunk_header(const Hunk& h) {
    auto side = [](size_t start, size_t count) {
        std::string s = std::to_string(count == 0 ? (start) : start);
        if (count != 1) s += "," + std::to_string(count);
        return s;
    };
    return "@@ -" + side(h.old_start, h.old_count) + " +" + side(h.new_start, h.new_count) + " @@";
}

inline std::string render_unified(const FileDiff& fd) {
    std::string out;
    out += "--- " + fd.old_name + "\n";
    out += "+++ " + fd.new_name + "\n";
    for (const auto& h : fd.hunks) {
        out += format_hunk_header(h);
        out += '\n';
        for (const auto& l : h.lines) {
            out += l;
            out += '\n';
        }
    }
    return out;
}

// Computes the unified diff between two file contents. Names are emitted
// verbatim ("a/...", "b/...", or "/dev/null" chosen by the caller).
inline FileDiff compute_file_diff(std::string_view old_content, std::string_view new_content,
                                  const std::string& old_name, const std::string& new_name,
                                  size_t context = 3) {
    const auto a = split_for_diff(old_content);
    const auto b = split_for_diff(new_content);
    const auto script = detail::edit_script(a, b);

    FileDiff fd;
    fd.old_name = old_name;
    fd.new_name = new_name;

    auto body_line = [&](char marker, const Line& l, std::vector<std::string>& out) {
        out.push_back(std::string(1, marker) + l.text);
        if (!l.nl) out.push_back("\\ No newline at end of file");
    };

    size_t i = 0;
    while (i < script.size()) {
        if (script[i].op == Op::Keep) {
            ++i;
            continue;
        }
        // Start a hunk `context` keeps back from the first change.
        size_t begin = i;
        size_t leading = 0;
        while (begin > 0 && script[begin - 1].op == Op::Keep && leading < context) {
            --begin;
            ++leading;
        }
        // Extend over changes separated by at most 2*context keeps.
        size_t end = i;
        size_t keeps = 0;
        for (size_t j = i; j < script.size(); ++j) {
            if (script[j].op == Op::Keep) {
                ++keeps;
                if (keeps > 2 * context) break;
            } else {
                keeps = 0;
                end = j + 1;
            }
        }
        size_t trail_end = end;
        size_t trailing = 0;
        while (trail_end < script.size() && script[trail_end].op == Op::Keep && trailing < context) {
            ++trail_end;
            ++trailing;
        }

        Hunk h;
        bool first_set = false;
        for (size_t j = begin; j < trail_end; ++j) {
            const Edit& e = script[j];
            if (!first_set) {
                // Establish 1-based starts from the first edit in the hunk.
                size_t old_pos = 0, new_pos = 0;
                for (size_t k = 0; k < j; ++k) {
                    if (script[k].op != Op::Ins) ++old_pos;
                    if (script[k].op != Op::Del) ++new_pos;
                }
                h.old_start = old_pos + 1;
                h.new_start = new_pos + 1;
                first_set = true;
            }
            switch (e.op) {
                case Op::Keep:
                    body_line(' ', a[e.index], h.lines);
                    ++h.old_count;
                    ++h.new_count;
                    break;
                case Op::Del:
                    body_line('-', a[e.index], h.lines);
                    ++h.old_count;
                    break;
                case Op::Ins:
                    body_line('+', b[e.index], h.lines);
                    ++h.new_count;
                    break;
            }
        }
        if (h.old_count == 0) h.old_start = h.old_start == 0 ? 0 : h.old_start - 1;
        if (h.new_count == 0) h.new_start = h.new_start == 0 ? 0 : h.new_start - 1;
        fd.hunks.push_back(std::move(h));
        i = trail_end;
    }
    return fd;
}

inline std::string unified_diff(std::string_view old_content, std::string_view new_content,
                                const std::string& old_name, const std::string& new_name,
                                size_t context = 3) {
    auto fd = compute_file_diff(old_content, new_content, old_name, new_name, context);
    if (fd.hunks.empty()) return "";
    return render_unified(fd);
}

namespace detail {

inline bool parse_range(std::string_view s, size_t& start, size_t& count) {
    size_t comma = s.find(',');
    std::string_view first = s.substr(0, comma);
    auto res = std::from_chars(first.data(), first.data() + first.size(), start);
    if (res.ec != std::errc()) return false;
    if (comma == std::string_view::npos) {
        count = 1;
        return true;
    }
    std::string_view second = s.substr(comma + 1);
    res = std::from_chars(second.data(), second.data() + second.size(), count);
    return res.ec == std::errc();
}

}  // namespace detail

inline FileDiff parse_unified(std::string_view text) {
    FileDiff fd;
    auto lines = split_lines(text);
    size_t i = 0;
    if (i < lines.size() && starts_with(lines[i], "--- "))
        fd.old_name = lines[i++].substr(4);
    else
        throw ParseError("expected --- header");
    if (i < lines.size() && starts_with(lines[i], "+++ "))
        fd.new_name = lines[i++].substr(4);
    else
        throw ParseError("expected +++ header");

    while (i < lines.size()) {
        const std::string& l = lines[i];
        if (!starts_with(l, "@@ -")) throw ParseError("expected hunk header, got: " + l);
        size_t plus = l.find(" +", 4);
        size_t at_end = l.find(" @@", plus == std::string::npos ? 4 : plus);
        if (plus == std::string::npos || at_end == std::string::npos)
            throw ParseError("malformed hunk header: " + l);
        Hunk h;
        if (!detail::parse_range(l.substr(4, plus - 4), h.old_start, h.old_count) ||
            !detail::parse_range(l.substr(plus + 2, at_end - plus - 2), h.new_start, h.new_count))
            throw ParseError("malformed hunk ranges: " + l);
        ++i;
        size_t seen_old = 0, seen_new = 0;
        while (i < lines.size() && (seen_old < h.old_count || seen_new < h.new_count)) {
            const std::string& body = lines[i];
            if (body.empty()) throw ParseError("unexpected empty line inside hunk");
            char m = body[0];
            if (m == ' ') {
                ++seen_old;
                ++seen_new;
            } else if (m == '-') {
                ++seen_old;
            } else if (m == '+') {
                ++seen_new;
            } else if (m == '\\') {
                // newline marker, counts nothing
            } else {
                throw ParseError("unexpected line inside hunk: " + body);
            }
            h.lines.push_back(body);
            ++i;
        }
        if (i < lines.size() && starts_with(lines[i], "\\")) {
            h.lines.push_back(lines[i]);
            ++i;
        }
        fd.hunks.push_back(std::move(h));
    }
    return fd;
}

// Applies hunks to `base` content at their stated positions. Context and
// deletion lines must match exactly; any mismatch throws ApplyConflict.
inline std::string apply_unified(const FileDiff& fd, std::string_view base) {
    auto old_lines = split_for_diff(base);
    std::vector<Line> out;
    size_t cursor = 0;  // 0-based index into old_lines

    for (const auto& h : fd.hunks) {
        size_t target = h.old_count == 0 ? h.old_start : h.old_start - 1;
        if (target < cursor) throw ApplyConflict("overlapping hunks");
        if (target > old_lines.size()) throw ApplyConflict("hunk start beyond end of file");
        while (cursor < target) out.push_back(old_lines[cursor++]);

        for (size_t j = 0; j < h.lines.size(); ++j) {
            const std::string& body = h.lines[j];
            char m = body[0];
            std::string text = body.substr(1);
            bool nl = true;
            if (j + 1 < h.lines.size() && h.lines[j + 1][0] == '\\') nl = false;
            switch (m) {
                case ' ':
                case '-': {
                    if (cursor >= old_lines.size())
                        throw ApplyConflict("hunk extends past end of file");
                    const Line& have = old_lines[cursor];
                    if (have.text != text || have.nl != nl)
                        throw ApplyConflict("context mismatch at line " + std::to_string(cursor + 1) +
                                            ": expected '" + text + "', found '" + have.text + "'");
                    if (m == ' ') out.push_back(have);
                    ++cursor;
                    break;
                }
                case '+':
                    out.push_back({text, nl});
                    break;
                case '\\':
                    break;
                default:
                    throw ApplyConflict("bad hunk body line: " + body);
            }
        }
    }
    while (cursor < old_lines.size()) out.push_back(old_lines[cursor++]);
    return join_diff_lines(out);
}

inline std::string apply_unified(std::string_view diff_text, std::string_view base) {
    return apply_unified(parse_unified(diff_text), base);
}

}  // namespace ottr::diff
