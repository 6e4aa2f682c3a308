#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ottr/base_wordlist.hpp"
#include "ottr/core.hpp"

// Word list files: UTF-8, one token per line, `#` starts a comment.
// Lookups are lowercase.

namespace ottr {

inline std::set<std::string> parse_wordlist(std::string_view text) {
    std::set<std::string> words;
    for (const auto& raw_line : split_lines(text)) {
        std::string line = raw_line;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::string word = trim(line);
        if (!word.empty()) words.insert(to_lower(word));
    }
    return words;
}

inline const std::set<std::string>& base_dictionary() {
    static const std::set<std::string> dict = parse_wordlist(kBaseWordlist);
    return dict;
}

// Prose tokens: maximal runs of letters, keeping apostrophes and hyphens
// that sit between letters ("don't", "well-known"). Bytes outside ASCII
// stay inside their token so accented words survive as one unit.
inline std::vector<std::string> spell_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    size_t i = 0;
    auto is_letter = [](char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return u >= 0x80 || std::isalpha(u);
    };
    while (i < text.size()) {
        if (!is_letter(text[i])) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size()) {
            if (is_letter(text[i])) {
                ++i;
            } else if ((text[i] == '\'' || text[i] == '-') && i + 1 < text.size() &&
                       is_letter(text[i + 1]) && i > start) {
                ++i;
            } else {
                break;
            }
        }
        tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

// A token passes if the whole token is known, every hyphen-separated part
// is known, or the token minus a possessive "'s" is known. Tokens with
// non-ASCII letters are outside the dictionary's alphabet and pass.
inline bool word_known(const std::string& token, const std::set<std::string>& dictionary,
                       const std::set<std::string>& project_words) {
    for (char c : token)
        if (static_cast<unsigned char>(c) >= 0x80) return true;
    std::string lower = to_lower(token);
    auto contains = [&](const std::string& w) {
        return dictionary.count(w) > 0 || project_words.count(w) > 0;
    };
    if (contains(lower)) return true;
    if (ends_with(lower, "'s") && contains(lower.substr(0, lower.size() - 2))) return true;
    if (lower.find('-') != std::string::npos) {
        size_t pos = 0;
        while (pos <= lower.size()) {
            size_t dash = lower.find('-', pos);
            std::string part = lower.substr(pos, dash == std::string::npos ? dash : dash - pos);
            if (part.empty() || !contains(part)) return false;
            if (dash == std::string::npos) return true;
            pos = dash + 1;
        }
    }
    return false;
}

}  // namespace ottr
