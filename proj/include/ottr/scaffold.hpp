#pragma once

#include <string>
#include <vector>

#include "ottr/core.hpp"
#include "ottr/markdown.hpp"

// `ottr new`: a runnable starter course. The scaffold parses, passes every
// check offline, and builds all three targets as-is.

namespace ottr {

class DestinationNotEmpty : public ConfigError {
public:
    using ConfigError::ConfigError;
};

inline std::vector<std::string> scaffold_course(const fs::path& dest, const std::string& title) {
    std::string slug = slugify(title);
    if (slug.empty()) slug = "course";
    if (fs::exists(dest) && !fs::is_directory(dest))
        throw DestinationNotEmpty(dest.string() + " exists and is not a directory");
    if (fs::is_directory(dest) && !fs::is_empty(dest))
        throw DestinationNotEmpty(dest.string() + " is not empty");

    std::vector<std::pair<std::string, std::string>> files;

    files.emplace_back("_ottr.yml",
                       "# Course manifest: one file drives every target and check.\n"
                       "title: " + title + "\n"
                       "targets: [site, leanpub, coursera]\n"
                       "chapters:\n"
                       "  - source: 01-getting-started.md\n"
                       "  - source: 02-first-quiz.md\n"
                       "checks: {spelling: true, urls: true, quizzes: true, alt_text: true}\n"
                       "quiz_dir: quizzes\n"
                       "wordlist: dictionary.txt\n"
                       "# Where the rendered site will be hosted; embed pages point here.\n"
                       "base_url: https://example.com/" + slug + "\n"
                       "# Shown as a feedback link on every page; replace with your tracker.\n"
                       "feedback_url: https://example.com/" + slug + "/feedback\n"
                       "credits:\n"
                       "  - {name: Your Name, roles: [Content author]}\n"
                       "  - {name: A Colleague, roles: [Technical review]}\n");

    files.emplace_back(
        "01-getting-started.md",
        "# Getting Started\n"
        "\n"
        "Welcome to " + title + ". This starter course shows how chapters, quizzes,\n"
        "and checks fit together.\n"
        "\n"
        "## Writing chapters\n"
        "\n"
        "Each chapter is one plain text file. Headings, lists, links, and code\n"
        "blocks all work:\n"
        "\n"
        "- chapters live at the course root\n"
        "- quizzes live in the quizzes folder\n"
        "- the manifest turns each target and check on or off\n"
        "\n"
        "```r\n"
        "# code listings are shown, never executed\n"
        "print(\"hello\")\n"
        "```\n"
        "\n"
        "> Tip: keep sentences short so reviews stay easy.\n"
        "\n"
        "Continue with [the first quiz](02-first-quiz.md).\n");

    files.emplace_back(
        "02-first-quiz.md",
        "# Adding a Quiz\n"
        "\n"
        "Quizzes use a small text format with one question per block. Reference\n"
        "a quiz anywhere in a chapter and every target picks it up:\n"
        "\n"
        "{quiz: quiz_01}\n"
        "\n"
        "Edit the quiz file under quizzes, rebuild, and the site, the book, and\n"
        "the quiz bank all update together. See\n"
        "[Getting Started](01-getting-started.md#writing-chapters) for the\n"
        "chapter basics.\n");

    files.emplace_back("quizzes/quiz_01.md",
                       "{quiz, id: quiz_01}\n"
                       "? Where does course content live?\n"
                       "a) In a database\n"
                       "B) In plain text files\n"
                       "c) In a word processor\n"
                       "\n"
                       "? Which file lists the chapters?\n"
                       "! _ottr.yml\n"
                       "! the manifest\n"
                       "{/quiz}\n");

    // Seed the project word list with the course title's own words so a
    // fresh scaffold spell-checks clean whatever it is called.
    std::string title_words;
    {
        std::string word;
        for (char c : title + " ") {
            if (std::isalpha(static_cast<unsigned char>(c))) {
                word += c;
            } else if (!word.empty()) {
                title_words += word + "\n";
                word.clear();
            }
        }
    }
    files.emplace_back("dictionary.txt",
                       "# Project word list: one word per line, extends the built-in dictionary.\n"
                       "ottr\n"
                       "leanpub\n"
                       "coursera\n"
                       "markua\n" +
                           title_words);

    std::vector<std::string> created;
    for (const auto& [rel, content] : files) {
        write_file(dest / rel, content);
        created.push_back(rel);
    }
    return created;
}

}  // namespace ottr
