#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ottr/core.hpp"

// Quiz DSL: the Leanpub-style source grammar and its conversions. A quiz
// file looks like
//
//   {quiz, id: quiz_01, attempts: 3}
//   ? What is 2 + 2?
//   a) 3
//   B) 4
//
//   ? Capital of France?
//   ! Paris
//   ! paris
//   {/quiz}
//
// Uppercase choice letters mark correct answers; `!` lines are accepted
// fill-in-the-blank alternates; a blank line separates questions; prompts
// may span lines until the first choice, answer, or blank line.

namespace ottr {

enum class QuestionKind { MultipleChoice, FillInBlank };

struct Choice {
    char label = 'a';  // stored lowercase; rendering uppercases correct ones
    std::string text;
    bool correct = false;

    bool operator==(const Choice&) const = default;
};

struct Question {
    QuestionKind kind = QuestionKind::MultipleChoice;
    std::string prompt;
    std::vector<Choice> choices;                  // multiple choice only
    std::vector<std::string> accepted_answers;    // fill-in-blank only
    bool shuffle = true;                          // meaningful for choices
    int line = 0;

    std::vector<char> correct_labels() const {
        std::vector<char> out;
        for (const auto& c : choices)
            if (c.correct) out.push_back(c.label);
        return out;
    }

    bool operator==(const Question& o) const {
        return kind == o.kind && prompt == o.prompt && choices == o.choices &&
               accepted_answers == o.accepted_answers && shuffle == o.shuffle;
    }
};

struct Quiz {
    std::string id;
    std::optional<int> attempts;
    std::vector<Question> questions;
    std::string source_path;

    bool operator==(const Quiz& o) const {
        return id == o.id && attempts == o.attempts && questions == o.questions;
    }
};

struct QuizDiagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::string path;
    int line = 0;

    std::string format() const {
        return path + ":" + std::to_string(line) + ": " + std::string(severity_name(severity)) +
               " [" + code + "] " + message;
    }
};

struct QuizParse {
    Quiz quiz;
    std::vector<QuizDiagnostic> diagnostics;

    bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == Severity::Error) return false;
        return true;
    }
};

namespace quiz_detail {

inline bool is_ident(std::string_view s) {
    return !s.empty() &&
           s.find_first_not_of(
               "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") ==
               std::string_view::npos;
}

struct Header {
    std::string id;
    std::optional<int> attempts;
};

// `{quiz, id: <ident>[, attempts: <n>]}`
inline std::optional<Header> parse_header(const std::string& line) {
    std::string t = trim(line);
    if (!starts_with(t, "{") || !ends_with(t, "}")) return std::nullopt;
    t = t.substr(1, t.size() - 2);
    auto parts = split_csv(t);
    if (parts.empty() || parts[0] != "quiz") return std::nullopt;
    Header h;
    for (size_t i = 1; i < parts.size(); ++i) {
        size_t colon = parts[i].find(':');
        if (colon == std::string::npos) return std::nullopt;
        std::string key = trim(parts[i].substr(0, colon));
        std::string value = trim(parts[i].substr(colon + 1));
        if (key == "id") {
            if (!is_ident(value)) return std::nullopt;
            h.id = value;
        } else if (key == "attempts") {
            try {
                int n = std::stoi(value);
                if (n <= 0 || std::to_string(n) != value) return std::nullopt;
                h.attempts = n;
            } catch (...) {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
    }
    if (h.id.empty()) return std::nullopt;
    return h;
}

inline bool is_footer(const std::string& line) { return trim(line) == "{/quiz}"; }

// `a) text` (incorrect) or `A) text` (correct)
inline std::optional<Choice> parse_choice(const std::string& line) {
    if (line.size() < 2 || !std::isalpha(static_cast<unsigned char>(line[0])) || line[1] != ')')
        return std::nullopt;
    if (line.size() > 2 && line[2] != ' ') return std::nullopt;
    Choice c;
    c.correct = std::isupper(static_cast<unsigned char>(line[0])) != 0;
    c.label = static_cast<char>(std::tolower(static_cast<unsigned char>(line[0])));
    c.text = trim(line.substr(2));
    return c;
}

}  // namespace quiz_detail

inline QuizParse parse_quiz(std::string_view raw, const std::string& path) {
    QuizParse result;
    result.quiz.source_path = path;
    auto& diags = result.diagnostics;
    auto error = [&](std::string code, std::string msg, int line) {
        diags.push_back({Severity::Error, std::move(code), std::move(msg), path, line});
    };
    auto warning = [&](std::string code, std::string msg, int line) {
        diags.push_back({Severity::Warning, std::move(code), std::move(msg), path, line});
    };

    const auto lines = split_lines(normalize_newlines(raw));
    const int line_count = static_cast<int>(lines.size());

    size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i >= lines.size()) {
        error("MissingQuizHeader", "quiz file is empty", 1);
        return result;
    }
    auto header = quiz_detail::parse_header(lines[i]);
    if (!header) {
        error("MissingQuizHeader",
              "expected `{quiz, id: <ident>[, attempts: <n>]}`, got: " + trim(lines[i]),
              static_cast<int>(i) + 1);
        return result;
    }
    result.quiz.id = header->id;
    result.quiz.attempts = header->attempts;
    ++i;

    struct PendingQuestion {
        std::string prompt;
        std::vector<Choice> choices;
        std::vector<int> choice_lines;
        std::vector<std::string> answers;
        int line = 0;
        bool in_choices = false;
    };
    std::optional<PendingQuestion> pending;

    auto finalize = [&]() {
        if (!pending) return;
        PendingQuestion q = std::move(*pending);
        pending.reset();
        if (trim(q.prompt).empty()) {
            error("EmptyPrompt", "question has no prompt text", q.line);
            return;
        }
        if (!q.choices.empty() && !q.answers.empty()) {
            error("MixedKinds", "question mixes choices and fill-in answers", q.line);
            return;
        }
        Question out;
        out.prompt = trim(q.prompt);
        out.line = q.line;
        if (!q.choices.empty()) {
            out.kind = QuestionKind::MultipleChoice;
            std::set<char> labels;
            bool dup = false;
            for (size_t ci = 0; ci < q.choices.size(); ++ci) {
                if (!labels.insert(q.choices[ci].label).second) {
                    error("DuplicateChoiceLabel",
                          std::string("choice label '") + q.choices[ci].label + "' repeats",
                          q.choice_lines[ci]);
                    dup = true;
                }
            }
            if (dup) return;
            for (size_t ci = 1; ci < q.choices.size(); ++ci)
                if (q.choices[ci].label < q.choices[ci - 1].label) {
                    warning("ChoiceLabelOrder", "choice labels are not in alphabetical order",
                            q.choice_lines[ci]);
                    break;
                }
            if (q.choices.size() < 2) {
                error("TooFewChoices", "multiple-choice question needs at least 2 choices",
                      q.line);
                return;
            }
            out.choices = std::move(q.choices);
            if (out.correct_labels().empty()) {
                error("NoCorrectChoice", "no choice is marked correct (uppercase letter)",
                      q.line);
                return;
            }
        } else if (!q.answers.empty()) {
            out.kind = QuestionKind::FillInBlank;
            out.accepted_answers = std::move(q.answers);
            out.shuffle = false;
        } else {
            error("EmptyQuestion", "question has no choices or accepted answers", q.line);
            return;
        }
        result.quiz.questions.push_back(std::move(out));
    };

    bool saw_footer = false;
    for (; i < lines.size(); ++i) {
        const std::string& raw_line = lines[i];
        const int line_no = static_cast<int>(i) + 1;
        if (quiz_detail::is_footer(raw_line)) {
            saw_footer = true;
            ++i;
            break;
        }
        std::string t = trim(raw_line);
        if (t.empty()) {
            finalize();
            continue;
        }
        if (starts_with(t, "? ") || t == "?") {
            if (pending)
                warning("MissingBlankSeparator", "question starts without a separating blank line",
                        line_no);
            finalize();
            pending = PendingQuestion{};
            pending->prompt = trim(t.size() > 1 ? t.substr(2) : "");
            pending->line = line_no;
            continue;
        }
        if (!pending) {
            warning("StrayContent", "content outside any question ignored: " + t, line_no);
            continue;
        }
        if (auto choice = quiz_detail::parse_choice(t)) {
            pending->choices.push_back(*choice);
            pending->choice_lines.push_back(line_no);
            pending->in_choices = true;
            continue;
        }
        if (starts_with(t, "!")) {
            pending->answers.push_back(trim(t.substr(1)));
            pending->in_choices = true;
            continue;
        }
        // continuation line: prompt before markers, last choice/answer after
        if (!pending->in_choices) {
            pending->prompt += pending->prompt.empty() ? t : " " + t;
        } else if (!pending->answers.empty()) {
            pending->answers.back() += " " + t;
        } else {
            pending->choices.back().text += " " + t;
        }
    }
    finalize();

    if (!saw_footer) {
        error("MissingFooter", "missing closing `{/quiz}`", line_count == 0 ? 1 : line_count);
    } else {
        for (; i < lines.size(); ++i)
            if (!trim(lines[i]).empty()) {
                warning("TrailingContent", "content after `{/quiz}` ignored",
                        static_cast<int>(i) + 1);
                break;
            }
    }
    if (result.quiz.questions.empty() && result.ok())
        error("NoQuestions", "quiz contains no questions", 1);

    return result;
}

// ---------------------------------------------------------- course rules

// Cross-file validation: id uniqueness across the course and orphan
// detection (parsed quizzes never referenced by any chapter).
inline std::vector<QuizDiagnostic> validate_quizzes(
    const std::vector<QuizParse>& quizzes, const std::set<std::string>& referenced_ids) {
    std::vector<QuizDiagnostic> out;
    std::set<std::string> seen;
    for (const auto& qp : quizzes) {
        if (!qp.ok()) continue;
        if (!seen.insert(qp.quiz.id).second) {
            out.push_back({Severity::Error, "DuplicateQuizId",
                           "quiz id '" + qp.quiz.id + "' already used by another quiz file",
                           qp.quiz.source_path, 1});
            continue;
        }
        if (!referenced_ids.count(qp.quiz.id))
            out.push_back({Severity::Warning, "OrphanQuiz",
                           "quiz '" + qp.quiz.id + "' is not referenced by any chapter",
                           qp.quiz.source_path, 1});
    }
    return out;
}

// ------------------------------------------------------------- rendering

// Canonical quiz DSL text: single spaces after markers, one blank line
// between questions, LF endings. parse_quiz(render_leanpub_quiz(q))
// is structurally equal to q.
inline std::string render_leanpub_quiz(const Quiz& q) {
    std::string out = "{quiz, id: " + q.id;
    if (q.attempts) out += ", attempts: " + std::to_string(*q.attempts);
    out += "}\n";
    for (size_t qi = 0; qi < q.questions.size(); ++qi) {
        if (qi > 0) out += "\n";
        const Question& question = q.questions[qi];
        out += "? " + question.prompt + "\n";
        if (question.kind == QuestionKind::MultipleChoice) {
            for (const auto& c : question.choices) {
                char label = c.correct ? static_cast<char>(std::toupper(c.label)) : c.label;
                out += std::string(1, label) + ") " + c.text + "\n";
            }
        } else {
            for (const auto& a : question.accepted_answers) out += "! " + a + "\n";
        }
    }
    out += "{/quiz}\n";
    return out;
}

// ------------------------------------------------------------ conversion

class UnconvertibleQuiz : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using QuizBankEntry = nlohmann::ordered_json;

// Coursera-ready structured entry. Graded content is preserved exactly:
// prompts, option text, correct sets, accepted answers, in source order.
inline QuizBankEntry convert_to_coursera(const Quiz& q) {
    QuizBankEntry entry;
    entry["id"] = q.id;
    entry["attempts"] = q.attempts ? QuizBankEntry(*q.attempts) : QuizBankEntry(nullptr);
    entry["questions"] = QuizBankEntry::array();
    for (const auto& question : q.questions) {
        QuizBankEntry jq;
        if (question.kind == QuestionKind::MultipleChoice) {
            size_t correct = question.correct_labels().size();
            if (question.choices.size() < 2 || correct == 0)
                throw UnconvertibleQuiz("quiz '" + q.id + "' has an invalid question: " +
                                        question.prompt);
            jq["type"] = correct == 1 ? "multipleChoice" : "checkbox";
            jq["prompt"] = question.prompt;
            jq["shuffle"] = question.shuffle;
            jq["options"] = QuizBankEntry::array();
            for (const auto& c : question.choices)
                jq["options"].push_back({{"text", c.text}, {"correct", c.correct}});
        } else {
            if (question.accepted_answers.empty())
                throw UnconvertibleQuiz("quiz '" + q.id + "' has a fill-in question with no answers");
            jq["type"] = "textExactMatch";
            jq["prompt"] = question.prompt;
            jq["shuffle"] = false;
            jq["acceptedAnswers"] = question.accepted_answers;
        }
        entry["questions"].push_back(std::move(jq));
    }
    return entry;
}

inline QuizBankEntry quiz_bank(const std::vector<Quiz>& quizzes) {
    QuizBankEntry bank;
    bank["quizzes"] = QuizBankEntry::array();
    for (const auto& q : quizzes) bank["quizzes"].push_back(convert_to_coursera(q));
    return bank;
}

inline std::string quiz_bank_text(const QuizBankEntry& bank) { return bank.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n"; }

}  // namespace ottr
