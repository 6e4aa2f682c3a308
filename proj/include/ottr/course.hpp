#pragma once

#include <set>
#include <string>
#include <vector>

#include "ottr/manifest.hpp"
#include "ottr/markdown.hpp"
#include "ottr/quiz.hpp"
#include "ottr/slides.hpp"
#include "ottr/sync.hpp"

// Loading turns a course tree into one immutable in-memory model: manifest,
// parsed chapters (borrowed ones fetched and hash-pinned), resolved slide
// embeds and parsed quizzes. Checks and all three renderers work from this
// model only, which is what keeps the targets in lockstep.

namespace ottr {

struct LoadedChapter {
    ChapterEntry entry;
    std::string stem;  // output name shared by every target
    ChapterDoc doc;
};

struct Course {
    fs::path root;
    CourseManifest manifest;
    std::vector<LoadedChapter> chapters;
    std::vector<QuizParse> quizzes;  // quiz_dir files in filename order
    std::set<std::string> referenced_quiz_ids;
    std::vector<SlideResolveFailure> slide_failures;
    std::vector<std::string> warnings;

    const Quiz* find_quiz(const std::string& id) const {
        for (const auto& qp : quizzes)
            if (qp.ok() && qp.quiz.id == id) return &qp.quiz;
        return nullptr;
    }
};

inline Course load_course(const fs::path& root, const SlideResolver& resolver) {
    Course course;
    course.root = root;
    course.manifest = load_manifest(root, &course.warnings);

    Lockfile lockfile = Lockfile::load(root);
    const fs::path cache_dir = root / ".ottr_cache";

    for (const auto& entry : course.manifest.chapters) {
        std::string content;
        std::string display_path;
        if (entry.is_borrowed()) {
            auto fetched =
                fetch_borrowed_chapter(entry.borrow->origin, entry.borrow->file, lockfile,
                                       is_url(entry.borrow->origin) ? cache_dir : fs::path{},
                                       root);
            content = std::move(fetched.content);
            display_path = entry.borrow->origin + "/" + entry.borrow->file;
        } else {
            auto text = read_file_if_exists(root / entry.source);
            if (!text)
                throw ConfigError("chapter file not found: " + (root / entry.source).string());
            content = std::move(*text);
            display_path = entry.source;
        }

        LoadedChapter chapter;
        chapter.entry = entry;
        chapter.stem = entry.output_stem();
        chapter.doc = parse_chapter(content, display_path);
        if (entry.title_override) chapter.doc.title = *entry.title_override;

        auto resolved = resolve_slide_embeds(chapter.doc, resolver);
        chapter.doc = std::move(resolved.doc);
        if (entry.title_override) chapter.doc.title = *entry.title_override;
        for (auto& failure : resolved.failures) course.slide_failures.push_back(failure);
        for (const auto& w : chapter.doc.warnings)
            course.warnings.push_back(display_path + ": " + w);

        course.chapters.push_back(std::move(chapter));
    }
    lockfile.save();

    const fs::path quiz_dir = root / course.manifest.quiz_dir;
    if (fs::is_directory(quiz_dir)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(quiz_dir))
            if (e.is_regular_file() && e.path().extension() == ".md") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::string rel = fs::relative(file, root).generic_string();
            course.quizzes.push_back(parse_quiz(read_file(file), rel));
        }
    }

    for (const auto& chapter : course.chapters)
        for (const auto& ref : chapter.doc.quiz_refs) course.referenced_quiz_ids.insert(ref.quiz_id);

    return course;
}

}  // namespace ottr
