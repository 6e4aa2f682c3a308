#include <catch2/catch_amalgamated.hpp>

#include "ottr/checks.hpp"
#include "support.hpp"

using namespace ottr;

namespace {

// Minimal manifest + dictionary so load_course works out of the box.
void seed_course(const testsupport::TempDir& dir, const std::string& manifest_extra = "",
                 const std::string& chapter_body = "# Intro\n\nHello world.\n") {
    write_file(dir / "_ottr.yml",
               "title: Fixture\nchapters:\n  - source: 01-intro.md\n" + manifest_extra);
    write_file(dir / "01-intro.md", chapter_body);
    write_file(dir / "dictionary.txt", "");
}

Course load_fixture(const testsupport::TempDir& dir) {
    OfflineSlideResolver resolver("fixtures");
    return load_course(dir.path(), resolver);
}

}  // namespace

TEST_CASE("spell check flags unknown words, oracle-verified") {
    auto doc = parse_chapter("The quick brwn fox jumps over the lazy dog.\n", "c.md");
    auto findings = spell_check({doc}, base_dictionary(), {});
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].detail == "unknown word: brwn");
    CHECK(findings[0].line == 1);
    CHECK(findings[0].severity == Severity::Warning);

    // independent oracle: naive letter-run tokenizer + direct set lookups
    std::string text = "The quick brwn fox jumps over the lazy dog.";
    int unknown = 0;
    std::string run;
    for (char c : text + " ") {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            run += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!run.empty()) {
            if (!base_dictionary().count(run)) ++unknown;
            run.clear();
        }
    }
    CHECK(unknown == static_cast<int>(findings.size()));
}

TEST_CASE("project wordlist extends the dictionary") {
    auto doc = parse_chapter("The quick brwn fox.\n", "c.md");
    CHECK(spell_check({doc}, base_dictionary(), parse_wordlist("brwn\n")).empty());
}

TEST_CASE("misspellings inside fenced code are invisible") {
    auto doc = parse_chapter("```\nthe verry brokken wrds\n```\n", "c.md");
    CHECK(spell_check({doc}, base_dictionary(), {}).empty());
}

TEST_CASE("hyphenated compounds pass when every part is known") {
    auto doc = parse_chapter("A well-known fill-in-the-blank question.\n", "c.md");
    CHECK(spell_check({doc}, base_dictionary(), {}).empty());
}

TEST_CASE("accented words stay whole and are not flagged") {
    auto doc = parse_chapter("A na\xc3\xafve caf\xc3\xa9 visit.\n", "c.md");
    CHECK(spell_check({doc}, base_dictionary(), {}).empty());
}

TEST_CASE("wordlist files support comments") {
    auto words = parse_wordlist("# jargon\nottr  # tool name\n\nMarkua\n");
    CHECK(words == std::set<std::string>{"ottr", "markua"});
}

TEST_CASE("url check: anchors, files, external probes") {
    testsupport::TempDir dir("urls");
    write_file(dir / "01-a.md", "x");
    write_file(dir / "02-b.md", "x");

    auto doc_a = parse_chapter(
        "# Getting Started\n\n[ok](#getting-started) [other](02-b.md#setup) "
        "[gone](./missing.md)\n",
        "01-a.md");
    auto doc_b = parse_chapter("# Setup\n\n[ext](https://x.test/404) [fine](https://x.test/ok)\n",
                               "02-b.md");

    FixtureUrlProber prober({{"https://x.test/404", 404}});
    auto findings = url_check({doc_a, doc_b}, dir.path(), {}, prober);
    REQUIRE(findings.size() == 2);
    CHECK(findings[0].path == "01-a.md");
    CHECK(findings[0].detail == "broken internal link: ./missing.md");
    CHECK(findings[1].path == "02-b.md");
    CHECK(findings[1].detail.find("404") != std::string::npos);
}

TEST_CASE("url check skips mailto and exclusion globs") {
    testsupport::TempDir dir("urls2");
    write_file(dir / "a.md", "x");
    auto doc = parse_chapter(
        "[m](mailto:x@y.z) [skip](https://example.org/dead) [probe](https://live.test/)\n",
        "a.md");
    FixtureUrlProber prober({{"https://example.org/dead", 500}});
    auto findings = url_check({doc}, dir.path(), {"*example.org*"}, prober);
    CHECK(findings.empty());
}

TEST_CASE("relative links in borrowed chapters are skipped, external ones kept") {
    testsupport::TempDir dir("urlsb");
    write_file(dir / "origin/ch.md", "x");  // sibling of the course root
    fs::create_directories(dir / "course");
    auto borrowed = parse_chapter(
        "# Shared\n\n[rel](other.md) [ext](https://dead.test/x)\n", "../origin/ch.md");
    FixtureUrlProber prober({{"https://dead.test/x", 404}});
    auto findings = url_check({borrowed}, dir / "course", {}, prober);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].detail.find("dead.test") != std::string::npos);
}

TEST_CASE("broken same-document anchor is caught") {
    testsupport::TempDir dir("urls3");
    write_file(dir / "a.md", "x");
    auto doc = parse_chapter("# Top\n\n[bad](#nowhere)\n", "a.md");
    FixtureUrlProber prober;
    auto findings = url_check({doc}, dir.path(), {}, prober);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].detail == "broken anchor: #nowhere");
}

TEST_CASE("probe transport failures become findings, not crashes") {
    testsupport::TempDir dir("urls4");
    auto doc = parse_chapter("[x](https://refused.test/)\n", "a.md");
    FixtureUrlProber prober({{"https://refused.test/", -1}});
    auto findings = url_check({doc}, dir.path(), {}, prober);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].detail.find("probe failed") != std::string::npos);
}

TEST_CASE("alt text check") {
    auto with = parse_chapter("![chart of X](img.png)\n", "a.md");
    auto without = parse_chapter("![](img.png)\n", "b.md");
    auto none = parse_chapter("no images here\n", "c.md");
    CHECK(alt_text_check({with}).empty());
    auto findings = alt_text_check({without});
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].severity == Severity::Warning);
    CHECK(findings[0].detail == "image missing alt text: img.png");
    CHECK(alt_text_check({none}).empty());
}

TEST_CASE("run_checks with all toggles off yields an empty passing report") {
    testsupport::TempDir dir("off");
    seed_course(dir, "checks: {spelling: false, urls: false, quizzes: false, alt_text: false}\n",
                "# T\n\nbrwn [x](./gone.md) ![](no-alt.png)\n");
    Course course = load_fixture(dir);
    FixtureUrlProber prober;
    auto report = run_checks(course, prober);
    CHECK(report.findings.empty());
    CHECK_FALSE(report.failed());
    CHECK(report.status() == "pass");
}

TEST_CASE("only spelling enabled finds exactly the seeded misspellings") {
    testsupport::TempDir dir("spell");
    seed_course(dir, "checks: {urls: false, quizzes: false, alt_text: false}\n",
                "# T\n\nzzyx one qqwz two\n\nmore text vvbnq here\n");
    Course course = load_fixture(dir);
    FixtureUrlProber prober;
    auto report = run_checks(course, prober);
    CHECK(report.findings.size() == 3);
    for (const auto& f : report.findings) CHECK(f.check == CheckKind::Spelling);
    CHECK(report.status() == "pass");  // spelling is warning severity
}

TEST_CASE("quiz error with urls off: one quizzes finding, status fail") {
    testsupport::TempDir dir("qz");
    seed_course(dir, "checks: {spelling: false, urls: false, alt_text: false}\n",
                "# T\n\n{quiz: broken}\n");
    write_file(dir / "quizzes/broken.md", "{quiz, id: broken}\n? Pick\na) x\nb) y\n{/quiz}\n");
    Course course = load_fixture(dir);
    FixtureUrlProber prober;
    auto report = run_checks(course, prober);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].check == CheckKind::Quizzes);
    CHECK(report.findings[0].detail.find("NoCorrectChoice") != std::string::npos);
    CHECK(report.failed());
}

TEST_CASE("missing wordlist is a config error when spelling is enabled") {
    testsupport::TempDir dir("nodict");
    write_file(dir / "_ottr.yml", "title: F\nchapters:\n  - source: a.md\n");
    write_file(dir / "a.md", "# A\n");
    Course course = load_fixture(dir);
    FixtureUrlProber prober;
    CHECK_THROWS_AS(run_checks(course, prober), ConfigError);
}

TEST_CASE("toggle soundness across all sixteen combinations") {
    testsupport::TempDir dir("matrix");
    for (int mask = 0; mask < 16; ++mask) {
        std::string toggles = "checks: {spelling: " + std::string(mask & 1 ? "true" : "false") +
                              ", urls: " + (mask & 2 ? "true" : "false") +
                              ", quizzes: " + (mask & 4 ? "true" : "false") +
                              ", alt_text: " + (mask & 8 ? "true" : "false") + "}\n";
        write_file(dir / "_ottr.yml",
                   "title: F\nchapters:\n  - source: 01-intro.md\n" + toggles);
        write_file(dir / "01-intro.md",
                   "# T\n\nzzqy misspelled [broken](./gone.md) ![](noalt.png)\n\n{quiz: broken}\n");
        write_file(dir / "dictionary.txt", "");
        write_file(dir / "quizzes/broken.md",
                   "{quiz, id: broken}\n? Pick\na) x\nb) y\n{/quiz}\n");
        Course course = load_fixture(dir);
        FixtureUrlProber prober;
        auto report = run_checks(course, prober);
        INFO("mask=" << mask);
        // every enabled check fires on this corpus; disabled ones never do
        CHECK((report.count(CheckKind::Spelling, Severity::Warning) > 0) == ((mask & 1) != 0));
        CHECK((report.count(CheckKind::Urls, Severity::Error) > 0) == ((mask & 2) != 0));
        CHECK((report.count(CheckKind::Quizzes, Severity::Error) > 0) == ((mask & 4) != 0));
        CHECK((report.count(CheckKind::AltText, Severity::Warning) > 0) == ((mask & 8) != 0));
        for (const auto& f : report.findings) {
            CHECK(report.enabled.enabled(f.check));
        }
    }
}

TEST_CASE("findings are deterministic across runs and parallelism levels") {
    testsupport::TempDir dir("det");
    seed_course(dir, "",
                "# T\n\n[a](https://a.test/1) [b](https://b.test/2) [c](https://c.test/3) "
                "[d](./missing.md)\n");
    Course course = load_fixture(dir);
    FixtureUrlProber prober({{"https://a.test/1", 404},
                             {"https://b.test/2", 500},
                             {"https://c.test/3", 301}});
    RunOptions opts;
    opts.timestamp = 0;
    auto report1 = run_checks(course, prober, opts);
    opts.url.parallelism = 1;
    auto report2 = run_checks(course, prober, opts);
    CHECK(report1.findings == report2.findings);
    CHECK(render_report(report1) == render_report(report2));
}

TEST_CASE("status law: fail exactly when an error-severity finding exists") {
    CheckReport r;
    CHECK(r.status() == "pass");
    r.findings.push_back({CheckKind::Spelling, Severity::Warning, "a.md", 1, "w"});
    CHECK(r.status() == "pass");
    r.findings.push_back({CheckKind::Urls, Severity::Error, "a.md", 2, "e"});
    CHECK(r.status() == "fail");
    CHECK(r.error_count() == 1);
    CHECK(r.warning_count() == 1);
}

TEST_CASE("empty report renders four zero rows and PASS") {
    CheckReport r;
    r.started = r.finished = 0;
    std::string text = render_report(r);
    CHECK(text.find("| spelling | 0 | 0 | PASS |") != std::string::npos);
    CHECK(text.find("| urls | 0 | 0 | PASS |") != std::string::npos);
    CHECK(text.find("| quizzes | 0 | 0 | PASS |") != std::string::npos);
    CHECK(text.find("| alt_text | 0 | 0 | PASS |") != std::string::npos);
    CHECK(text.find("Overall: PASS") != std::string::npos);
}

TEST_CASE("report with one url error renders FAIL") {
    CheckReport r;
    r.started = r.finished = 42;
    r.findings.push_back({CheckKind::Urls, Severity::Error, "a.md", 3, "dead link"});
    std::string text = render_report(r);
    CHECK(text.find("| urls | 1 | 0 | FAIL |") != std::string::npos);
    CHECK(text.find("Overall: FAIL") != std::string::npos);
    CHECK(text.find("`a.md:3` error: dead link") != std::string::npos);
    // byte-determinism with fixed timestamps
    CHECK(render_report(r) == text);
}

TEST_CASE("disabled checks render as OFF") {
    CheckReport r;
    r.enabled.urls = false;
    std::string text = render_report(r);
    CHECK(text.find("| urls | - | - | OFF |") != std::string::npos);
}

TEST_CASE("report json has stable key order and matches counts") {
    CheckReport r;
    r.started = r.finished = 7;
    r.findings.push_back({CheckKind::AltText, Severity::Warning, "b.md", 9, "image missing alt"});
    auto j = report_json(r);
    std::string dumped = j.dump();
    CHECK(dumped.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(j["checks"]["alt_text"]["warnings"] == 1);
    CHECK(j["findings"][0]["path"] == "b.md");
    // key order pinned
    CHECK(dumped.find("\"check\":") < dumped.find("\"severity\":"));
}
