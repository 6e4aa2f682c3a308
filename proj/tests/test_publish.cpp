#include <catch2/catch_amalgamated.hpp>

#include "course_fixture.hpp"
#include "ottr/publish.hpp"
#include "ottr/scaffold.hpp"
#include "support.hpp"

using namespace ottr;

namespace {

Course load_fixture(const fs::path& root) {
    OfflineSlideResolver resolver("fixtures");
    return load_course(root, resolver);
}

RenderPlan plan_for(const std::vector<Target>& targets) {
    RenderPlan plan;
    plan.targets = targets;
    plan.fixed_timestamp = 0;
    return plan;
}

}  // namespace

TEST_CASE("site: one page per chapter plus index, ordered navigation") {
    testsupport::TempDir dir("site");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_site(course, plan_for({Target::Site}));

    REQUIRE(bundle.files.size() >= 4);
    CHECK(bundle.entrypoint == "index.html");
    const std::string* index = bundle.find("index.html");
    REQUIRE(index);
    CHECK(index->find("<a href=\"01-intro.html\">") != std::string::npos);
    REQUIRE(bundle.find("01-intro.html"));
    REQUIRE(bundle.find("02-topics.html"));
    REQUIRE(bundle.find("03-shared.html"));

    // manifest order in the sidebar of every page
    const std::string& page = *bundle.find("02-topics.html");
    size_t p1 = page.find("01-intro.html");
    size_t p2 = page.find("02-topics.html");
    size_t p3 = page.find("03-shared.html");
    REQUIRE(p1 != std::string::npos);
    REQUIRE(p2 != std::string::npos);
    REQUIRE(p3 != std::string::npos);
    CHECK(p1 < p2);
    CHECK(p2 < p3);
}

TEST_CASE("site: credits table on the final chapter, role order kept") {
    testsupport::TempDir dir("credits");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_site(course, plan_for({Target::Site}));

    const std::string& last = *bundle.find("03-shared.html");
    size_t ada = last.find("<tr><td>Ada Example</td><td>Content author, Editor</td></tr>");
    size_t grace = last.find("<tr><td>Grace Sample</td><td>Technical review</td></tr>");
    REQUIRE(ada != std::string::npos);
    REQUIRE(grace != std::string::npos);
    CHECK(ada < grace);  // highest involvement first
    CHECK(bundle.find("01-intro.html")->find("table class=\"credits\"") == std::string::npos);
}

TEST_CASE("site: feedback link, anchors, quiz review blocks") {
    testsupport::TempDir dir("site2");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_site(course, plan_for({Target::Site}));

    const std::string& intro = *bundle.find("01-intro.html");
    CHECK(intro.find("https://example.com/feedback") != std::string::npos);
    CHECK(intro.find("<h1 id=\"introduction\">") != std::string::npos);
    CHECK(intro.find("quiz-prompt") != std::string::npos);
    CHECK(intro.find("Where does content live?") != std::string::npos);
    const std::string& topics = *bundle.find("02-topics.html");
    CHECK(topics.find("<h2 id=\"first-steps\">") != std::string::npos);
    CHECK(topics.find("print(&quot;hello&quot;)") != std::string::npos);
}

TEST_CASE("site: chapter links become .html, images ship under resources/") {
    testsupport::TempDir dir("site3");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_site(course, plan_for({Target::Site}));

    const std::string& intro = *bundle.find("01-intro.html");
    CHECK(intro.find("<a href=\"02-topics.html\">") != std::string::npos);
    CHECK(intro.find("02-topics.md") == std::string::npos);
    CHECK(intro.find("<img src=\"resources/images/logo.png\"") != std::string::npos);
    REQUIRE(bundle.find("resources/images/logo.png"));
    CHECK(*bundle.find("resources/images/logo.png") == "LOGO_PNG_BYTES");

    const std::string& topics = *bundle.find("02-topics.html");
    CHECK(topics.find("<a href=\"01-intro.html#introduction\">") != std::string::npos);

    // borrowed chapter's image comes from its origin
    REQUIRE(bundle.find("resources/images/shared.png"));
    CHECK(*bundle.find("resources/images/shared.png") == "SHARED_PNG_BYTES");
}

TEST_CASE("leanpub: Book.txt order, quiz blocks, image resources") {
    testsupport::TempDir dir("lp");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_leanpub(course, plan_for({Target::Leanpub}));

    const std::string* book = bundle.find("manuscript/Book.txt");
    REQUIRE(book);
    CHECK(*book == "01-intro.md\n02-topics.md\n03-shared.md\n");

    const std::string& intro = *bundle.find("manuscript/01-intro.md");
    CHECK(intro.find("{quiz, id: quiz_01}") != std::string::npos);
    CHECK(intro.find("{/quiz}") != std::string::npos);
    CHECK(intro.find("![course logo](resources/images/logo.png)") != std::string::npos);

    const std::string& topics = *bundle.find("manuscript/02-topics.md");
    CHECK(topics.find("{quiz, id: quiz_02, attempts: 3}") != std::string::npos);

    // image bytes copied from both the course and the borrow origin
    REQUIRE(bundle.find("manuscript/resources/images/logo.png"));
    CHECK(*bundle.find("manuscript/resources/images/logo.png") == "LOGO_PNG_BYTES");
    REQUIRE(bundle.find("manuscript/resources/images/shared.png"));
    CHECK(*bundle.find("manuscript/resources/images/shared.png") == "SHARED_PNG_BYTES");
    const std::string& shared = *bundle.find("manuscript/03-shared.md");
    CHECK(shared.find("![shared picture](resources/images/shared.png)") != std::string::npos);
}

TEST_CASE("leanpub: hand-built expected manuscript for a tiny fixture") {
    testsupport::TempDir dir("lp2");
    fs::path root = dir / "course";
    write_file(root / "_ottr.yml",
               "title: Tiny\nchapters:\n  - source: only.md\ntargets: [leanpub]\n");
    write_file(root / "only.md", "# Only\n\nSome words here.\n\n{quiz: q1}\n");
    write_file(root / "quizzes/q1.md", "{quiz, id: q1}\n? Q?\nA) yes\nb) no\n{/quiz}\n");
    write_file(root / "dictionary.txt", "");
    Course course = load_fixture(root);
    auto bundle = render_leanpub(course, plan_for({Target::Leanpub}));
    CHECK(*bundle.find("manuscript/Book.txt") == "only.md\n");
    CHECK(*bundle.find("manuscript/only.md") ==
          "# Only\n"
          "\n"
          "Some words here.\n"
          "\n"
          "{quiz, id: q1}\n"
          "? Q?\n"
          "A) yes\n"
          "b) no\n"
          "{/quiz}\n");
}

TEST_CASE("leanpub: empty quiz_dir renders zero quiz blocks without error") {
    testsupport::TempDir dir("lp3");
    fs::path root = dir / "course";
    write_file(root / "_ottr.yml", "title: T\nchapters:\n  - source: a.md\n");
    write_file(root / "a.md", "# A\n\nwords\n");
    write_file(root / "dictionary.txt", "");
    Course course = load_fixture(root);
    auto bundle = render_leanpub(course, plan_for({Target::Leanpub}));
    CHECK(bundle.find("manuscript/a.md")->find("{quiz") == std::string::npos);
}

TEST_CASE("coursera: embed pages point at the hosted site") {
    testsupport::TempDir dir("cr");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_coursera(course, plan_for({Target::Coursera}));

    const std::string& embed = *bundle.find("01-intro.html");
    CHECK(embed.find("<iframe src=\"https://courses.example.com/fixture/01-intro.html\"") !=
          std::string::npos);
    CHECK(embed.find("height:100vh") != std::string::npos);
    // no site navigation in embed shells
    CHECK(embed.find("sidebar") == std::string::npos);

    // index preserves manifest order
    const std::string& index = *bundle.find("index.html");
    CHECK(index.find("01-intro.html") < index.find("02-topics.html"));
    CHECK(index.find("02-topics.html") < index.find("03-shared.html"));
}

TEST_CASE("coursera: quiz bank matches per-quiz conversions exactly") {
    testsupport::TempDir dir("cr2");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    auto bundle = render_coursera(course, plan_for({Target::Coursera}));

    auto bank = nlohmann::ordered_json::parse(*bundle.find("quiz_bank.json"));
    REQUIRE(bank["quizzes"].size() == 2);
    CHECK(bank["quizzes"][0] == convert_to_coursera(course.quizzes[0].quiz));
    CHECK(bank["quizzes"][1] == convert_to_coursera(course.quizzes[1].quiz));
}

TEST_CASE("coursera without base_url names the manifest key") {
    testsupport::TempDir dir("cr3");
    fs::path root = dir / "course";
    write_file(root / "_ottr.yml", "title: T\nchapters:\n  - source: a.md\n");
    write_file(root / "a.md", "# A\n");
    write_file(root / "dictionary.txt", "");
    Course course = load_fixture(root);
    try {
        render_coursera(course, plan_for({Target::Coursera}));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("base_url") != std::string::npos);
    }
}

// ------------------------------------------------------------------ build

TEST_CASE("build renders all targets once and gates on check failures") {
    testsupport::TempDir dir("build");
    testsupport::make_fixture_course(dir / "course");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");

    RenderPlan plan;
    plan.fixed_timestamp = 0;
    auto result = build(dir / "course", plan, resolver, prober);
    CHECK_FALSE(result.report.failed());
    REQUIRE(result.rendered);
    REQUIRE(result.bundles.size() == 3);
    CHECK(fs::exists(dir / "course/_output/site/index.html"));
    CHECK(fs::exists(dir / "course/_output/leanpub/manuscript/Book.txt"));
    CHECK(fs::exists(dir / "course/_output/coursera/quiz_bank.json"));
    CHECK(fs::exists(dir / "course/reports/check_report.md"));
    CHECK(fs::exists(dir / "course/reports/check_report.json"));
}

TEST_CASE("build with a broken link fails and writes no bundles") {
    testsupport::TempDir dir("gate");
    testsupport::make_fixture_course(dir / "course");
    write_file(dir / "course/02-topics.md",
               "# Topics\n\nSee [gone](./missing.md).\n\n{quiz: quiz_02}\n");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.fixed_timestamp = 0;
    auto result = build(dir / "course", plan, resolver, prober);
    CHECK(result.report.failed());
    CHECK_FALSE(result.rendered);
    CHECK(result.bundles.empty());
    CHECK_FALSE(fs::exists(dir / "course/_output"));
    CHECK(fs::exists(dir / "course/reports/check_report.md"));

    // --force overrides the gate
    plan.force = true;
    auto forced = build(dir / "course", plan, resolver, prober);
    CHECK(forced.rendered);
    CHECK(fs::exists(dir / "course/_output/site/index.html"));
}

TEST_CASE("single-source law: a sentinel reaches all three bundles") {
    testsupport::TempDir dir("law");
    const std::string sentinel = "zebra quality sentence for tracking purposes.";
    testsupport::make_fixture_course(dir / "course", "", sentinel);
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.fixed_timestamp = 0;
    auto result = build(dir / "course", plan, resolver, prober);
    REQUIRE(result.rendered);

    std::string site_page = read_file(dir / "course/_output/site/01-intro.html");
    std::string manuscript = read_file(dir / "course/_output/leanpub/manuscript/01-intro.md");
    CHECK(site_page.find(sentinel) != std::string::npos);
    CHECK(manuscript.find(sentinel) != std::string::npos);

    // the coursera embed targets the hosted copy of the same page
    std::string embed = read_file(dir / "course/_output/coursera/01-intro.html");
    const std::string prefix = "<iframe src=\"https://courses.example.com/fixture/";
    size_t src = embed.find(prefix);
    REQUIRE(src != std::string::npos);
    size_t start = src + prefix.size();
    size_t end = embed.find('"', start);
    std::string page_name = embed.substr(start, end - start);
    std::string targeted = read_file(dir / "course/_output/site" / page_name);
    CHECK(targeted.find(sentinel) != std::string::npos);
}

TEST_CASE("determinism: two timestamped builds are byte-identical") {
    testsupport::TempDir dir("det2");
    testsupport::make_fixture_course(dir / "course");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.fixed_timestamp = 0;

    build(dir / "course", plan, resolver, prober);
    std::string first = tree_hash(dir / "course/_output");
    std::string first_report = read_file(dir / "course/reports/check_report.md");
    build(dir / "course", plan, resolver, prober);
    CHECK(tree_hash(dir / "course/_output") == first);
    CHECK(read_file(dir / "course/reports/check_report.md") == first_report);
}

TEST_CASE("target independence: dropping one target leaves the rest identical") {
    testsupport::TempDir dir("indep");
    testsupport::make_fixture_course(dir / "course");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");

    RenderPlan plan;
    plan.fixed_timestamp = 0;
    build(dir / "course", plan, resolver, prober);
    std::string site_before = tree_hash(dir / "course/_output/site");
    std::string leanpub_before = tree_hash(dir / "course/_output/leanpub");

    RenderPlan partial = plan;
    partial.targets = {Target::Site, Target::Leanpub};
    build(dir / "course", partial, resolver, prober);
    CHECK(tree_hash(dir / "course/_output/site") == site_before);
    CHECK(tree_hash(dir / "course/_output/leanpub") == leanpub_before);
}

TEST_CASE("requesting a target the manifest disabled is a config error") {
    testsupport::TempDir dir("notgt");
    fs::path root = dir / "course";
    write_file(root / "_ottr.yml",
               "title: T\ntargets: [site]\nchapters:\n  - source: a.md\n");
    write_file(root / "a.md", "# A\n");
    write_file(root / "dictionary.txt", "");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.targets = {Target::Leanpub};
    CHECK_THROWS_AS(build(root, plan, resolver, prober), ConfigError);
}

TEST_CASE("bundle invariants: unique file paths, entrypoint present") {
    testsupport::TempDir dir("inv");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    for (Target target : all_targets()) {
        auto bundle = render_target(course, target, plan_for({target}));
        INFO(target_name(target));
        std::set<std::string> paths;
        for (const auto& [rel, bytes] : bundle.files) {
            INFO(rel);
            CHECK(paths.insert(rel).second);  // unique
        }
        CHECK(bundle.find(bundle.entrypoint) != nullptr);
    }
}

TEST_CASE("chapters in subdirectories flatten cleanly into every target") {
    testsupport::TempDir dir("subdir");
    fs::path root = dir / "course";
    write_file(root / "_ottr.yml",
               "title: Nested\n"
               "targets: [site, leanpub]\n"
               "chapters:\n"
               "  - source: chapters/01-one.md\n"
               "  - source: chapters/02-two.md\n");
    write_file(root / "chapters/01-one.md",
               "# One\n\nGo to [two](02-two.md).\n\n![pic](img/p.png)\n");
    write_file(root / "chapters/02-two.md", "# Two\n\nBack to [one](01-one.md#one).\n");
    write_file(root / "chapters/img/p.png", "PIXELS");
    write_file(root / "dictionary.txt", "");
    Course course = load_fixture(root);

    auto site = render_site(course, plan_for({Target::Site}));
    REQUIRE(site.find("01-one.html"));
    CHECK(site.find("01-one.html")->find("<a href=\"02-two.html\">") != std::string::npos);
    CHECK(site.find("02-two.html")->find("<a href=\"01-one.html#one\">") != std::string::npos);
    CHECK(site.find("01-one.html")->find("src=\"resources/chapters/img/p.png\"") !=
          std::string::npos);
    REQUIRE(site.find("resources/chapters/img/p.png"));
    CHECK(*site.find("resources/chapters/img/p.png") == "PIXELS");

    auto leanpub = render_leanpub(course, plan_for({Target::Leanpub}));
    CHECK(*leanpub.find("manuscript/Book.txt") == "01-one.md\n02-two.md\n");
    CHECK(leanpub.find("manuscript/01-one.md")->find("[two](02-two.md)") != std::string::npos);
    CHECK(leanpub.find("manuscript/01-one.md")
              ->find("![pic](resources/chapters/img/p.png)") != std::string::npos);

    // the internal links check accepts the subdirectory layout too
    FixtureUrlProber prober;
    auto findings = url_check({course.chapters[0].doc, course.chapters[1].doc}, root, {}, prober);
    CHECK(findings.empty());
}

TEST_CASE("a throwing prober becomes findings, not a crash") {
    struct ThrowingProber final : UrlProber {
        ProbeResult probe(const std::string&) const override {
            throw std::runtime_error("socket exploded");
        }
    };
    testsupport::TempDir dir("throwing");
    auto doc = parse_chapter("[x](https://a.test/) [y](https://b.test/)\n", "a.md");
    ThrowingProber prober;
    auto findings = url_check({doc}, dir.path(), {}, prober);
    REQUIRE(findings.size() == 2);
    CHECK(findings[0].detail.find("probe failed: socket exploded") != std::string::npos);
}

TEST_CASE("plan-level base_url override wins over the manifest") {
    testsupport::TempDir dir("baseov");
    testsupport::make_fixture_course(dir / "course");
    Course course = load_fixture(dir / "course");
    RenderPlan plan = plan_for({Target::Coursera});
    plan.base_url = "https://mirror.example.net/alt";
    auto bundle = render_coursera(course, plan);
    CHECK(bundle.find("01-intro.html")
              ->find("<iframe src=\"https://mirror.example.net/alt/01-intro.html\"") !=
          std::string::npos);
}

TEST_CASE("editing a chapter and rebuilding refreshes every bundle") {
    testsupport::TempDir dir("edit");
    testsupport::make_fixture_course(dir / "course", "", "the original wording here.");
    FixtureUrlProber prober;
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.fixed_timestamp = 0;
    build(dir / "course", plan, resolver, prober);

    testsupport::make_fixture_course(dir / "course", "", "the corrected wording here.");
    build(dir / "course", plan, resolver, prober);
    CHECK(read_file(dir / "course/_output/site/01-intro.html").find("corrected wording") !=
          std::string::npos);
    CHECK(read_file(dir / "course/_output/leanpub/manuscript/01-intro.md")
              .find("corrected wording") != std::string::npos);
    CHECK(read_file(dir / "course/_output/site/01-intro.html").find("original wording") ==
          std::string::npos);
}
