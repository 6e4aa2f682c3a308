#include <catch2/catch_amalgamated.hpp>

#include "ottr/publish.hpp"
#include "ottr/scaffold.hpp"
#include "support.hpp"

using namespace ottr;

TEST_CASE("scaffold creates a complete starter course") {
    testsupport::TempDir dir("scaffold");
    auto created = scaffold_course(dir / "demo", "Demo");
    CHECK(created.size() >= 5);
    CHECK(fs::exists(dir / "demo/_ottr.yml"));
    CHECK(fs::exists(dir / "demo/quizzes/quiz_01.md"));
    CHECK(fs::exists(dir / "demo/dictionary.txt"));

    auto parsed = parse_manifest(read_file(dir / "demo/_ottr.yml"));
    REQUIRE(parsed.ok());
    CHECK(parsed.warnings.empty());
    CHECK(parsed.manifest->title == "Demo");
    CHECK(parsed.manifest->targets.size() == 3);
    CHECK(parsed.manifest->feedback_url.has_value());
}

TEST_CASE("scaffold builds all three targets with zero findings") {
    testsupport::TempDir dir("scaffold2");
    scaffold_course(dir / "demo", "Demo Course");
    FixtureUrlProber prober;  // scaffold has no external links; nothing to probe
    OfflineSlideResolver resolver("fixtures");
    RenderPlan plan;
    plan.fixed_timestamp = 0;
    auto result = build(dir / "demo", plan, resolver, prober);
    INFO(render_report(result.report));
    CHECK(result.report.findings.empty());
    CHECK(result.rendered);
    CHECK(result.bundles.size() == 3);
    CHECK(fs::exists(dir / "demo/_output/site/index.html"));
    CHECK(fs::exists(dir / "demo/_output/leanpub/manuscript/Book.txt"));
    CHECK(fs::exists(dir / "demo/_output/coursera/quiz_bank.json"));
}

TEST_CASE("scaffold into a non-empty directory is refused") {
    testsupport::TempDir dir("scaffold3");
    write_file(dir / "demo/existing.txt", "already here\n");
    CHECK_THROWS_AS(scaffold_course(dir / "demo", "Demo"), DestinationNotEmpty);
    // empty directory is fine
    fs::create_directories(dir / "empty");
    CHECK(scaffold_course(dir / "empty", "Demo").size() >= 5);
}
