#include <catch2/catch_amalgamated.hpp>

#include "ottr/diff.hpp"
#include "support.hpp"

using namespace ottr;

TEST_CASE("unified diff of identical content is empty") {
    CHECK(diff::unified_diff("a\nb\n", "a\nb\n", "a/x", "b/x") == "");
}

TEST_CASE("unified diff basic shape") {
    std::string old_text = "one\ntwo\nthree\n";
    std::string new_text = "one\n2\nthree\n";
    std::string d = diff::unified_diff(old_text, new_text, "a/f.txt", "b/f.txt");
    CHECK(d == "--- a/f.txt\n"
               "+++ b/f.txt\n"
               "@@ -1,3 +1,3 @@\n"
               " one\n"
               "-two\n"
               "+2\n"
               " three\n");
}

TEST_CASE("add from empty renders full-file hunk") {
    std::string d = diff::unified_diff("", "x\ny\n", "/dev/null", "b/new.txt");
    CHECK(d == "--- /dev/null\n"
               "+++ b/new.txt\n"
               "@@ -0,0 +1,2 @@\n"
               "+x\n"
               "+y\n");
}

TEST_CASE("missing trailing newline is tracked") {
    std::string d = diff::unified_diff("a\n", "a", "a/f", "b/f");
    CHECK(d.find("\\ No newline at end of file") != std::string::npos);
    CHECK(diff::apply_unified(d, "a\n") == "a");
}

TEST_CASE("apply rejects mismatched context") {
    std::string d = diff::unified_diff("one\ntwo\n", "one\n2\n", "a/f", "b/f");
    CHECK_THROWS_AS(diff::apply_unified(d, "one\nTWO-EDITED\n"), diff::ApplyConflict);
}

TEST_CASE("parse_unified round-trips rendering") {
    std::string old_text = "a\nb\nc\nd\ne\nf\ng\nh\ni\nj\nk\n";
    std::string new_text = "a\nB\nc\nd\ne\nf\ng\nh\ni\nJ\nk\n";
    std::string d = diff::unified_diff(old_text, new_text, "a/f", "b/f");
    auto fd = diff::parse_unified(d);
    CHECK(fd.old_name == "a/f");
    CHECK(fd.hunks.size() == 2);  // separated changes, context 3
    CHECK(diff::render_unified(fd) == d);
}

TEST_CASE("diff/apply round-trip on random content") {
    testsupport::Rng rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        std::string a = testsupport::rand_text(rng);
        std::string b = testsupport::rand_text(rng);
        std::string d = diff::unified_diff(a, b, "a/f", "b/f");
        if (a == b) {
            CHECK(d.empty());
            continue;
        }
        INFO("a=[" << a << "] b=[" << b << "] d=[" << d << "]");
        REQUIRE(diff::apply_unified(d, a) == b);
    }
}

TEST_CASE("mutation round-trip keeps neighbourhoods intact") {
    // Simulates the sync use case: small edits to a larger file.
    testsupport::Rng rng(7);
    std::vector<std::string> base_lines;
    for (int i = 0; i < 60; ++i) base_lines.push_back("line " + std::to_string(i));
    std::string base = join_lines(base_lines);
    for (int iter = 0; iter < 100; ++iter) {
        auto lines = base_lines;
        int edits = testsupport::rand_int(rng, 1, 5);
        for (int e = 0; e < edits; ++e) {
            int idx = testsupport::rand_int(rng, 0, static_cast<int>(lines.size()) - 1);
            switch (testsupport::rand_int(rng, 0, 2)) {
                case 0: lines[idx] = "edited " + std::to_string(iter); break;
                case 1: lines.erase(lines.begin() + idx); break;
                case 2: lines.insert(lines.begin() + idx, "inserted " + std::to_string(e)); break;
            }
        }
        std::string target = join_lines(lines);
        std::string d = diff::unified_diff(base, target, "a/f", "b/f");
        REQUIRE(diff::apply_unified(d, base) == target);
    }
}
