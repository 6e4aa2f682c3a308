#include <catch2/catch_amalgamated.hpp>

#include "ottr/core.hpp"
#include "support.hpp"

using namespace ottr;

TEST_CASE("split_lines handles terminators") {
    CHECK(split_lines("") == std::vector<std::string>{});
    CHECK(split_lines("a") == std::vector<std::string>{"a"});
    CHECK(split_lines("a\n") == std::vector<std::string>{"a"});
    CHECK(split_lines("a\nb") == std::vector<std::string>{"a", "b"});
    CHECK(split_lines("a\n\nb\n") == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("normalize_newlines folds CRLF and CR") {
    CHECK(normalize_newlines("a\r\nb\rc\n") == "a\nb\nc\n");
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything/with/slashes"));
    CHECK(glob_match("quizzes/*", "quizzes/quiz_01.md"));
    CHECK_FALSE(glob_match("quizzes/*", "chapters/quiz_01.md"));
    CHECK(glob_match("*example.org*", "https://example.org/page"));
    CHECK(glob_match("file?.md", "file1.md"));
    CHECK_FALSE(glob_match("file?.md", "file12.md"));
    CHECK(glob_match("[0-9][0-9]-*.md", "01-intro.md"));
    CHECK_FALSE(glob_match("[!0-9]*", "1abc"));
    CHECK(glob_match("a\\*b", "a*b"));
    CHECK_FALSE(glob_match("a\\*b", "axb"));
}

TEST_CASE("glob validation") {
    CHECK_FALSE(glob_error("*.md").has_value());
    CHECK(glob_error("[abc").has_value());
    CHECK(glob_error("foo\\").has_value());
}

TEST_CASE("path containment") {
    CHECK(path_stays_inside_root("chapters/01.md"));
    CHECK(path_stays_inside_root("./a/b"));
    CHECK(path_stays_inside_root("a/../b"));
    CHECK_FALSE(path_stays_inside_root("../outside.md"));
    CHECK_FALSE(path_stays_inside_root("a/../../b"));
    CHECK_FALSE(path_stays_inside_root("/etc/passwd"));
    CHECK_FALSE(path_stays_inside_root(""));
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("utf-8 validation") {
    CHECK(is_valid_utf8("plain ascii"));
    CHECK(is_valid_utf8("caf\xc3\xa9"));
    CHECK(is_valid_utf8("\xe2\x82\xac"));          // euro sign
    CHECK_FALSE(is_valid_utf8("\xc3"));            // truncated sequence
    CHECK_FALSE(is_valid_utf8("\xff\xfe"));        // invalid lead bytes
    CHECK_FALSE(is_valid_utf8("\xc0\xaf"));        // overlong encoding
    CHECK_FALSE(is_valid_utf8("\xed\xa0\x80"));    // surrogate half
}

TEST_CASE("base64 round-trips arbitrary bytes") {
    CHECK(base64_encode("") == "");
    CHECK(base64_encode("f") == "Zg==");
    CHECK(base64_encode("fo") == "Zm8=");
    CHECK(base64_encode("foo") == "Zm9v");
    CHECK(base64_decode("Zm9v") == "foo");
    CHECK_FALSE(base64_decode("not!!valid").has_value());

    testsupport::Rng rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        std::string data;
        int n = testsupport::rand_int(rng, 0, 64);
        for (int i = 0; i < n; ++i)
            data += static_cast<char>(testsupport::rand_int(rng, 0, 255));
        REQUIRE(base64_decode(base64_encode(data)) == data);
    }
}

TEST_CASE("atomic write and tree hash stability") {
    testsupport::TempDir dir("core");
    write_file_atomic(dir / "a.txt", "hello\n");
    write_file(dir / "sub/b.txt", "world\n");
    CHECK(read_file(dir / "a.txt") == "hello\n");

    auto h1 = tree_hash(dir.path());
    auto h2 = tree_hash(dir.path());
    CHECK(h1 == h2);

    write_file(dir / "sub/b.txt", "changed\n");
    CHECK(tree_hash(dir.path()) != h1);

    auto files = list_files_recursive(dir.path());
    CHECK(files == std::vector<std::string>{"a.txt", "sub/b.txt"});
}
