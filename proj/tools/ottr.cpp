// ottr: compile a plain-text course into an HTML book site, a Leanpub
// manuscript, and a Coursera-style embed bundle, from one source tree.

#include <cstdlib>
#include <iostream>
#include <string>
#include <unistd.h>
#include <vector>

#include <CLI11.hpp>

#include "ottr/http.hpp"
#include "ottr/publish.hpp"
#include "ottr/scaffold.hpp"
#include "ottr/sync.hpp"

namespace {

namespace fs = ottr::fs;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

ottr::fs::path course_root_from_config(const std::string& config) {
    ottr::fs::path p(config);
    if (ottr::fs::is_directory(p)) return p;
    if (p.filename() == ottr::kManifestFileName)
        return p.has_parent_path() ? p.parent_path() : ottr::fs::path(".");
    return p;
}

std::optional<int64_t> env_epoch() {
    if (const char* env = std::getenv("OTTR_BUILD_EPOCH")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw ottr::ConfigError("OTTR_BUILD_EPOCH is not an integer: " + std::string(env));
        }
    }
    return std::nullopt;
}

std::unique_ptr<ottr::SlideResolver> make_resolver() {
    if (const char* root = std::getenv("OTTR_SLIDES_ROOT"))
        return std::make_unique<ottr::OfflineSlideResolver>(root);
    return std::make_unique<ottr::GoogleSlideResolver>();
}

// Summary table plus overall line; detail sections stay in the report file.
std::string report_summary(const ottr::CheckReport& report) {
    std::string full = ottr::render_report(report);
    size_t cut = full.find("\n## ");
    std::string summary = cut == std::string::npos ? full : full.substr(0, cut);
    // drop the trailing timestamp block from the console view
    if (size_t ts = summary.find("\nStarted: "); ts != std::string::npos)
        summary = summary.substr(0, ts + 1);
    if (isatty(STDOUT_FILENO)) {
        // light touch: color the overall verdict only
        size_t pass = summary.find("Overall: PASS");
        size_t fail = summary.find("Overall: FAIL");
        if (pass != std::string::npos)
            summary.replace(pass, 13, "Overall: \033[32mPASS\033[0m");
        else if (fail != std::string::npos)
            summary.replace(fail, 13, "Overall: \033[31mFAIL\033[0m");
    }
    return summary;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_new(const std::string& dest, std::string title) {
    if (title.empty()) {
        title = ottr::fs::path(dest).filename().string();
        if (title.empty()) title = "New Course";
    }
    auto created = ottr::scaffold_course(dest, title);
    for (const auto& rel : created) std::cout << dest << "/" << rel << "\n";
    std::cerr << "created " << created.size() << " files; next: ottr build --config " << dest
              << "\n";
    return kExitOk;
}

struct UrlFlags {
    int timeout = 10;
    int retries = 1;
    int parallelism = 8;
};

int cmd_build(const std::string& config, const std::vector<std::string>& target_names,
              const std::string& out, bool force, std::optional<int64_t> timestamp,
              const UrlFlags& url_flags) {
    ottr::fs::path root = course_root_from_config(config);

    ottr::RenderPlan plan;
    plan.force = force;
    if (!out.empty()) plan.output_root = out;
    plan.fixed_timestamp = timestamp ? timestamp : env_epoch();
    for (const auto& name : target_names) {
        if (name == "all") {
            plan.targets.clear();
            break;
        }
        auto target = ottr::target_from_name(name);
        if (!target) throw ottr::ConfigError("unknown target: " + name);
        plan.targets.push_back(*target);
    }

    auto resolver = make_resolver();
    ottr::RealUrlProber prober(url_flags.timeout, url_flags.retries);
    auto result = ottr::build(root, plan, *resolver, prober);

    std::cout << report_summary(result.report);
    if (result.rendered) {
        ottr::fs::path output_root = plan.output_root.empty() ? root / "_output" : plan.output_root;
        std::cout << "\n";
        for (const auto& bundle : result.bundles)
            std::cout << (output_root / std::string(ottr::target_name(bundle.target))).string()
                      << " (" << bundle.files.size() << " files, entrypoint "
                      << bundle.entrypoint << ")\n";
    } else {
        std::cerr << "build gated: checks failed, no bundles written (use --force to override)\n";
    }
    std::cerr << "report: " << (root / "reports/check_report.md").string() << "\n";
    return result.report.failed() ? kExitCheckFailures : kExitOk;
}

int cmd_check(const std::string& config, const std::vector<std::string>& only,
              const UrlFlags& url_flags) {
    ottr::fs::path root = course_root_from_config(config);

    std::vector<ottr::CheckKind> only_checks;
    for (const auto& item : only) {
        for (const auto& name : ottr::split_csv(item)) {
            auto check = ottr::check_from_name(name);
            if (!check) throw ottr::ConfigError("unknown check: " + name);
            only_checks.push_back(*check);
        }
    }

    auto resolver = make_resolver();
    ottr::Course course = ottr::load_course(root, *resolver);
    print_warnings(course.warnings);
    if (!only_checks.empty()) {
        ottr::CheckToggles narrowed;
        for (ottr::CheckKind c : ottr::all_checks()) {
            bool requested = std::find(only_checks.begin(), only_checks.end(), c) !=
                             only_checks.end();
            narrowed.set(c, requested && course.manifest.checks.enabled(c));
        }
        course.manifest.checks = narrowed;
    }

    ottr::RealUrlProber prober(url_flags.timeout, url_flags.retries);
    ottr::RunOptions options;
    options.url.parallelism = url_flags.parallelism;
    options.timestamp = env_epoch();
    auto report = ottr::run_checks(course, prober, options);

    ottr::write_file_atomic(root / "reports/check_report.md", ottr::render_report(report));
    ottr::write_file_atomic(root / "reports/check_report.json",
                            ottr::report_json(report).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n");

    std::cout << report_summary(report);
    std::cerr << "report: " << (root / "reports/check_report.md").string() << "\n";
    return report.failed() ? kExitCheckFailures : kExitOk;
}

int cmd_quiz_convert(const std::string& input, const std::string& to) {
    if (to != "coursera") throw ottr::ConfigError("unsupported conversion target: " + to);
    auto raw = ottr::read_file_if_exists(input);
    if (!raw) throw ottr::IoError("cannot read quiz file: " + input);
    auto parsed = ottr::parse_quiz(*raw, input);
    for (const auto& d : parsed.diagnostics)
        if (d.severity == ottr::Severity::Warning) std::cerr << d.format() << "\n";
    if (!parsed.ok()) {
        for (const auto& d : parsed.diagnostics)
            if (d.severity == ottr::Severity::Error) std::cerr << d.format() << "\n";
        return kExitCheckFailures;
    }
    std::cout << ottr::convert_to_coursera(parsed.quiz).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) << "\n";
    return kExitOk;
}

int cmd_quiz_lint(const std::string& input) {
    auto raw = ottr::read_file_if_exists(input);
    if (!raw) throw ottr::IoError("cannot read quiz file: " + input);
    auto parsed = ottr::parse_quiz(*raw, input);
    for (const auto& d : parsed.diagnostics) std::cout << d.format() << "\n";
    if (parsed.ok())
        std::cerr << input << ": ok (" << parsed.quiz.questions.size() << " questions)\n";
    return parsed.ok() ? kExitOk : kExitCheckFailures;
}

// Dry runs compute the patchset and save it for review; --apply replays
// the saved patchset (computing fresh only if none was saved), so edits
// made after review are caught as staleness instead of silently merged.
int cmd_sync(const std::string& config, const std::string& upstream, bool apply_mode) {
    ottr::fs::path root = course_root_from_config(config);
    ottr::SyncOptions options;
    if (!upstream.empty()) options.upstream_override = upstream;
    options.timestamp = env_epoch();

    fs::path json_path = root / "patchset.json";
    fs::path diff_path = root / "patchset.diff";

    ottr::PatchSet patchset;
    bool from_saved = false;
    if (apply_mode) {
        if (auto saved = ottr::read_file_if_exists(json_path)) {
            patchset = ottr::patchset_from_json(nlohmann::json::parse(*saved));
            from_saved = true;
        }
    }
    if (!from_saved) {
        patchset = ottr::compute_patchset(root, options);
        ottr::write_file_atomic(json_path, ottr::patchset_json(patchset).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n");
        ottr::write_file_atomic(diff_path, ottr::patchset_diff_text(patchset));
    }

    if (patchset.empty()) {
        std::cout << "0 changes\n";
        return kExitOk;
    }
    auto report = ottr::apply_patchset(patchset, root,
                                       apply_mode ? ottr::ApplyMode::Apply
                                                  : ottr::ApplyMode::DryRun);
    for (const auto& [path, action] : report.changes)
        std::cout << ottr::patch_action_name(action) << "  " << path << "\n";
    std::cout << report.changes.size() << (apply_mode ? " changes applied\n" : " changes pending\n");
    if (apply_mode) {
        std::error_code ec;
        fs::remove(json_path, ec);
        fs::remove(diff_path, ec);
    } else {
        std::cerr << "dry run: no files modified; patchset saved to " << json_path.string()
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ottr: build a plain-text course for site, Leanpub, and Coursera"};
    app.require_subcommand(1);

    std::string config = "_ottr.yml";
    UrlFlags url_flags;

    // new
    auto* cmd_new_p = app.add_subcommand("new", "Scaffold a starter course");
    std::string new_dest, new_title;
    cmd_new_p->add_option("dest", new_dest, "Directory to create")->required();
    cmd_new_p->add_option("--title", new_title, "Course title");

    // build
    auto* cmd_build_p = app.add_subcommand("build", "Validate and render every enabled target");
    std::vector<std::string> build_targets{"all"};
    std::string build_out;
    bool build_force = false;
    std::optional<int64_t> build_timestamp;
    cmd_build_p->add_option("--config", config, "Course root or manifest path");
    cmd_build_p->add_option("--target", build_targets,
                            "site|leanpub|coursera|all (repeatable)");
    cmd_build_p->add_option("--out", build_out, "Output directory (default <root>/_output)");
    cmd_build_p->add_flag("--force", build_force, "Render even if checks fail");
    cmd_build_p->add_option("--timestamp", build_timestamp,
                            "Fixed epoch seconds for reproducible builds");
    cmd_build_p->add_option("--url-timeout", url_flags.timeout, "URL probe timeout, seconds");
    cmd_build_p->add_option("--url-retries", url_flags.retries, "URL probe retries");
    cmd_build_p->add_option("--url-parallelism", url_flags.parallelism,
                            "Concurrent URL probes");

    // check
    auto* cmd_check_p = app.add_subcommand("check", "Run the validation suite only");
    std::vector<std::string> check_only;
    cmd_check_p->add_option("--config", config, "Course root or manifest path");
    cmd_check_p->add_option("--only", check_only,
                            "Comma-separated subset: spelling,urls,quizzes,alt_text");
    cmd_check_p->add_option("--url-timeout", url_flags.timeout, "URL probe timeout, seconds");
    cmd_check_p->add_option("--url-retries", url_flags.retries, "URL probe retries");
    cmd_check_p->add_option("--url-parallelism", url_flags.parallelism,
                            "Concurrent URL probes");

    // quiz
    auto* cmd_quiz_p = app.add_subcommand("quiz", "Quiz utilities");
    cmd_quiz_p->require_subcommand(1);
    auto* quiz_convert_p = cmd_quiz_p->add_subcommand("convert", "Convert one quiz file");
    std::string quiz_input, quiz_to = "coursera";
    quiz_convert_p->add_option("input", quiz_input, "Quiz source file")->required();
    quiz_convert_p->add_option("--to", quiz_to, "Conversion target (coursera)");
    auto* quiz_lint_p = cmd_quiz_p->add_subcommand("lint", "Lint one quiz file");
    std::string lint_input;
    quiz_lint_p->add_option("input", lint_input, "Quiz source file")->required();

    // sync
    auto* cmd_sync_p = app.add_subcommand("sync", "Pull template updates from the upstream");
    std::string sync_upstream;
    bool sync_dry = false, sync_apply = false;
    cmd_sync_p->add_option("--config", config, "Course root or manifest path");
    cmd_sync_p->add_option("--upstream", sync_upstream,
                           "Upstream template path (default: manifest sync.upstream)");
    auto* dry_flag = cmd_sync_p->add_flag("--dry-run", sync_dry, "List changes only (default)");
    cmd_sync_p->add_flag("--apply", sync_apply, "Apply the patchset")->excludes(dry_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_new_p->parsed()) return cmd_new(new_dest, new_title);
        if (cmd_build_p->parsed())
            return cmd_build(config, build_targets, build_out, build_force, build_timestamp,
                             url_flags);
        if (cmd_check_p->parsed()) return cmd_check(config, check_only, url_flags);
        if (cmd_quiz_p->parsed()) {
            if (quiz_convert_p->parsed()) return cmd_quiz_convert(quiz_input, quiz_to);
            return cmd_quiz_lint(lint_input);
        }
        if (cmd_sync_p->parsed()) return cmd_sync(config, sync_upstream, sync_apply);
    } catch (const ottr::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ottr::StaleDownstream& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ottr::HashMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ottr::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
