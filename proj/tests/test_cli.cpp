#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        std::string tmpl = (fs::temp_directory_path() / "slideocam_cli_XXXXXX").string();
        if (mkdtemp(tmpl.data()) == nullptr)
            throw std::runtime_error("cannot create scratch directory");
        return fs::path(tmpl);
    }();
    return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const fs::path err_path = scratch_dir() / "stderr.txt";
    const std::string cmd = std::string("\"") + SLIDEOCAM_CLI_PATH + "\" " + args
        + " >\"" + out_path.string() + "\" 2>\"" + err_path.string() + "\"";
    const int status = std::system(cmd.c_str());
    if (status == -1)
        throw std::runtime_error("std::system failed");
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (const char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("--version prints the tool identity") {
    const RunResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("slideocam") != std::string::npos);
}

TEST_CASE("invoking without a subcommand fails") {
    CHECK(run_cli("").exit_code != 0);
}

TEST_CASE("analyze emits a kinetostatic report") {
    const fs::path cfg = write_scratch("compromise3.json", R"({"eta": 0.37, "cams": 3})");
    const RunResult r = run_cli("analyze --config \"" + cfg.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["kind"] == "kinetostatics");
    CHECK(doc["params"]["a4_mm"].get<double>() == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(doc["report"]["service_factor_pct"].get<double>()
          == doctest::Approx(88.029197830461).epsilon(1e-9));
    CHECK(doc["report"]["v_L_max_um"].get<double>()
          == doctest::Approx(9.7623323293207).epsilon(1e-9));
}

TEST_CASE("--cams overrides the configured cam count") {
    const fs::path cfg = write_scratch("compromise2.json", R"({"eta": 0.37})");
    const RunResult r = run_cli("analyze --config \"" + cfg.string() + "\" --cams 3");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["params"]["cams"] == 3);
    CHECK(doc["report"]["service_factor_pct"].get<double>()
          == doctest::Approx(88.029197830461).epsilon(1e-9));
}

TEST_CASE("check reports feasibility through the exit code") {
    const fs::path good = write_scratch("good.json", R"({"eta": 0.37})");
    CHECK(run_cli("check --config \"" + good.string() + "\"").exit_code == 0);

    // Non-convex design: the report is still written, the exit code flags it.
    const fs::path bad = write_scratch("nonconvex.json", R"({"eta": 0.2, "a4_mm": 9})");
    const fs::path report = scratch_dir() / "check_report.json";
    const RunResult r = run_cli("check --config \"" + bad.string()
                                + "\" --out \"" + report.string() + "\"");
    CHECK(r.exit_code == 3);
    REQUIRE(fs::exists(report));
    const json doc = json::parse(slurp(report));
    CHECK(doc["report"]["feasible"] == false);
    CHECK(doc["report"]["g"]["g1"].get<double>() > 0.0);
}

TEST_CASE("profile samples the pitch curve even for non-convex designs") {
    const fs::path cfg = write_scratch("nonconvex2.json", R"({"eta": 0.2, "a4_mm": 9})");
    const RunResult pitch = run_cli("profile --config \"" + cfg.string()
                                    + "\" --curve pitch --samples 64");
    CHECK(pitch.exit_code == 0);
    CHECK(count_lines(pitch.out) == 65);  // header + 64 samples

    const RunResult cam = run_cli("profile --config \"" + cfg.string() + "\" --curve cam");
    CHECK(cam.exit_code == 3);
    CHECK(cam.err.find("convexity") != std::string::npos);
}

TEST_CASE("error classes map to distinct exit codes") {
    CHECK(run_cli("analyze --config /no/such/file.json").exit_code == 4);

    const fs::path unknown = write_scratch("unknown.json", R"({"eta": 0.5, "extra": 1})");
    CHECK(run_cli("analyze --config \"" + unknown.string() + "\"").exit_code == 2);

    const fs::path big_roller = write_scratch("big_roller.json", R"({"eta": 0.5, "a4_mm": 26})");
    CHECK(run_cli("check --config \"" + big_roller.string() + "\"").exit_code == 3);

    const fs::path good = write_scratch("good2.json", R"({"eta": 0.37})");
    CHECK(run_cli("analyze --config \"" + good.string()
                  + "\" --out /nonexistent-dir-slideocam/out.json").exit_code == 4);
}

TEST_CASE("sweep emits one row per eccentricity in descending order") {
    const fs::path cfg = write_scratch("sweep.json", R"({"eta": 0.5})");
    const RunResult r = run_cli("sweep --config \"" + cfg.string()
                                + "\" --eta-list 0.4,0.5,0.37");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["kind"] == "sweep");
    REQUIRE(doc["report"]["rows"].size() == 3);
    CHECK(doc["report"]["rows"][0][0] == 0.5);
    CHECK(doc["report"]["rows"][1][0] == 0.4);
    CHECK(doc["report"]["rows"][2][0] == 0.37);
}

TEST_CASE("optimize narrows onto the interval optimum") {
    const fs::path cfg = write_scratch("opt.json", R"({"eta": 0.5})");
    const RunResult r = run_cli("optimize --config \"" + cfg.string()
                                + "\" --eta-min 0.49 --eta-max 0.5");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["kind"] == "optimum");
    CHECK(doc["report"]["eta"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));

    const RunResult infeasible = run_cli("optimize --config \"" + cfg.string()
                                         + "\" --eta-min 0.2 --eta-max 0.21");
    CHECK(infeasible.exit_code == 3);
}

TEST_CASE("plot writes SVG and refuses degenerate sampling before writing") {
    const fs::path cfg = write_scratch("plot.json", R"({"eta": 0.37, "cams": 3})");
    const fs::path svg = scratch_dir() / "pressure.svg";
    const RunResult r = run_cli("plot --config \"" + cfg.string()
                                + "\" --series pressure --out \"" + svg.string() + "\"");
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(svg));
    CHECK(slurp(svg).rfind("<svg", 0) == 0);

    const fs::path absent = scratch_dir() / "never_written.svg";
    const RunResult bad = run_cli("plot --config \"" + cfg.string()
                                  + "\" --samples 1 --out \"" + absent.string() + "\"");
    CHECK(bad.exit_code == 2);
    CHECK_FALSE(fs::exists(absent));
}
