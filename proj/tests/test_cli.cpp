#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hamcheck/corpus.hpp"
#include "hamcheck/render.hpp"

using namespace hamcheck;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "HAMCHECK_COLOR=0 " HAMCHECK_BIN " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture_path(const std::string& name) {
    return std::string(HAMCHECK_FIXTURE_DIR) + "/" + name + ".json";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bundled corpus meets every expectation") {
    auto outcomes = run_corpus();
    REQUIRE_FALSE(outcomes.empty());
    for (const auto& o : outcomes) {
        INFO(o.name);
        for (const auto& d : o.deviations) { INFO(d); }
        CHECK(o.ok());
    }
}

TEST_CASE("embedded corpus matches the fixture files on disk") {
    for (const auto& entry : corpus()) {
        INFO(entry.name);
        ProblemFile embedded = ProblemFile::parse(entry.json, entry.name);
        ProblemFile from_disk = ProblemFile::load(fixture_path(entry.name));
        CHECK(embedded.name == from_disk.name);
        // Same parsed content: compare rendered reports byte for byte.
        auto render_all = [](const ProblemFile& pf) {
            std::string out;
            try {
                out += report_to_json(check_hamiltonian(pf.op)).dump(2);
                out += report_to_json(check_problem_compat(pf, CompatOptions{false})).dump(2);
            } catch (const InputError& e) {
                out += std::string("input-error: ") + e.what();
            }
            return out;
        };
        CHECK(render_all(embedded) == render_all(from_disk));
    }
}

TEST_CASE("problem files accept a supplied connection and validate it") {
    // Levi-Civita data of g = diag(2u, 2/u), written out explicitly.
    std::string good = R"({
      "n": 2, "variables": ["u", "v"],
      "V": [["0", "1"], ["1/u^2", "0"]],
      "W": ["0", "-2*x"],
      "operator": {
        "kind": "ferapontov",
        "g": [["2*u", "0"], ["0", "2/u"]],
        "gamma": [[["1", "0"], ["0", "-1"]], [["0", "1"], ["-1/u^2", "0"]]],
        "f": ["0", "1"],
        "alpha": "2"
      }
    })";
    ProblemFile pf = ProblemFile::parse(good, "inline_gamma");
    CHECK(check_hamiltonian(pf.op).passed());
    CHECK(check_problem_compat(pf).passed());

    std::string mismatched = good;
    auto pos = mismatched.find("\"-1/u^2\"");
    mismatched.replace(pos, 8, "\"1/u^2\"");
    CHECK_THROWS_AS(ProblemFile::parse(mismatched, "inline_gamma_bad"), InputError);
}

TEST_CASE("report JSON round-trip is byte-exact") {
    auto entry = corpus().front();
    ProblemFile pf = ProblemFile::parse(entry.json, entry.name);
    CheckReport report = check_problem_compat(pf, CompatOptions{false});
    OrderedJson j1 = report_to_json(report);
    CheckReport reparsed = report_from_json(j1);
    OrderedJson j2 = report_to_json(reparsed);
    CHECK(j1.dump(2) == j2.dump(2));
    CHECK(reparsed.passed() == report.passed());
}

TEST_CASE("cli: exit codes distinguish pass, fail and input errors") {
    CHECK(run_cli("check-operator " + fixture_path("astigmatism_Q")).exit_code == 0);
    CHECK(run_cli("check-compat " + fixture_path("astigmatism_Q") + " --oracle").exit_code == 0);
    CHECK(run_cli("check-compat " + fixture_path("astigmatism_Q_perturbed") +
                  " --oracle").exit_code == 1);
    CHECK(run_cli("check-operator " + fixture_path("degenerate_metric")).exit_code == 2);
    CHECK(run_cli("check-compat " + fixture_path("degenerate_metric")).exit_code == 2);
    RunResult missing = run_cli("check-compat /nonexistent.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli: non-hamiltonian operator renders diagnosable failure") {
    RunResult r = run_cli("check-compat " + fixture_path("astigmatism_P_wrongf"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("killing-symmetric") != std::string::npos);
    CHECK(r.out.find("f-symmetry") != std::string::npos);
    CHECK(r.out.find("precondition failed") != std::string::npos);
}

TEST_CASE("cli: corpus command runs clean") {
    RunResult r = run_cli("corpus");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all expectations met") != std::string::npos);
}

TEST_CASE("cli: corpus --json lists every fixture with its outcome") {
    RunResult r = run_cli("corpus --json");
    CHECK(r.exit_code == 0);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j["overall"] == "pass");
    CHECK(j["fixtures"].size() == corpus().size());
    for (const auto& f : j["fixtures"]) {
        CHECK(f["ok"] == true);
        CHECK(f["deviations"].empty());
    }
}

TEST_CASE("cli: output is deterministic byte-for-byte") {
    std::string args = "check-compat " + fixture_path("exam1_B") + " --oracle --json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult t1 = run_cli("check-compat " + fixture_path("chaplygin_FM"));
    RunResult t2 = run_cli("check-compat " + fixture_path("chaplygin_FM"));
    CHECK(t1.out == t2.out);
}

TEST_CASE("cli: oracle subcommand reports residual classes") {
    RunResult ok = run_cli("oracle " + fixture_path("exam1_B"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[pass]") != std::string::npos);

    RunResult bad = run_cli("oracle " + fixture_path("astigmatism_Q_perturbed") + " --json");
    CHECK(bad.exit_code == 1);
    OrderedJson j = OrderedJson::parse(bad.out);
    CHECK(j["oracle"]["verdict"] == "fail");
    bool saw_px = false;
    for (const auto& e : j["oracle"]["nonzero"])
        if (e["class"] == "p_x") saw_px = true;
    CHECK(saw_px);
}

TEST_CASE("cli: check-operator --json carries the condition rows") {
    RunResult r = run_cli("check-operator " + fixture_path("chaplygin_FM_wrongc") + " --json");
    CHECK(r.exit_code == 1);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j["operator"]["overall"] == "fail");
    bool saw = false;
    for (const auto& cnd : j["operator"]["conditions"])
        if (cnd["name"] == "constant-curvature" && cnd["verdict"] == "fail") saw = true;
    CHECK(saw);
}

TEST_CASE("cli: list-examples shows every bundled fixture") {
    RunResult r = run_cli("list-examples");
    CHECK(r.exit_code == 0);
    for (const auto& entry : corpus())
        CHECK(r.out.find(entry.name) != std::string::npos);
}

TEST_CASE("cli: help text is available") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check-compat") != std::string::npos);
    CHECK(r.out.find("corpus") != std::string::npos);
}

TEST_CASE("cli: oracle agreement row") {
    RunResult r = run_cli("check-compat " + fixture_path("astigmatism_Q_perturbed") +
                          " --oracle --json");
    CHECK(r.exit_code == 1);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j["oracle"]["agreement"] == "agree");
    CHECK(j["oracle"]["verdict"] == "fail");

    RunResult ok = run_cli("check-compat " + fixture_path("chaplygin_FM") + " --oracle --json");
    OrderedJson jo = OrderedJson::parse(ok.out);
    CHECK(jo["oracle"]["agreement"] == "agree");
    CHECK(jo["oracle"]["verdict"] == "pass");
}
