#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "copieslab/io.hpp"
#include "copieslab/report.hpp"
#include "copieslab/structure.hpp"

using namespace copieslab;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const char* binary = std::getenv("COPIESLAB_CLI");
    REQUIRE_MESSAGE(binary != nullptr, "COPIESLAB_CLI must point at the built binary");
    const std::string command = "\"" + std::string(binary) + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), output};
}

// Scratch directory torn down with the test case.
struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::current_path() / "cli_scratch") {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const std::string full = (path / name).string();
        write_text_file(full, text);
        return full;
    }
    std::string name(const std::string& file_name) const { return (path / file_name).string(); }
};

Json report_of(const RunResult& r) { return Json::parse(r.output); }

const std::string kChain2 = "language 2\ndomain 2\nrel 0 { (0,1) }\n";
const std::string kPoint = "language 2\ndomain 1\nrel 0 { }\n";
const std::string kLoopedEdge = "language 2\ndomain 2\nrel 0 { (0,0) (0,1) }\n";
const std::string kVee = "poset 3\nle 0 2\nle 1 2\n";

}  // namespace

TEST_CASE("version, help and bad usage") {
    const RunResult version = run_cli("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.output.find("copieslab") != std::string::npos);

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);                        // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);              // unknown subcommand
    CHECK(run_cli("collapse --arities 2").exit_code == 2);    // missing --size
    CHECK(run_cli("rigid --size 0").exit_code == 2);          // rejected by the library
    CHECK(run_cli("corpus --arities 2 --size 5").exit_code == 2);  // over the bit budget
    const RunResult budget = run_cli("corpus --arities 2 --size 5");
    CHECK(budget.output.find("budget") != std::string::npos);
}

TEST_CASE("malformed input files carry path and line") {
    TempDir dir;
    const std::string bad = dir.file("bad.txt", "language 2\ndomain 2\nrel 0 { (0,7) }\n");
    const RunResult r = run_cli("emb " + bad + " " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("bad.txt:3:") != std::string::npos);

    const std::string bad_poset = dir.file("bad_poset.txt", "poset 2\nle 0 9\n");
    const RunResult p = run_cli("homog " + bad_poset);
    CHECK(p.exit_code == 2);
    CHECK(p.output.find("bad_poset.txt:2:") != std::string::npos);

    CHECK(run_cli("aut " + dir.name("missing.txt")).exit_code == 2);
}

TEST_CASE("embedding family subcommands") {
    TempDir dir;
    const std::string chain = dir.file("chain.txt", kChain2);
    const std::string point = dir.file("point.txt", kPoint);

    const Json aut = report_of(run_cli("aut " + chain));
    CHECK(aut["summary"]["status"] == "pass");
    CHECK(aut["checks"][0]["witnesses"]["count"] == 1);

    const Json emb = report_of(run_cli("emb " + point + " " + chain));
    CHECK(emb["checks"][0]["witnesses"]["maps"] == Json::parse("[[0],[1]]"));

    const Json iso = report_of(run_cli("iso " + chain + " " + point));
    CHECK(iso["checks"][0]["witnesses"]["isomorphic"] == false);
    CHECK(iso["summary"]["status"] == "pass");  // an empty list is still sound

    const std::string dot = dir.name("copies.dot");
    const Json copies = report_of(run_cli("copies " + point + " " + chain + " --dot " + dot));
    CHECK(copies["checks"][0]["witnesses"]["subsets"] == Json::parse("[[0],[1]]"));
    CHECK(read_text_file(dot).find("digraph copies") != std::string::npos);

    const Json green = report_of(run_cli("green " + chain));
    CHECK(green["summary"]["status"] == "pass");
    CHECK(green["checks"][0]["witnesses"]["identity_class"] == 0);
}

TEST_CASE("order subcommands on the three-point vee") {
    TempDir dir;
    const std::string vee = dir.file("vee.txt", kVee);

    const Json sq = report_of(run_cli("sq " + vee));
    CHECK(sq["summary"]["status"] == "pass");
    CHECK(sq["checks"][0]["witnesses"]["input_separative"] == true);
    CHECK(sq["checks"][0]["witnesses"]["classes"] == Json::parse("[[0],[1],[2]]"));

    const Json ro = report_of(run_cli("ro " + vee));
    CHECK(ro["summary"]["status"] == "pass");
    CHECK(ro["checks"][0]["witnesses"]["atom_count"] == 2);
    CHECK(ro["checks"][0]["witnesses"]["carrier_size"] == 4);
    CHECK(ro["checks"][0]["witnesses"]["homogeneous"] == false);

    const Json homog = report_of(run_cli("homog " + vee));
    CHECK(homog["summary"]["status"] == "pass");
    CHECK(homog["checks"][0]["witnesses"]["quasi_homogeneous"] == false);
}

TEST_CASE("classification by files and by masks") {
    TempDir dir;
    const std::string chain = dir.file("chain.txt", kChain2);
    const Json by_file = report_of(run_cli("classify " + chain + " " + chain));
    CHECK(by_file["summary"]["status"] == "pass");
    CHECK(by_file["checks"][0]["witnesses"]["relations"] ==
          Json::parse("[true,true,true,true,true,true,true,true,true,true,true,true]"));

    const Json by_mask =
        report_of(run_cli("classify --arities 2 --size 2 --x-mask 0 --y-mask 15"));
    CHECK(by_mask["checks"][0]["witnesses"]["relations"] ==
          Json::parse("[false,false,false,false,true,false,true,false,true,false,true,true]"));
    // The echoed structures round-trip through the parser.
    const Structure x = parse_structure(
        by_mask["checks"][0]["witnesses"]["x_text"].get<std::string>());
    CHECK(x.relations[0].empty());

    CHECK(run_cli("classify --arities 2 --size 2 --x-mask 0").exit_code == 2);
}

TEST_CASE("corpus generation and the content-hashed cache") {
    TempDir dir;
    const Json plain = report_of(run_cli("corpus --arities 2 --size 2"));
    CHECK(plain["checks"][0]["witnesses"]["count"] == 16);
    CHECK(plain["checks"][0]["witnesses"]["cache"] == "disabled");

    const Json orbits = report_of(run_cli("corpus --arities 2 --size 2 --up-to-iso"));
    CHECK(orbits["checks"][0]["witnesses"]["count"] == 10);

    const Json unary = report_of(run_cli("corpus --arities 1 --size 2 --up-to-iso"));
    CHECK(unary["checks"][0]["witnesses"]["count"] == 3);
    CHECK(unary["checks"][0]["witnesses"]["multiplicities"] == Json::parse("[1,2,1]"));

    const std::string cache = dir.name("cache");
    const std::string args = "corpus --arities 2 --size 2 --cache " + cache;
    CHECK(report_of(run_cli(args))["checks"][0]["witnesses"]["cache"] == "miss");
    CHECK(report_of(run_cli(args))["checks"][0]["witnesses"]["cache"] == "hit");

    // Corruption is detected and repaired, never trusted.
    const std::string entry = cache + "/corpus_a2_s2_all.json";
    Json poisoned = Json::parse(read_text_file(entry));
    poisoned["masks"][0] = 13;
    write_text_file(entry, poisoned.dump(2) + "\n");
    CHECK(report_of(run_cli(args))["checks"][0]["witnesses"]["cache"] == "rejected");
    CHECK(report_of(run_cli(args))["checks"][0]["witnesses"]["cache"] == "hit");

    write_text_file(entry, "not json at all");
    CHECK(report_of(run_cli(args))["checks"][0]["witnesses"]["cache"] == "rejected");
}

TEST_CASE("hierarchy and collapse reports") {
    TempDir dir;
    const std::string dot = dir.name("collapse.dot");
    const RunResult collapse = run_cli("collapse --arities 2 --size 3 --dot " + dot);
    CHECK(collapse.exit_code == 0);
    const Json report = report_of(collapse);
    CHECK(report["summary"]["status"] == "pass");
    CHECK(report["checks"][0]["witnesses"]["equal_groups"] ==
          Json::parse("[[0],[1,2,3,5,7,9],[4,6,8,10,11]]"));
    const std::string diagram = read_text_file(dot);
    CHECK(diagram.find("g0 -> g1") != std::string::npos);
    CHECK(diagram.find("g1 -> g2") != std::string::npos);
    CHECK(diagram.find("g0 -> g2") == std::string::npos);

    const Json hierarchy = report_of(run_cli("hierarchy --arities 2 --size 2 --jobs 2"));
    CHECK(hierarchy["summary"]["status"] == "pass");
    bool saw_proper_a = false;
    for (const Json& check : hierarchy["checks"])
        if (check["name"] == "edge-a") saw_proper_a = check["witnesses"]["status"] == "proper";
    CHECK(saw_proper_a);
}

TEST_CASE("reports are byte-identical across reruns") {
    TempDir dir;
    const std::string first = dir.name("first.json");
    const std::string second = dir.name("second.json");
    CHECK(run_cli("hierarchy --arities 2 --size 2 --seed 9 --json " + first).exit_code == 0);
    CHECK(run_cli("hierarchy --arities 2 --size 2 --seed 9 --out " + second).exit_code == 0);
    const Json a = Json::parse(read_text_file(first));
    const Json b = Json::parse(read_text_file(second));
    CHECK(strip_volatile(a) == strip_volatile(b));
    CHECK(render_report(strip_volatile(a)) == render_report(strip_volatile(b)));
    CHECK(a.contains("timings"));
}

TEST_CASE("rigid, tau and the transfer verifications") {
    TempDir dir;
    const Json rigid = report_of(run_cli("rigid --size 3"));
    CHECK(rigid["summary"]["status"] == "pass");
    CHECK(rigid["checks"][0]["witnesses"]["edges"] == Json::parse("[[0,2],[1,0]]"));
    const Structure theta = parse_structure(
        rigid["checks"][0]["witnesses"]["structure_text"].get<std::string>());
    CHECK(theta.size == 3);

    const std::string rho = dir.file("rho.txt", kLoopedEdge);
    const Json tau = report_of(run_cli("tau --rho " + rho + " --arities 2 --theta-size 3"));
    CHECK(tau["summary"]["status"] == "pass");
    CHECK(tau["checks"][0]["witnesses"]["kappa"] == 5);
    // The two base pairs plus the two digraph edges shifted past the domain.
    const Structure padded =
        parse_structure(tau["checks"][0]["witnesses"]["tau_text"].get<std::string>());
    CHECK(padded.relations[0] == TupleSet{{0, 0}, {0, 1}, {2, 4}, {3, 2}});

    const Json self = report_of(run_cli("tau --rho " + rho + " --arities 3 --self"));
    CHECK(self["checks"][0]["witnesses"]["kappa"] == 2);
    CHECK(self["checks"][0]["witnesses"]["i0"] == 0);

    const Json claim = report_of(run_cli("verify-claim --lambda 2 --arities 2"));
    CHECK(claim["summary"]["status"] == "pass");
    CHECK(claim["summary"]["checks"] == 6);
    CHECK(claim["config"]["pairs"] == 81);

    const Json preserve = report_of(run_cli("verify-preserve --lambda 1 --arities 3"));
    CHECK(preserve["summary"]["status"] == "pass");
    CHECK(preserve["summary"]["checks"] == 12);

    CHECK(run_cli("verify-claim --lambda 9 --arities 2").exit_code == 2);
}
