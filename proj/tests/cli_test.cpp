#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "csmforge/classes.hpp"

using namespace csmforge;

namespace {

// Locations injected by the build so the suite runs from any directory.
std::string cli_bin() {
    const char* p = std::getenv("CSM_FORGE_BIN");
    REQUIRE_MESSAGE(p != nullptr, "CSM_FORGE_BIN must point at the csmforge binary");
    return p;
}

std::string instance(const std::string& name) {
    const char* p = std::getenv("CSM_FORGE_INSTANCES");
    REQUIRE_MESSAGE(p != nullptr, "CSM_FORGE_INSTANCES must point at the instances directory");
    return std::string(p) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

GradedClass class_from_json(const nlohmann::json& rec) {
    std::vector<mpq_class> coeffs;
    for (const auto& pair : rec.at("class")) {
        mpz_class num(pair.at(0).dump());
        mpz_class den(pair.at(1).dump());
        coeffs.push_back(make_rational(num, den));
    }
    return GradedClass::from_coeffs(std::move(coeffs));
}

} // namespace

TEST_CASE("csm text output") {
    RunResult r = run_cli("csm " + instance("nodal_cubic.ci"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "c_SM = 3*H + 1*H^2, chi = 1\n");
}

TEST_CASE("segre json matches the library and round-trips") {
    RunResult r = run_cli("segre " + instance("point.ci") + " --json");
    CHECK(r.exit_code == 0);
    nlohmann::json rec = nlohmann::json::parse(r.output);
    CHECK(rec.at("n") == 2);
    CHECK(rec.at("prime") == 65521);
    CHECK(rec.at("trials") == 2);

    Ring p2 = Ring::make(FieldSpec::gf(65521), {"x", "y", "z"});
    Ideal point(p2, {Poly::parse("y", p2), Poly::parse("z", p2)});
    CHECK(class_from_json(rec) == segre_class(point));
}

TEST_CASE("verify theorem on the crossing lines") {
    RunResult r = run_cli("verify theorem " + instance("crossing_lines.ci"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "MATCH: 2*H^2 + 3*H^3\n");
}

TEST_CASE("verify lemma per-k lines") {
    RunResult r = run_cli("verify lemma " + instance("nodal_cubic.ci") + " --k 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "k=1 MATCH: 3*H - 8*H^2\nk=2 MATCH: 3*H - 5*H^2\n");
}

TEST_CASE("verify remark on a power of the cuspidal cubic") {
    RunResult r = run_cli("verify remark " + instance("cuspidal_cubic.ci") + " --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "MATCH: 3*H + 2*H^2\n");
}

TEST_CASE("fulton, euler, milnor, fscheme-segre text output") {
    CHECK(run_cli("fulton " + instance("nodal_cubic.ci") + " --name IX").output == "c_F = 3*H\n");
    CHECK(run_cli("euler " + instance("quadric_cone.ci")).output == "chi = 3\n");
    CHECK(run_cli("milnor " + instance("cuspidal_cubic.ci")).output == "M = 2*H^2\n");
    // the declared f-scheme IX * J^-1 is the family limit the csm pipeline consumes
    RunResult r = run_cli("fscheme-segre " + instance("nodal_cubic.ci"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "s = 3*H - 8*H^2\n");
}

TEST_CASE("same seed and prime give byte-identical output") {
    std::string args = "csm " + instance("quadric_cone.ci") + " --json --seed 7";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("prime rebasing and seed changes leave the class unchanged") {
    std::string base = "csm " + instance("cuspidal_cubic.ci") + " --json";
    nlohmann::json r0 = nlohmann::json::parse(run_cli(base).output);
    nlohmann::json r1 = nlohmann::json::parse(run_cli(base + " --prime 32003").output);
    nlohmann::json r2 = nlohmann::json::parse(run_cli(base + " --seed 99").output);
    CHECK(r1.at("prime") == 32003);
    CHECK(class_from_json(r0) == class_from_json(r1));
    CHECK(class_from_json(r0) == class_from_json(r2));
    CHECK(r0.at("chi") == r1.at("chi"));
}

TEST_CASE("CSM_FORGE_SEED env var is honored and --seed wins over it") {
    std::string file = instance("smooth_conic.ci");
    RunResult env_run = run_cli("csm " + file + " --json");
    // prefix the env var into the same shell command
    std::string with_env = "env CSM_FORGE_SEED=12345 " + cli_bin() + " csm " + file + " --json";
    FILE* pipe = popen((with_env + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    pclose(pipe);
    nlohmann::json env_rec = nlohmann::json::parse(out);
    CHECK(env_rec.at("seed") == 12345);
    CHECK(class_from_json(env_rec) == class_from_json(nlohmann::json::parse(env_run.output)));
}

TEST_CASE("input errors exit 2 with a position") {
    CHECK(run_cli("csm /nonexistent.ci").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);

    // undeclared name, duplicate ring, use before ring: all positioned input errors
    std::string dir = "/tmp";
    std::string bad1 = dir + "/cli_test_bad1.ci";
    {
        FILE* f = fopen(bad1.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("ring GF(65521)[x,y,z]\nci X = [F]\n", f);
        fclose(f);
    }
    CHECK(run_cli("csm " + bad1).exit_code == 2);

    std::string bad2 = dir + "/cli_test_bad2.ci";
    {
        FILE* f = fopen(bad2.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("ring GF(65521)[x,y,z]\nring GF(65521)[x,y,z]\n", f);
        fclose(f);
    }
    CHECK(run_cli("csm " + bad2).exit_code == 2);

    std::string bad3 = dir + "/cli_test_bad3.ci";
    {
        FILE* f = fopen(bad3.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("hypersurface F = x\n", f);
        fclose(f);
    }
    CHECK(run_cli("csm " + bad3).exit_code == 2);
}

TEST_CASE("remark needs a single-hypersurface ci") {
    CHECK(run_cli("verify remark " + instance("crossing_lines.ci") + " --k 2").exit_code == 2);
}
