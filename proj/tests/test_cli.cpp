// End-to-end checks of the CLI contract: exit codes, determinism, and the
// construct -> verify pipeline. Drives the built binary through popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GSO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("construct and verify round trip") {
    std::string spec = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/gso_cli_spec.json";
    RunResult c = run("construct --p 2 --m 7 --e 1 --method qplus1 --k 42 --out " + spec);
    CHECK(c.status == 0);
    CHECK(c.out.find("[129,42]_128") != std::string::npos);
    CHECK(c.out.find("hullDim=42") != std::string::npos);

    RunResult v = run("verify --spec " + spec);
    CHECK(v.status == 0);
    CHECK(v.out.find("isZero: true") != std::string::npos);
    CHECK(v.out.find("hullDim: 42") != std::string::npos);
    CHECK(v.out.find("mds: structural") != std::string::npos);
    CHECK(v.out.find("lambdaDegree: 4") != std::string::npos);  // 128 - 41*3 - 1

    // the duality exponent gives the same verdict
    RunResult vd = run("verify --spec " + spec + " --e 6");
    CHECK(vd.status == 0);
    CHECK(vd.out.find("isZero: true") != std::string::npos);

    // tampering with a multiplier flips the verdict and drops the hull
    std::ifstream in(spec);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.find("\"multipliers\"");
    REQUIRE(pos != std::string::npos);
    auto bracket = text.find('[', pos);
    auto comma = text.find(',', bracket);
    unsigned long val = std::stoul(text.substr(bracket + 1, comma - bracket - 1));
    std::string tampered =
        text.substr(0, bracket + 1) + std::to_string(val == 1 ? 2 : 1) + text.substr(comma);
    std::string tampered_path = spec + ".tampered";
    std::ofstream(tampered_path) << tampered;
    RunResult vt = run("verify --spec " + tampered_path);
    CHECK(vt.status == 1);
    CHECK(vt.out.find("isZero: false") != std::string::npos);
}

TEST_CASE("usage errors exit with 2 and the condition name") {
    RunResult r = run("construct --p 4 --m 1 --e 0 --method qplus1 --k 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("NotPrime") != std::string::npos);

    RunResult r2 = run("construct --p 2 --m 7 --e 1 --method qplus1 --k 43");
    CHECK(r2.status == 2);
    CHECK(r2.out.find("KOutOfRange") != std::string::npos);

    RunResult r3 = run("verify --spec /nonexistent.json");
    CHECK(r3.status == 2);
}

TEST_CASE("construct output is byte-identical across runs") {
    RunResult a = run("construct --p 2 --m 6 --e 2 --method theta --r 5 --k 3 --seed 7");
    RunResult b = run("construct --p 2 --m 6 --e 2 --method theta --r 5 --k 3 --seed 7");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("enumerate emits the paper rows") {
    RunResult r = run("enumerate --p 2 --m 7");
    CHECK(r.status == 0);
    CHECK(r.out.find("p,m,e,n,k_max,method,verified\n") != std::string::npos);
    CHECK(r.out.find("2,7,1,129,42,qplus1,true") != std::string::npos);
    CHECK(r.out.find("2,7,2,129,26,qplus1,true") != std::string::npos);
    CHECK(r.out.find("2,7,3,129,14,qplus1,true") != std::string::npos);

    RunResult r35 = run("enumerate --p 3 --m 5 --e 1 --e 2");
    CHECK(r35.out.find("3,5,1,244,60,qplus1,true") != std::string::npos);
    CHECK(r35.out.find("3,5,2,244,24,qplus1,true") != std::string::npos);
}

TEST_CASE("quantum pipeline emits the EAQECC rows") {
    std::string spec = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/gso_cli_q.json";
    RunResult c = run("construct --p 2 --m 7 --e 1 --method qplus1 --k 42 --out " + spec);
    REQUIRE(c.status == 0);
    RunResult q = run("quantum --spec " + spec + " --rule 1 --l 40");
    CHECK(q.status == 0);
    CHECK(q.out.find("129,2,88,47,128,1,pass") != std::string::npos);
    CHECK(q.out.find("129,47,43,2,128,2,pass") != std::string::npos);

    RunResult bad = run("quantum --spec " + spec + " --rule 9 --l 0");
    CHECK(bad.status == 2);
}
