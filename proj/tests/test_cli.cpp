#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pctk/format.hpp"

namespace {

std::string g_bin;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = g_bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, got);
    int st = pclose(p);
    if (WIFEXITED(st)) res.code = WEXITSTATUS(st);
    return res;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("count") {
    CHECK(run("count --n 4 --r 2").out == "6\n");
    CHECK(run("count --n 3").out == "1\n");
    CHECK(run("count --n 4 --r 5").code == 3);
    CHECK(run("count --n 4 --r 2 --json").out ==
          "{\"n\":4,\"r\":[2],\"count\":\"6\"}\n");
}

TEST_CASE("count-total") {
    CHECK(run("count-total --n 4").out == "56\n");
    CHECK(run("count-total --n 5 --formula").out == "284\n");
    CHECK(run("count-total --n 9").code == 4);
    CHECK(run("count-total --n 9 --formula").code == 0);
}

TEST_CASE("list families") {
    auto r312 = run("list r312 --n 3 --r 1,2");
    CHECK(r312.code == 0);
    auto ls = lines(r312.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls.front() == "1;2;3");

    CHECK(lines(run("list gapless --n 3 --r 1,2").out).size() == 5);
    CHECK(lines(run("list chains --n 3 --r 1,2").out).size() == 5);
    CHECK(lines(run("list shapes --n 3 --r 1,2").out).size() == 5);
    CHECK(lines(run("list gchains --n 2").out).size() == 3);
    CHECK(lines(run("list opart --n 4 --r 2 --sigma 231").out).size() == 6);

    CHECK(run("list gchains --n 2 --r 1").code == 3);
    CHECK(run("list r312 --n 3 --r 1 --sigma 312").code == 3);
    CHECK(run("list nonsense --n 3").code == 2);

    // json lines parse back to the same family
    auto js = lines(run("list r312 --n 3 --r 1,2 --json").out);
    REQUIRE(js.size() == 5);
    CHECK(pctk::rtuple_from_json(js.front()) == pctk::parse_rtuple("1;2;3"));
}

TEST_CASE("oeis") {
    CHECK(run("oeis --seq a226316 --terms 5").out == "1\n3\n12\n56\n284\n");
    CHECK(run("oeis --seq a220097 --terms 3").out == "1\n6\n43\n");
    CHECK(run("oeis --seq a220097 --terms 9").code == 4);
    CHECK(run("oeis --seq a226316 --terms 0").code == 3);
    CHECK(run("oeis --seq bogus --terms 2").code == 2);
}

TEST_CASE("key and rowendmax") {
    CHECK(run("key --lambda 2,1,0 --perm \"3;1;2\"").out == "1 3\n3\n");
    CHECK(run("key --lambda 2,1,0 --perm \"3;1;2\" --json").out ==
          "{\"n\":3,\"lambda\":[2,1,0],\"columns\":[[1,3],[3]]}\n");
    CHECK(run("rowendmax --lambda 2,1,0 --alpha \"2;3;3\"").out == "2 2\n3\n");
    CHECK(run("key --lambda 2,1,0 --perm \"3;1,2\"").code == 3);
}

TEST_CASE("scan reads a tableau from stdin") {
    std::string feed =
        "echo '{\"n\":3,\"lambda\":[2,1,0],\"columns\":[[1,3],[2]]}' | ";
    {
        std::string cmd = feed + g_bin + " scan -";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p);
        char buf[256];
        std::string out;
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
        CHECK(WEXITSTATUS(pclose(p)) == 0);
        CHECK(out == "2 2\n3\n");
    }
    {
        std::string cmd = feed + g_bin + " scan - --json";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p);
        char buf[256];
        std::string out;
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
        CHECK(WEXITSTATUS(pclose(p)) == 0);
        pctk::Tableau s = pctk::tableau_from_json(out);
        CHECK(s == pctk::Tableau(pctk::Partition(3, {2, 1, 0}), {{2, 3}, {2}}));
    }
    CHECK(run("scan /nonexistent.json").code == 3);
    CHECK(run("scan - < /dev/null").code == 3);
}

TEST_CASE("demazure reports") {
    CHECK(run("demazure --lambda 1,0 --perm \"2;1\" --poly").out == "x1 + x2\n");
    CHECK(run("demazure --lambda 1,0 --perm \"2;1\" --poly --json").out ==
          "[{\"exponents\":[1,0],\"coefficient\":\"1\"},"
          "{\"exponents\":[0,1],\"coefficient\":\"1\"}]\n");
    CHECK(run("demazure --lambda 1,0 --perm \"2;1\"").out == "1\n\n2\n");
    CHECK(lines(run("demazure --lambda 1,0 --perm \"2;1\" --json").out).size() == 2);
    CHECK(run("demazure --lambda 2,1,0 --perm \"3;1;2\" --convexity").out ==
          "nonconvex\ncertificate:\n1 2\n3\n");
    CHECK(run("demazure --lambda 1,0 --perm \"2;1\" --set --poly").code == 2);
}

TEST_CASE("convexity and witness") {
    CHECK(run("convexity --lambda 2,1,0 --perm \"2;1;3\"").out == "convex\n");
    auto wit = run("witness --lambda 2,1,0 --perm \"3;1;2\"");
    CHECK(wit.code == 0);
    CHECK(wit.out.find("ratio = 1/2") != std::string::npos);
    auto wjson = run("witness --lambda 2,1,0 --perm \"3;1;2\" --json");
    CHECK(wjson.out.find("\"ratio\":\"1/2\"") != std::string::npos);
    CHECK(run("witness --lambda 2,1,0 --perm \"1;2;3\"").code == 3);
}

TEST_CASE("verify") {
    auto all = run("verify --n-max 3");
    CHECK(all.code == 0);
    CHECK(all.out.find("C_3^Σ = 12") != std::string::npos);
    CHECK(all.out.find("7/7 suites passed") != std::string::npos);

    auto one = run("verify --n-max 2 --theorem 5.2");
    CHECK(one.code == 0);
    CHECK(one.out.find("suite 5.2 [PASS]") != std::string::npos);
    CHECK(lines(one.out).front().rfind("suite 5.2", 0) == 0);

    CHECK(run("verify --n-max 0").code == 3);
    CHECK(run("verify --n-max 9").code == 4);
    CHECK(run("verify --n-max 2 --theorem zzz").code == 3);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("count").code == 2);  // missing --n
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
        return 1;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    int argc1 = 1;
    ctx.applyCommandLine(argc1, argv);
    return ctx.run();
}
