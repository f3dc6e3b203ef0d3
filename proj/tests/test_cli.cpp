// Runs the built syzygy binary (path injected by CMake).

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "syzygy/io.hpp"

#ifndef SYZYGY_CLI
#error "SYZYGY_CLI must point at the syzygy executable"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + SYZYGY_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) r.out += buf.data();
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path fresh_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("syzygy_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST(Cli, BettiConic) {
    const auto r = run("betti --variety P:2 --bundle 2 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("  1 | 0 6 8 3 0"), std::string::npos);
}

TEST(Cli, BettiSingleCell) {
    const auto r = run("betti --variety P:1 --bundle 1 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("j\\i | 0\n"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
    const auto r = run("betti --variety F:0 --bundle 2,2 --format json --no-cache");
    ASSERT_EQ(r.code, 0);
    const auto t = syzygy::parse_json(r.out);
    EXPECT_EQ(t.beta(1, 1), 20u);
    EXPECT_EQ(syzygy::render_json(t), r.out);
    EXPECT_EQ(t, syzygy::compute_table(syzygy::Variety::hirzebruch(0), syzygy::DivisorClass::of(2, 2)));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("betti --variety P:2 --bundle 2,3").code, 1);
    EXPECT_EQ(run("betti --variety F:1 --bundle 1,1 --no-cache").code, 1); // not ample
    EXPECT_EQ(run("betti --variety X:1 --bundle 1").code, 1);
    EXPECT_EQ(run("betti --variety P:2").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    // a prime that kills a rank makes the two primes disagree: complete but uncertified
    EXPECT_EQ(run("betti --variety P:1 --bundle 1 --prime 3 --prime 5 --no-cache").code, 0);
}

TEST(Cli, Profile) {
    auto r = run("profile --variety F:0 --bundle 2,2 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("delta=0"), std::string::npos);
    r = run("profile --variety P:1 --bundle 2 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("q_max=0"), std::string::npos);
    EXPECT_NE(r.out.find("convention"), std::string::npos);
}

TEST(Cli, Verify) {
    const auto r = run("verify --variety F:0 --bundle 2,3 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pass  rational q=2"), std::string::npos);
    EXPECT_NE(r.out.find("no sufficiency violations"), std::string::npos);
    EXPECT_EQ(run("verify --variety P:2 --bundle 2 --no-cache").code, 0);
}

TEST(Cli, Predict) {
    auto r = run("predict cm --n 2 --q 3 --regk 3 --rho 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("l >= 4"), std::string::npos);
    r = run("predict ruled --n 2 --g 0 --mu-minus 0 --a 4 --b 4 --q 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\nsatisfied"), std::string::npos);
    r = run("predict enriques --q 4 --b2 6");
    EXPECT_NE(r.out.find("l >= 3"), std::string::npos);
    r = run("predict gon --variety F:0 --bundle 5,2");
    EXPECT_NE(r.out.find("gon_max = 2"), std::string::npos);
    EXPECT_NE(r.out.find("min(a, b)"), std::string::npos);
    r = run("predict conjecture-delta --variety F:0 --bundle 3,4");
    EXPECT_NE(r.out.find("delta = 4"), std::string::npos);
    EXPECT_EQ(run("predict cm --n 2 --q 3").code, 1);
    EXPECT_EQ(run("predict nonsense").code, 1);
}

TEST(Cli, Sweep) {
    auto r = run("sweep --variety F:0 --a 2 --b 2..3 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a,b,r,p_max,q_max,delta,predicted_delta,match\n"
                     "2,2,8,5,2,0,0,yes\n"
                     "2,3,11,7,2,1,1,yes\n");
    r = run("sweep --variety P:2 --d 3..2 --no-cache");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a,b,r,p_max,q_max,delta,predicted_delta,match\n");
}

TEST(Cli, ColdWarmCacheIdentical) {
    const auto dir = fresh_dir();
    const std::string args = "betti --variety F:0 --bundle 2,3 --format json --cache-dir " + dir.string();
    const auto cold = run(args);
    ASSERT_TRUE(std::filesystem::exists(dir / "ranks.csv"));
    const auto size_after_cold = std::filesystem::file_size(dir / "ranks.csv");
    const auto warm = run(args);
    EXPECT_EQ(cold.code, 0);
    EXPECT_EQ(warm.code, 0);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(std::filesystem::file_size(dir / "ranks.csv"), size_after_cold);
    std::filesystem::remove_all(dir);
}

TEST(Cli, CacheDirFromEnvironment) {
    const auto dir = fresh_dir();
    const auto r = run("betti --variety P:2 --bundle 2", "SYZYGY_CACHE_DIR=" + dir.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "ranks.csv"));
    std::filesystem::remove_all(dir);
}
