#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "pcqi/serialization.hpp"

using namespace pcqi;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(PCQI_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(PCQI_FIXTURES) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pcqi_cli_" + name)).string();
}

}  // namespace

TEST(Cli, PredicatesOfPentagon) {
  const Outcome r = run("predicates --graph " + fixture("c5.json"));
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["atomic"], true);
  EXPECT_EQ(j["chordal"], false);
  EXPECT_EQ(j["connected"], true);
}

TEST(Cli, NormalForm) {
  const Outcome r = run("nf --graph " + fixture("path3.json") + " --word 'c a a^-1 b'");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "b c\n");
  const Outcome j = run("--format json nf --graph " + fixture("path3.json") + " --word 'a a^-1'");
  EXPECT_EQ(json::parse(j.out)["trivial"], true);
}

TEST(Cli, ClassifyAtomicPairIsNegative) {
  const Outcome r = run("classify --a " + fixture("c5.json") + " --b " + fixture("petersen.json"));
  EXPECT_EQ(r.status, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NotQI");
  EXPECT_EQ(j["class"], "atomic");
  EXPECT_EQ(run("--zero-on-negative classify --a " + fixture("c5.json") + " --b " + fixture("petersen.json")).status,
            0);
}

TEST(Cli, GphThenBisimOfPaths) {
  const std::string a = temp_path("p4_gph.json"), b = temp_path("p6_gph.json");
  ASSERT_EQ(run("gph --complex " + fixture("path4_complex.json") + " --out " + a).status, 0);
  ASSERT_EQ(run("gph --complex " + fixture("path6_complex.json") + " --out " + b).status, 0);
  const Outcome r = run("bisim --a " + a + " --b " + b + " --n 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["bisimilar"], true);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, EmbedWritesVerifiableCertificate) {
  const std::string cert = temp_path("cert.json");
  const Outcome r = run("embed --domain " + fixture("path3.json") + " --codomain " + fixture("path4.dot") +
                    " --depth 3 --out " + cert);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["found"], true);
  EXPECT_TRUE(verify_certificate(certificate_from_json(json::parse(read_file(cert)))));
  std::filesystem::remove(cert);
}

TEST(Cli, PatchAndRigidity) {
  const Outcome p = run("patch --graph " + fixture("c5.json") + " --double v1:1");
  ASSERT_EQ(p.status, 0);
  EXPECT_EQ(json::parse(p.out)["vertices"].size(), 7u);
  const Outcome dot = run("--format dot patch --graph " + fixture("c5.json") + " --double v1:1");
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
  const Outcome r = run("rigidity --graph " + fixture("c5.json") + " --depth 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["failures"], 0);
}

TEST(Cli, Deterministic) {
  const std::string args = "classify --criterion --a " + fixture("c5.json") + " --b " + fixture("path4.dot");
  const Outcome first = run(args), second = run(args);
  EXPECT_EQ(first.status, second.status);
  EXPECT_EQ(first.out, second.out);
  EXPECT_FALSE(first.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("predicates").status, 2);
  EXPECT_EQ(run("predicates --graph /nonexistent.json").status, 2);
  EXPECT_EQ(run("embed --domain " + fixture("c5.json") + " --codomain " + fixture("c5.json") + " --budget bogus=1")
                .status,
            2);
  EXPECT_EQ(run("patch --graph " + fixture("c5.json") + " --double v1:0").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}
