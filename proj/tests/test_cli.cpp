#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"

using namespace peano;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::string model_path(const std::string& stem) { return std::string(PEANO_MODELS_DIR) + "/" + stem + ".model"; }

}  // namespace

TEST(Cli, ListsTheGallery) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, 0);
  for (auto id : kAllModels) EXPECT_NE(r.out.find(to_string(id)), std::string::npos) << to_string(id);
  const auto j = json::parse(run({"list", "--format", "json"}).out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["models"].size(), 9u);
  EXPECT_EQ(j["models"][6]["id"], "m6-braid");
  EXPECT_EQ(j["models"][6]["regime"], "sub");
}

TEST(Cli, PrinciplesOnM1) {
  const auto r = run({"principles", "m1-omega-plus-omega"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CI  Holds"), std::string::npos);
  EXPECT_NE(r.out.find("RI  Fails"), std::string::npos);
  const auto j = json::parse(run({"--format", "json", "principles", "m1"}).out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["consistent"]);
  EXPECT_EQ(j["table"]["statuses"]["CI"]["verdict"], "Holds");
  EXPECT_EQ(j["table"]["statuses"]["RI"]["verdict"], "Fails");
  EXPECT_EQ(j["table"]["statuses"]["RI"]["evidence"]["kind"], "subset-witness");
}

TEST(Cli, PropagatedEntriesCarryDerivations) {
  const auto j = json::parse(run({"principles", "m5-reversed", "--format", "json"}).out);
  const auto& st = j["table"]["statuses"];
  for (const auto& [p, row] : st.items())
    EXPECT_TRUE(row["verdict"] == "Unknown" || !row["evidence"].is_null() || row.contains("derivation")) << p;
}

TEST(Cli, OracleExample) {
  const auto r = run({"oracle", "--n", "10", "--count", "500", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("500/500 agree"), std::string::npos);
  const auto j = json::parse(run({"oracle", "--count", "50", "--format", "json"}).out);
  EXPECT_EQ(j["checked"], 50);
  EXPECT_TRUE(j["first_disagreement"].is_null());
}

TEST(Cli, DslModelGivesBuiltinTable) {
  const auto dsl = json::parse(run({"principles", model_path("m6"), "--format", "json"}).out);
  const auto ref = json::parse(run({"principles", "m6-braid", "--format", "json"}).out);
  EXPECT_EQ(dsl["table"]["statuses"], ref["table"]["statuses"]);
  EXPECT_EQ(dsl["table"]["regime"], "sub");
  EXPECT_EQ(run({"parse", model_path("m6")}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"list", "--bogus"}).code, 1);
  EXPECT_EQ(run({"principles", "m9"}).code, 1);
  EXPECT_EQ(run({"implications"}).code, 1);
  EXPECT_EQ(run({"oracle", "--n", "17"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"axioms", "m5-reversed", "--regime", "pre"}).code, 2);
  EXPECT_EQ(run({"axioms", "m5-reversed"}).code, 0);

  const auto bad = run({"parse", temp_file("peano_no_zero.model", "model x {\n  sort A(n: nat)\n}\n")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("zero declaration required"), std::string::npos);
  const auto overlap = run({"principles", temp_file("peano_overlap.model", R"(model x {
  sort A(n: nat)
  zero A(0)
  succ A(n) if n >= 0 -> A(n + 1)
  succ A(n) if n >= 5 -> A(n + 1)
})")});
  EXPECT_EQ(overlap.code, 3);
  EXPECT_NE(overlap.err.find("overlap at A(5)"), std::string::npos);

  // Evidence that does not verify.
  const auto wrong = run({"principles", temp_file("peano_wrong.model", R"(model x {
  sort N(n: nat)
  zero N(0)
  succ N(n) -> N(n + 1)
  less N(n) < N(m) iff n < m
  witness incomparable N(0), N(1)
})")});
  EXPECT_EQ(wrong.code, 2);
  EXPECT_NE(wrong.err.find("rejected"), std::string::npos);
}

TEST(Cli, ImplicationsAndDot) {
  const auto path = (std::filesystem::temp_directory_path() / "peano_pre.dot").string();
  std::filesystem::remove(path);
  EXPECT_EQ(run({"implications", "--regime", "pre"}).code, 0);
  EXPECT_FALSE(std::filesystem::exists(path));
  const auto r = run({"implications", "--regime", "pre", "--dot", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CI->RI"), std::string::npos);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "digraph implications_pre {");
  const auto j = json::parse(run({"implications", "--regime", "sub", "--format", "json"}).out);
  bool found = false;
  for (const auto& e : j["edges"])
    if (e["src"] == "WFO" && e["dst"] == "WFS") {
      found = true;
      EXPECT_EQ(e["status"], "invalid");
      EXPECT_EQ(e["refuted_by"], json::array({"m8-omega-plus-zeta-cut"}));
    }
  EXPECT_TRUE(found);
}

TEST(Cli, ReproduceIsDeterministic) {
  const auto a = run({"reproduce", "--seed", "7"});
  const auto b = run({"reproduce", "--seed", "7"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("10/10 criteria reproduced"), std::string::npos);
  const auto j = json::parse(run({"reproduce", "--format", "json"}).out);
  EXPECT_EQ(j["passed"], 10);
}

TEST(Cli, ReproduceFailsLoudly) {
  const auto r = run({"reproduce", "--models", "/nonexistent"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mismatch in criterion 10"), std::string::npos);
  EXPECT_NE(r.out.find("criterion 10  FAIL"), std::string::npos);
}
