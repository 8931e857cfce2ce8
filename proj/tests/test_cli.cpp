// Copyright 2026 The slowprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(SLOWPROV_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("slowprov_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, Ordinals) {
  EXPECT_EQ(cli("ord cmp 'w^w' 'w*9+7'").out, "GT\n");
  EXPECT_EQ(cli("ord cmp 1 w").out, "LT\n");
  EXPECT_EQ(cli("ord add 1 w").out, "w\n");
  EXPECT_EQ(cli("ord mul 'w+1' 2").out, "w*2+1\n");
  EXPECT_EQ(cli("ord fundseq e0 0").out, "w\n");
  EXPECT_EQ(cli("ord stepdown w 2 --target 0").out, "REACHED r=4: w,3,2,1,0\n");
  const CliRun bad = cli("ord cmp 'w^' 1");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(cli("ord fundseq 3 1").code, 1);
  EXPECT_EQ(cli("ord add e0 1").code, 1);
}

TEST(Cli, Fgh) {
  EXPECT_EQ(cli("fgh eval 1 4").out, "9\n");
  EXPECT_EQ(cli("fgh eval w 1").out, "7\n");
  EXPECT_EQ(cli("fgh eval 2 2 --raw").out, "23\n");
  EXPECT_EQ(cli("fgh iter 1 2 1").out, "7\n");
  EXPECT_EQ(cli("fgh cmpto 1 4 9").out, "LE 9\n");
  EXPECT_EQ(cli("fgh cmpto w 3 10").out, "GT\n");
  EXPECT_EQ(cli("fgh shift 5 3").out, "1\n");
  EXPECT_EQ(cli("fgh l 5").out, "2\n");
  EXPECT_EQ(cli("fgh r 2").out, "5\n");
  EXPECT_EQ(cli("fgh eval 3 2 --bits").out, "bits=402653213\n");

  const CliRun budget = cli("fgh r 3");
  EXPECT_EQ(budget.out, "BUDGET\n");
  EXPECT_EQ(budget.code, 0);
  EXPECT_EQ(cli("--strict fgh r 3").code, 3);
  EXPECT_EQ(cli("fgh shift 2 3").out, "BUDGET\n");
  EXPECT_EQ(cli("--bitcap 4 fgh eval 2 2").out, "BUDGET\n");
  EXPECT_EQ(cli("--stepcap 0 fgh eval 1 1").code, 2);
}

TEST(Cli, JsonRecords) {
  const auto j = nlohmann::json::parse(cli("--json fgh eval 1 4").out);
  EXPECT_EQ(j["command"], "fgh eval");
  EXPECT_EQ(j["result"], "VALUE");
  EXPECT_EQ(j["value"], "9");
  const auto l = nlohmann::json::parse(cli("fgh l 5 --json").out);
  EXPECT_EQ(l["value"], 2);
  const auto d = nlohmann::json::parse(cli("--json modal decide glt '[]p->[.]p'").out);
  EXPECT_EQ(d["result"], "COUNTERMODEL");
}

TEST(Cli, ModalDecide) {
  EXPECT_EQ(cli("modal decide glt '[.]p->[]p'").out, "THEOREM\n");
  EXPECT_EQ(cli("modal decide gl '[]([]p->p)->[]p'").out, "THEOREM\n");
  EXPECT_EQ(cli("modal decide gl2 '[]p<->[.][.]p'").out, "THEOREM\n");

  const CliRun c = cli("modal decide glt '[]p->[.]p'");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(first_line(c.out), "COUNTERMODEL");
  const std::string rest = c.out.substr(c.out.find('\n') + 1);
  const std::string world_line = first_line(rest);
  ASSERT_EQ(world_line.rfind("world=", 0), 0u);
  const std::string model = rest.substr(rest.find('\n') + 1);
  const std::string path = write_temp("cm.json", model);
  EXPECT_EQ(cli("modal checkmodel " + path + " '[]p->[.]p'").out, "OK\n");
  EXPECT_EQ(cli("modal eval " + path + " " + world_line.substr(6) + " '[]p->[.]p' --sem glt").out,
            "false\n");

  const std::string proof = write_temp("proof.json", "");
  const std::string model_out = write_temp("model.json", "");
  EXPECT_EQ(cli("modal decide glt '[.]p->[]p' --proof-out " + proof).code, 0);
  EXPECT_EQ(cli("modal checkproof " + proof).out, "OK\n");
  EXPECT_EQ(cli("modal decide gl '<>true' --model-out " + model_out).code, 0);
  EXPECT_EQ(cli("modal eval " + model_out + " w0 '<>true' --sem gl").out, "false\n");

  const CliRun inc = cli("--model-size 1 --proof-depth 1 modal decide glt '[]p->[.]p'");
  EXPECT_EQ(inc.out, "INCONCLUSIVE bound=1\n");
  EXPECT_EQ(cli("--strict --model-size 1 --proof-depth 1 modal decide glt '[]p->[.]p'").code, 3);
  EXPECT_EQ(cli("modal decide gl '[.]p'").code, 1);
  EXPECT_EQ(cli("modal decide glt '[]p ->'").code, 2);
}

TEST(Cli, ModelsAndProofs) {
  const std::string m5 = write_temp(
      "m5.json", R"({"worlds":["a","b"],"root":"a","prec":[["a","b"]],"precR":[["a","b"]],"val":{}})");
  const CliRun v = cli("modal checkmodel " + m5 + " '[.]p'");
  EXPECT_EQ(v.code, 4);
  EXPECT_EQ(v.out.rfind("VIOLATION condition=5:", 0), 0u);
  EXPECT_EQ(cli("modal eval " + m5 + " a '[.]p' --sem gl2").out, "false\n");
  EXPECT_EQ(cli("modal eval " + m5 + " a '[.]p' --sem glt").code, 1);

  const std::string broken = write_temp("broken.json", R"({"worlds":["a"],"root":"b","prec":[]})");
  EXPECT_EQ(cli("modal checkmodel " + broken + " p").code, 4);

  const std::string pr = write_temp(
      "nec.json",
      R"J({"lines":[{"formula":"p->p","rule":"Taut"},{"formula":"[](p->p)","rule":"Nec_box","refs":[1]}]})J");
  const CliRun e = cli("modal checkproof " + pr);
  EXPECT_EQ(e.code, 1);
  EXPECT_EQ(e.out.rfind("ERROR line=2 rule not primitive", 0), 0u);
}

TEST(Cli, IterAndDev) {
  EXPECT_EQ(cli("iter normalize 'S2^w p'").out, "B p\n");
  EXPECT_EQ(cli("iter normalize 'R R p' --strategy outer").out, "B p\n");
  EXPECT_EQ(cli("iter normalize 'B S1^w p' --box-absorbs-s1").out, "B p\n");
  EXPECT_EQ(cli("iter entails 'S1 p' 'B p'").out, "YES\n");
  EXPECT_EQ(cli("iter entails 'B p' 'S1 p'").out, "UNKNOWN\n");
  EXPECT_EQ(cli("iter normalize 'R^w p'").code, 2);
  EXPECT_EQ(cli("dev oracle 2 2").out, "23\n");
  EXPECT_EQ(cli("dev frames 4").out, "16\n");
  EXPECT_EQ(cli("bogus").code, 2);
}

}  // namespace
