#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qmi/cli.hpp"
#include "qmi/json_io.hpp"

using namespace qmi;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json result(std::vector<std::string> args) {
  const Outcome o = run(std::move(args));
  INFO(o.err);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

std::string error_code(const Outcome& o) { return Json::parse(o.err).at("error").get<std::string>(); }

Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(QMI_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    CHECK(run({"algebra", "info", "-a", "-1", "-b", "-1"}).out == "{\"disc\":\"2\",\"ramified\":[\"2\",\"inf\"]}\n");
    CHECK(run({"ideal", "degree", "--fixture", "split-maximal", "--scale", "1/3"}).out == "{\"degree\":\"9\"}\n");
    CHECK(run({"cocycle", "verify"}).out == "{\"ok\":true}\n");
  }

  TEST_CASE("algebra commands") {
    CHECK(result({"algebra", "hilbert", "-a", "-1", "-b", "-1", "--place", "2"})["symbol"] == "-1");
    CHECK(result({"algebra", "hilbert", "-a", "-1", "-b", "-1", "--place", "3"})["symbol"] == "1");
    CHECK(result({"algebra", "mul", "-a", "-1", "-b", "-1", "-x", "[0,1,0,0]", "-y", "[0,0,1,0]"})["product"] ==
          Json::parse(R"(["0","0","0","1"])"));
    const Json n = result({"algebra", "norm", "-a", "2", "-b", "3", "-x", "[\"1/2\",1,0,1]"});
    CHECK(n["norm"] == "17/4");
    CHECK(n["trace"] == "1");
  }

  TEST_CASE("order, ideal and torsion commands") {
    CHECK(result({"order", "disc", "--fixture", "hurwitz"})["disc"] == "2");
    CHECK(result({"order", "level", "--fixture", "lipschitz"})["level"] == "2");
    CHECK(result({"order", "level", "--fixture", "split-eichler-7"})["level"] == "7");
    CHECK(result({"order", "dual", "--fixture", "hurwitz"})["nrd"] == "1/2");
    CHECK(result({"order", "check", "--fixture", "hurwitz"})["is_order"] == true);
    CHECK(result({"ideal", "nrd", "--fixture", "hurwitz", "--generator", "[1,1,0,0]"})["nrd"] == "2");
    CHECK(result({"ideal", "kernel", "--fixture", "lipschitz", "--scale", "1/2"})["order"] == "16");
    CHECK(result({"ideal", "dual-check", "--fixture", "lipschitz", "--scale", "1/3"})["ok"] == true);
    CHECK(result({"torsion", "units", "--fixture", "split-maximal", "-N", "2"})["count"] == "6");
    CHECK(result({"torsion", "units", "--fixture", "split-maximal", "-N", "3"})["count"] == "48");
    const Json table = result({"torsion", "pairing-table", "--fixture", "split-maximal", "-N", "2"});
    CHECK(table["table"].size() == 16);
    CHECK(table["table"][0][0] == "0");
    const Json basis = result({"torsion", "basis", "--fixture", "split-maximal", "-N", "3", "--phi",
                               "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"});
    CHECK(basis["reconstruction"] == true);
    CHECK(basis["P"] == Json::parse(R"(["1","0","0","0"])"));
    const Json defect = result({"torsion", "defect", "--fixture", "lipschitz", "-N", "5", "--group", "klein", "--r",
                                "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"});
    CHECK(defect["central"] == true);
    CHECK(defect.contains("cocycle"));
  }

  TEST_CASE("cosets, moduli and cm commands") {
    CHECK(result({"cosets", "enumerate", "--fixture", "split-maximal", "-N", "3", "--gamma", "all", "--endo", "scalars"})["reps"]
              .size() == 1);
    CHECK(result({"cosets", "enumerate", "--fixture", "split-maximal", "-N", "2"})["reps"].size() == 6);
    const Json act = result({"cosets", "act", "--fixture", "split-maximal", "-N", "2", "--rho", "[1,0,0,0]"});
    CHECK(act["perm"] == Json::parse("[0,1,2,3,4,5]"));
    CHECK(result({"moduli", "kernel", "--small", "split-eichler-2", "--big", "split-maximal", "-N", "4"})["order"] == "2");
    CHECK(result({"moduli", "lambda", "--small", "lipschitz", "--big", "hurwitz", "-N", "2", "--point", "[0,0,0,0]"})["index"] ==
          "2");
    CHECK(result({"cm", "embed", "-a", "-1", "-b", "-1", "-d", "2"})["x"] == Json::parse(R"(["0","1","1","0"])"));
    CHECK(result({"cm", "j", "-a", "-1", "-b", "-1", "-d", "1"})["j"] == Json::parse(R"(["0","0","1","0"])"));
    CHECK(result({"cm", "optimal-order", "--fixture", "lipschitz", "-x", "[0,1,1,1]"})["discriminant"] == "-12");
    const Json part = result({"cm", "normalizer", "--fixture", "split-maximal", "-N", "3", "-d", "1"});
    CHECK(part["K"].size() + part["jK"].size() + part["neither"].size() == 48);
  }

  TEST_CASE("cocycle commands") {
    const Json split = result({"cocycle", "split", "--cocycle", "sign"});
    CHECK(split["split"] == false);
    CHECK(split["obstruction"]["sign_solvable"] == false);
    const Json cob = result({"cocycle", "coboundary", "--alpha", "[\"1\",\"2\"]"});
    CHECK(cob["cocycle"][1][1] == Json::parse(R"({"sign":1,"exp":{"2":2}})"));
    CHECK(result({"cocycle", "class-eq", "--group", "klein", "--cocycle", "sign", "--cocycle2", "sign"})["equal"] == true);
    CHECK(result({"cocycle", "class-eq", "--cocycle", "sign"})["equal"] == false);
    const Json tw = result({"cocycle", "twisted-mul", "--cocycle", "sign", "-a", "-1", "-b", "-1", "--lhs",
                            R"({"b":[1,0,0,0],"sigma":1})", "--rhs", R"({"b":[1,0,0,0],"sigma":1})"});
    CHECK(tw["b"] == Json::parse(R"(["-1","0","0","0"])"));
    CHECK(tw["sigma"] == 0);
  }

  TEST_CASE("errors and exit codes") {
    Outcome o = run({"order", "disc", "--fixture", "nonsense"});
    CHECK(o.code == 1);
    CHECK(error_code(o) == "UnknownFixture");
    o = run({"algebra", "frobnicate"});
    CHECK(o.code == 2);
    CHECK(error_code(o) == "UsageError");
    o = run({"algebra", "info", "-a", "-1"});
    CHECK(o.code == 2);
    o = run({"algebra", "inverse", "-a", "1", "-b", "1", "-x", "[1,1,0,0]"});
    CHECK(o.code == 1);
    CHECK(error_code(o) == "ZeroNorm");
    o = run({"algebra", "mul", "-a", "1", "-b", "1", "-x", "[1,2", "-y", "[0,0,0,0]"});
    CHECK(o.code == 2);
    CHECK(error_code(o) == "ParseError");
    o = run({"torsion", "units", "--fixture", "hurwitz", "-N", "13"});
    CHECK(o.code == 1);
    CHECK(error_code(o) == "LevelTooLarge");
    CHECK(run({}).code == 2);
  }

  TEST_CASE("JSON input files and determinism") {
    const std::string path = "qmi_cli_test_input.json";
    {
      std::ofstream f(path);
      f << R"({"order": {"fixture": "hurwitz"}, "N": 3, "gamma": "scalars", "endo": "scalars"})";
    }
    const Outcome a = run({"--json-in", path, "cosets", "enumerate"});
    const Outcome b = run({"--json-in", path, "cosets", "enumerate"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // the emitted order is accepted back
    const Json order = result({"order", "check", "--fixture", "split-eichler-3"})["order"];
    {
      std::ofstream f(path);
      f << Json{{"order", order}}.dump();
    }
    CHECK(result({"--json-in", path, "order", "disc"})["disc"] == "3");
    std::remove(path.c_str());
    CHECK(run({"--json-in", "does-not-exist.json", "order", "disc"}).code == 2);
  }

  TEST_CASE("the installed binary") {
    Outcome o = run_binary("algebra info -a -1 -b -1");
    CHECK(o.code == 0);
    CHECK(o.out == "{\"disc\":\"2\",\"ramified\":[\"2\",\"inf\"]}\n");
    CHECK(run_binary("order disc --fixture nonsense").code == 1);
    CHECK(run_binary("--no-such-flag").code == 2);
  }
}
