#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "wittgrass/grassmannian.hpp"
#include "wittgrass_cli/cli.hpp"

using namespace wittgrass;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WITTGRASS_CLI_DATA) + "/" + name; }

Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = call(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("dominance example lists every method and the witness") {
  const auto j = json_of({"dominance", "--lhs", "2", "--rhs", "1,1"});
  CHECK(j["result"]["verdict"] == true);
  CHECK(j["result"]["methods"].size() == 4);
  for (const auto& m : j["result"]["methods"]) CHECK(m["verdict"] == true);
  CHECK(j["result"]["witness"] == Json::array({1}));
  CHECK(call({"dominance", "--lhs", "2", "--rhs", "1,1"}).out.find("witness: eps_1") != std::string::npos);

  const auto no = json_of({"dominance", "--lhs", "2,2", "--rhs", "3,1"});
  CHECK(no["result"]["verdict"] == false);
  CHECK(no["result"]["witness"].is_null());
}

TEST_CASE("count example and agreement with the library") {
  const auto r = call({"count", "--n", "3", "--c", "2", "--q", "2", "--type", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "42\n");

  const auto j = json_of({"count", "--n", "3", "--c", "2", "--q", "3"});
  const auto table = stratum_counts(3, 2, 3);
  REQUIRE(j["result"]["strata"].size() == table.counts.size());
  std::size_t i = 0;
  for (const auto& [lambda, count] : table.counts) {
    CHECK(j["result"]["strata"][i]["type"] == Json(lambda.parts()));
    CHECK(j["result"]["strata"][i]["count"] == count);
    ++i;
  }
  CHECK(j["result"]["total"] == table.total());

  const auto leq = json_of({"count", "--n", "3", "--c", "2", "--q", "2", "--type", "2,1", "--leq"});
  CHECK(leq["result"]["query"]["count"] == 43);
}

TEST_CASE("witt-laws example") {
  const auto j = json_of({"witt-laws", "--p", "2", "--m", "2"});
  CHECK(j["result"]["sum"][1] == "X_1 + Y_1 - X_0*Y_0");
  CHECK(j["result"]["product"][0] == "X_0*Y_0");
  CHECK(j["result"]["ghost_identities"] == true);
  CHECK(call({"witt-laws", "--p", "2", "--m", "2"}).out.find("S_1 = X_1 + Y_1 - X_0*Y_0\n") != std::string::npos);
}

TEST_CASE("demazure example numbers") {
  const auto j = json_of({"demazure", "--n", "3", "--type", "2,1", "--q", "2"});
  const auto& res = j["result"];
  CHECK(res["chains"] == 49);
  CHECK(res["identity"]["holds"] == true);
  REQUIRE(res["strata"].size() == 2);
  CHECK(res["strata"][0]["type"] == Json::array({1, 1, 1}));
  CHECK(res["strata"][0]["fiber_sizes"][0]["fiber_size"] == 7);
  CHECK(res["strata"][1]["stratum_size"] == 42);
  CHECK(res["strata"][1]["fiber_sizes"][0]["fiber_size"] == 1);
  CHECK(res["strata"][1]["fiber_sizes"][0]["points"] == 42);
}

TEST_CASE("matrix commands") {
  const auto snf = json_of({"snf", "--matrix", data("iso_21.txt")});
  CHECK(snf["result"]["type"] == Json::array({2, 1}));
  CHECK(snf["result"]["length"] == 3);
  const auto det = call({"det", "--matrix", data("iso_21.txt")});
  CHECK(det.code == 0);
  CHECK(det.out == "(1, 3)\n");
  CHECK(call({"det", "--matrix", data("iso_21.txt"), "--chain", data("chain_21.txt")}).code == 0);
  const auto t = call({"tame", "--p", "5", "-a", "p^1*(2)", "-b", "p^0*(3)"});
  CHECK(t.out == "2\n");  // 1/3 mod 5
  const auto c = json_of({"cocycle", "--p", "3", "--n", "2", "--g", data("torus_p.txt"), "--h", data("torus_unit.txt")});
  CHECK(c["result"]["commute"] == true);
  CHECK(c["result"].contains("pairing"));
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kInputError);
  CHECK(call({"bogus"}).code == cli::kInputError);
  CHECK(call({"count", "--n", "3"}).code == cli::kInputError);
  CHECK(call({"count", "--n", "2", "--c", "1", "--q", "6"}).code == cli::kInputError);
  CHECK(call({"dominance", "--lhs", "1,2", "--rhs", "1"}).code == cli::kInputError);
  CHECK(call({"--json", "--csv", "count", "--n", "2", "--c", "1", "--q", "2"}).code == cli::kInputError);
  CHECK(call({"--help"}).code == cli::kOk);
  CHECK(call({"snf", "--matrix", data("missing.txt")}).code == cli::kInputError);

  const auto bad = call({"snf", "--matrix", data("malformed.txt")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("line 3, column 7") != std::string::npos);

  const auto big = call({"count", "--n", "12", "--c", "12", "--q", "9"});
  CHECK(big.code == cli::kWorkBound);
  CHECK(big.out.empty());

  // A cocycle argument outside SL_n.
  CHECK(call({"cocycle", "--p", "3", "--n", "2", "--g", data("iso_3.txt"), "--h", data("unipotent.txt")}).code == cli::kInputError);
}

TEST_CASE("output is identical across runs and worker counts") {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"count", "--n", "3", "--c", "2", "--q", "3"},
        std::vector<std::string>{"count", "--n", "3", "--c", "2", "--q", "2", "--type", "2,1", "--leq"},
        std::vector<std::string>{"demazure", "--n", "3", "--type", "2,1", "--q", "2", "--fibers"},
        std::vector<std::string>{"demazure", "--n", "3", "--type", "2,2", "--q", "3"}}) {
    for (const std::string fmt : {"--json", "--csv", ""}) {
      std::vector<std::string> base;
      if (!fmt.empty()) base.push_back(fmt);
      auto one = base, four = base;
      one.insert(one.end(), {"--workers", "1"});
      four.insert(four.end(), {"--workers", "4"});
      one.insert(one.end(), cmd.begin(), cmd.end());
      four.insert(four.end(), cmd.begin(), cmd.end());
      const auto a = call(one), b = call(one), c = call(four);
      REQUIRE(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(a.out == c.out);
    }
  }
}

TEST_CASE("seeded checks repeat exactly") {
  const std::vector<std::string> cmd{"--json", "--seed", "7", "cocycle", "--p", "3", "--n", "2", "--g", data("torus_p.txt"),
                                     "--h", data("unipotent.txt"), "--check", "5"};
  const auto a = call(cmd), b = call(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["result"]["check"]["holds"] == 5);
}
