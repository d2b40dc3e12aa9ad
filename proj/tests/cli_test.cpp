#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qglf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TableAllPathsAgree) {
  const auto r = run({"table", "--n", "2", "--q", "2", "--k", "2", "--method", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["command"], "table");
  EXPECT_TRUE(j["agreement"].get<bool>());
  bool found = false;
  for (const auto& e : j["entries"]) {
    if (e["dims"] == nlohmann::json::array({1, 1})) {
      EXPECT_EQ(e["value"], "3");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, ScalarTextOutput) {
  auto r = run({"expected-genus", "--n", "2", "--q", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/3\n");
  r = run({"coeff", "--kind", "b2", "--n", "2", "--t", "1", "--u", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(q - 1)/(q)\n");
  r = run({"coeff", "--kind", "a2", "--n", "3", "--r", "1", "--s", "1", "--q", "2"});
  EXPECT_EQ(r.out, "56\n");
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> base{"oracle", "--n", "3", "--q", "2", "--k", "3"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const auto a = run(one), b = run(four);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--n", "3", "--k", "2"},
           {"verify", "--q", "2", "--k", "2", "--n-max", "3"},
           {"fulman", "--n", "3"},
           {"asympt", "--g", "1", "--q", "2", "--n-max", "6"},
           {"oracle", "--n", "3", "--q", "Sn", "--k", "2"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args.front() << ": " << r.err;
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out) << args.front();
  }
}

TEST(Cli, CsvHeader) {
  const auto r = run({"table", "--n", "2", "--q", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "r1,r2,value");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"table", "--n", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "2", "--q", "sym", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"oracle", "--n", "2", "--q", "4"}).code, 2);
  EXPECT_EQ(run({"coeff", "--kind", "b2", "--n", "2", "--t", "3", "--u", "0"}).code, 2);
  EXPECT_EQ(run({"oracle", "--n", "4", "--q", "2", "--k", "3"}).code, 3);
  EXPECT_EQ(run({"oracle", "--n", "3", "--q", "2", "--k", "2", "--budget", "10"}).code, 3);
  EXPECT_EQ(run({"verify", "--q", "3", "--k", "2", "--n-max", "2"}).code, 0);
}
