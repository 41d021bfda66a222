#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "jseq/constructions.hpp"
#include "jseq/periodicity.hpp"
#include "jseq/serialize.hpp"

namespace jseq {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(CliExpand, Golden) {
  Result r = run({"expand", "--number", "e", "--terms", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "2,1,2,1,1,4,1,1,6,1");
  EXPECT_EQ(r.out, "2,1,2,1,1,4,1,1,6,1\n2,1,2,1,1,4,1,1,2,1\n");
  EXPECT_EQ(first_line(run({"expand", "--number", "coth", "--param", "1", "--terms", "4"}).out), "1,3,5,7");
  EXPECT_EQ(first_line(run({"expand", "--digits", "1,1,1", "--terms", "3"}).out), "1,1,1");
  EXPECT_EQ(first_line(run({"expand", "--pre", "1", "--period", "2", "--terms", "4"}).out), "1,2,2,2");
}

TEST(CliExpand, Json) {
  Result r = run({"expand", "--number", "e", "--terms", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["digits"], "2,1,2");
  EXPECT_EQ(j["four_representative"], "2,1,2");
}

TEST(CliJacobi, Golden) {
  EXPECT_EQ(first_line(run({"jacobi", "--number", "e2", "--terms", "2"}).out), "+*");
  EXPECT_EQ(first_line(run({"jacobi", "--digits", "1,1,1,1,1", "--terms", "5"}).out), "++*--");
  Result r = run({"jacobi", "--number", "e", "--terms", "500", "--engine", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), to_string(jacobi_sequence_oracle(named_stream("e"), 500)));
  json j = json::parse(run({"jacobi", "--number", "e", "--terms", "3", "--json"}).out);
  EXPECT_EQ(j["sequence"], "++-");
  EXPECT_EQ(j["terms"], 3);
}

TEST(CliPeriod, Golden) {
  json e = json::parse(run({"period", "--number", "e"}).out);
  EXPECT_EQ(e["length"], 24);
  EXPECT_EQ(e["pure"], true);
  EXPECT_EQ(e["period"], "++-*-*---*-*--+*+*+++*+*");
  EXPECT_EQ(e["certificate"]["L"], 24);
  EXPECT_EQ(json::parse(run({"period", "--number", "e2"}).out)["length"], 40);
  EXPECT_EQ(json::parse(run({"period", "--digits-periodic", "1,2,2"}).out)["length"], 36);
}

TEST(CliPeriod, MatchesLibrary) {
  DigitStream s = DigitStream::eventually_periodic({3}, {1, 2, 2});
  PeriodDescriptor d = detect_period(s, default_transducer());
  json j = json::parse(run({"period", "--pre", "3", "--period", "1,2,2"}).out);
  EXPECT_EQ(j["period"], to_string(d.period));
  EXPECT_EQ(j["pre_period"], to_string(d.pre_period));
}

TEST(CliVerify, Golden) {
  Result r = run({"verify", "--period", "1,2,1,1,4,1", "--L", "24"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["matrix"], json::parse("[[9286113,7622528],[6669712,5474849]]"));
  EXPECT_EQ(json::parse(run({"verify", "--period", "1,2,1,1,4,1", "--L", "6"}).out)["ok"], false);
  EXPECT_EQ(run({"verify", "--period", "1,2,1,1,4,1", "--L", "7"}).code, 2);
}

TEST(CliScan, Golden) {
  json j = json::parse(run({"scan", "--max-len", "12"}).out);
  EXPECT_EQ(j["hits"], 0);
  EXPECT_EQ(j["words_checked"], 22369620);
  json s = json::parse(run({"scan", "--symbols", "+-++-"}).out);
  EXPECT_EQ(s, json::parse(R"([{"pattern":"-++-","position":1}])"));
  EXPECT_EQ(run({"scan", "--symbols", "-++x"}).code, 2);
}

TEST(CliConstruct, Golden) {
  json j = json::parse(run({"construct", "--theorem", "8", "--L", "2"}).out);
  EXPECT_EQ(j["digits"], "{4}");
  EXPECT_EQ(j["period"], "+*");
  json t3 = json::parse(run({"construct", "--theorem", "3", "--gaps", "6", "--terms", "40"}).out);
  EXPECT_EQ(t3["sequence"], std::string(40, '+'));
  json t7 = json::parse(run({"construct", "--theorem", "7", "--L", "4"}).out);
  EXPECT_EQ(t7["period"], "+++-");
  EXPECT_EQ(t7["pre_period"], "+");
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run({"expand", "--number", "pi", "--terms", "3"}).code, 2);
  EXPECT_EQ(run({"period", "--digits", "1,2,3"}).code, 2);
  Result odd = run({"construct", "--theorem", "7", "--L", "5"});
  EXPECT_EQ(odd.code, 2);
  EXPECT_FALSE(odd.err.empty());
  EXPECT_EQ(run({"expand", "--digits", "1,0,2", "--terms", "3"}).code, 2);
  EXPECT_EQ(run({"expand", "--number", "e", "--digits", "1", "--terms", "3"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliOut, WritesFile) {
  auto path = std::filesystem::temp_directory_path() / "jseq_cli_out.txt";
  Result r = run({"--out", path.string(), "jacobi", "--digits", "1,1,1,1,1", "--terms", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "++*--");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace jseq
