#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "chowrank/io.hpp"

using namespace chowrank;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CHOWRANK_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/chowrank_test_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

} // namespace

TEST_CASE("data files parse exactly and round trip") {
  const std::string text =
      R"({"ambient":"grass","n":4,"a":[1,1],"alpha":["2","4"],"lambda":["12","8"]})";
  const ParsedData data = parse_data_file(text);
  CHECK(data.kind == AmbientKind::GrassLines);
  CHECK(data.grass->a == std::vector<Rational>{1, 1});
  CHECK(data.grass->alpha == std::vector<Rational>{2, 4});
  const std::string rendered = data_file_json(data).dump();
  const ParsedData again = parse_data_file(rendered);
  CHECK(data_file_json(again).dump() == rendered);

  const std::string prod =
      R"({"ambient":"prodproj","n":3,"a":["1/2",2],"alpha":[1,"2/3",1],"lambda":[3,3]})";
  const ParsedData pdata = parse_data_file(prod);
  CHECK(pdata.prod->a == std::vector<Rational>{Rational(1, 2), 2});
  CHECK(data_file_json(parse_data_file(data_file_json(pdata).dump())).dump() ==
        data_file_json(pdata).dump());

  for (const char* misc : {
           R"({"ambient":"projective","d":4,"delta":6,"mu":9})",
           R"({"ambient":"quadric_even","d":1,"alpha1":1,"alpha2":0,"mu":0})",
           R"({"ambient":"quadric_odd","n":7,"d":2,"alpha1":3,"alpha2":3,"mu":9})",
           R"({"ambient":"blowup_p6","a1":2,"a2":1,"alpha1":2,"alpha2":0,"lambda1":2,"lambda2":0})",
           R"({"ambient":"curve_x_p5","a1":1,"a2":2,"alpha1":1,"alpha2":2,"lambda1":1,"lambda2":2})",
       }) {
    const ParsedData d = parse_data_file(misc);
    CHECK(data_file_json(parse_data_file(data_file_json(d).dump())).dump() ==
          data_file_json(d).dump());
  }
}

TEST_CASE("malformed data files are rejected with a message") {
  CHECK_THROWS_AS(parse_data_file("{"), ParseError);
  CHECK_THROWS_AS(parse_data_file(R"({"n":4})"), ParseError);
  CHECK_THROWS_AS(parse_data_file(R"({"ambient":"nope","n":4})"), ParseError);
  CHECK_THROWS_AS(parse_data_file(R"({"ambient":"grass","n":4,"a":[1],"alpha":[1,1],"lambda":[1,1]})"),
                  ParseError); // wrong shape
  CHECK_THROWS_AS(parse_data_file(R"({"ambient":"grass","n":4,"a":[1,1.5],"alpha":[1,1],"lambda":[1,1]})"),
                  ParseError); // float rejected
  CHECK_THROWS_AS(parse_data_file(R"({"ambient":"projective","d":"1/0","delta":1,"mu":1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_data_file(R"({"ambient":"quadric_even","n":5,"d":1,"alpha1":1,"alpha2":1,"mu":2})"),
                  ParseError); // parity mismatch
}

TEST_CASE("certificates serialize deterministically and round trip") {
  const ParsedData data = parse_data_file(
      R"({"ambient":"grass","n":4,"a":[1,1],"alpha":[2,4],"lambda":[12,8]})");
  const RankCertificate cert = analyze(data);
  const auto j = certificate_json(cert);
  CHECK(j.at("conclusion").at("kind") == "rank_one");
  CHECK(j.at("conclusion").at("q") == "2");
  CHECK(j.dump() == certificate_json(analyze(data)).dump()); // byte-stable
  const RankCertificate back = certificate_from_json(j);
  CHECK(certificate_json(back).dump() == j.dump());

  const ParsedData nf = parse_data_file(
      R"({"ambient":"quadric_even","d":1,"alpha1":1,"alpha2":0,"mu":0})");
  const auto nfj = certificate_json(analyze(nf));
  CHECK(nfj.at("conclusion").at("kind") == "not_forced");
  CHECK(certificate_json(certificate_from_json(nfj)).dump() == nfj.dump());
}

TEST_CASE("report json carries the instance key") {
  const auto reports = run_suite(SuiteId::Psigma, 4, 4);
  REQUIRE(reports.size() == 4);
  const auto j = report_json(reports[0]);
  CHECK(j.at("identity") == "psigma_decomposition");
  CHECK(j.at("n") == 4);
  CHECK(j.at("status") == "verified");
  CHECK(j.at("residual") == "0");
  CHECK(j.at("eval_samples") == 20);
  CHECK(j.at("eval_value_mismatches") == 0);
  CHECK(j.at("sigma").is_string());
}

TEST_CASE("cli exit codes") {
  const std::string grass = write_temp(
      "g4.json", R"({"ambient":"grass","n":4,"a":[1,1],"alpha":[2,4],"lambda":[12,8]})");
  const std::string hyp = write_temp(
      "hyp.json", R"({"ambient":"grass","n":5,"a":[1,0],"alpha":[1,2,1],"lambda":[3,3]})");
  const std::string bad = write_temp(
      "bad.json", R"({"ambient":"prodproj","n":3,"a":[1,1],"alpha":[1,2,1],"lambda":[3,4]})");
  const std::string junk = write_temp("junk.json", "not json");

  CHECK(run_cli("analyze " + grass) == 0);
  CHECK(run_cli("analyze " + hyp) == 3);
  CHECK(run_cli("analyze " + bad) == 4);
  CHECK(run_cli("analyze " + junk) == 2);
  CHECK(run_cli("analyze /tmp/chowrank_no_such_file.json") == 2);

  CHECK(run_cli("verify quadric") == 0);
  CHECK(run_cli("verify bogus-suite") == 2);
  CHECK(run_cli("verify grass --n-min 4 --n-max 5") == 0);

  CHECK(run_cli("matrix " + grass) == 0);
  CHECK(run_cli("matrix " + junk) == 2);
  CHECK(run_cli("sigma 4") == 0);
  CHECK(run_cli("sigma " + grass) == 2); // sigma needs a prodproj a-chain
}

TEST_CASE("matrix command prints the labeled layout") {
  const std::string path = write_temp(
      "m3.json", R"({"ambient":"prodproj","n":3,"a":[1,1],"alpha":[1,2,1],"lambda":[3,3]})");
  const std::string cmd = std::string(CHOWRANK_CLI) + " matrix " + path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  pclose(pipe);
  CHECK(out.find("H1^2") != std::string::npos);
  CHECK(out.find("D*H1") != std::string::npos);
  // three labeled rows, column-aligned values
  CHECK(out.find("H1 ") != std::string::npos);
  CHECK(out.find("H2 ") != std::string::npos);
  CHECK(out.find("D ") != std::string::npos);
  CHECK(out.find("3") != std::string::npos);
}

TEST_CASE("verify writes one json line per instance") {
  const std::string out = "/tmp/chowrank_test_reports.jsonl";
  CHECK(run_cli("verify psigma --n-min 4 --n-max 5 --jobs 2 --out " + out) == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = ordered_json::parse(line);
    CHECK(j.at("status") == "verified");
    ++lines;
  }
  CHECK(lines == 4 + 8);
}
