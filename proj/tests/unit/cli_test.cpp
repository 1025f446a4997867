/*
 * Copyright 2026 The detident Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli/matrix_io.hpp"
#include "cli/report.hpp"
#include "cli_harness.hpp"
#include "detident/det.hpp"
#include "detident/errors.hpp"
#include "detident/random.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace detident;
using detident::testing::run_cli;
using detident::testing::data_path;
using cli::Json;

namespace {

std::string file(const char* name) { return data_path(std::string("matrices/") + name).string(); }

Json parse_report(const std::string& text) { return Json::parse(text); }

std::string as_text(const Matrix& m) { return cli::format_matrix(m, cli::MatrixFormat::text); }

}  // namespace

TEST_CASE("matrix_text_parsing") {
  std::istringstream in("# c\n2 3\n1 -2 3/6\n\n0 4 -5/1\n");
  const Matrix m = cli::read_matrix(in);
  CHECK(m == Matrix::from_rows({{1, -2, Scalar(1, 2)}, {0, 4, -5}}));
  CHECK(as_text(m) == "2 3\n1 -2 1/2\n0 4 -5\n");

  auto bad = [](const char* text) {
    std::istringstream s(text);
    return cli::read_matrix(s);
  };
  CHECK_THROWS_AS(bad("2 2\n1 2\n3\n"), DimensionError);
  CHECK_THROWS_AS(bad("2 2\n1 2 3\n4 5\n"), DimensionError);
  CHECK_THROWS_AS(bad("2 2\n1 2\n3 4\n5 6\n"), DimensionError);
  CHECK_THROWS_AS(bad("0 2\n"), ParseError);
  CHECK_THROWS_AS(bad("2 2\n1 x\n3 4\n"), ParseError);
  CHECK_THROWS_AS(bad("1 1\n1/0\n"), ParseError);
  CHECK_THROWS_AS(bad(""), ParseError);
}

TEST_CASE("matrix_json_parsing") {
  const Matrix m = cli::read_matrix_json(R"({"rows":2,"cols":2,"entries":[["1/2",-3],[4,"0"]]})");
  CHECK(m == Matrix::from_rows({{Scalar(1, 2), -3}, {4, 0}}));
  CHECK(cli::read_matrix_json(cli::format_matrix(m, cli::MatrixFormat::json)) == m);
  CHECK_THROWS_AS(cli::read_matrix_json(R"({"rows":2,"cols":2,"entries":[[1,2]]})"), DimensionError);
  CHECK_THROWS_AS(cli::read_matrix_json(R"({"rows":1,"cols":1,"entries":[[1.5]]})"), ParseError);
  CHECK_THROWS_AS(cli::read_matrix_json("{"), ParseError);
}

TEST_CASE("corpus_round_trip") {
  const auto files = testing::corpus_files();
  REQUIRE(files.size() >= 20);
  for (const auto& p : files) {
    CAPTURE(p.filename().string());
    std::istringstream none;
    const Matrix m = cli::read_matrix_file(p.string(), none);
    for (auto format : {cli::MatrixFormat::text, cli::MatrixFormat::json}) {
      std::istringstream again(cli::format_matrix(m, format));
      const Matrix back = cli::read_matrix(again);
      CHECK(back == m);
      CHECK(back.rows() == m.rows());
      CHECK(back.cols() == m.cols());
    }
  }
}

TEST_CASE("seeded_round_trip") {
  SeededStream rng(5, 0);
  for (int t = 0; t < 50; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Scalar> entries;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      entries.emplace_back(static_cast<long>(rng.uniform(-50, 50)), static_cast<long>(rng.uniform(1, 12)));
    }
    const Matrix m(rows, cols, entries);
    std::istringstream in(as_text(m));
    CHECK(cli::read_matrix(in) == m);
  }
}

TEST_CASE("det_command") {
  auto r = run_cli({"det", file("identity3.txt")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "det-laplace {\"n\":3} = 1 PASS\n"
        "det-bareiss {\"n\":3} = 1 PASS\n"
        "det-dodgson {\"n\":3,\"fallback_used\":false,\"fallback_depth\":0} = 1 PASS\n"
        "engine-agreement {\"n\":3,\"engines\":[\"laplace\",\"bareiss\",\"dodgson\"]} = 1 PASS\n"
        "summary: 4 checks, 0 failures, PASS\n");

  r = run_cli({"det", file("worked.txt"), "--engine", "dodgson", "--json"});
  CHECK(r.code == 0);
  const Json report = parse_report(r.out);
  REQUIRE(report["results"].size() == 1);
  CHECK(report["results"][0]["check"] == "det-dodgson");
  CHECK(report["results"][0]["value"] == oracle::leibniz_det(fixtures::worked()).to_string());
  CHECK(report["results"][0]["operands"]["fallback_used"] == false);

  r = run_cli({"det", file("zero_interior.txt"), "--engine", "dodgson", "--json"});
  CHECK(parse_report(r.out)["results"][0]["value"] == "60");
  CHECK(parse_report(r.out)["results"][0]["operands"]["fallback_used"] == true);

  r = run_cli({"det", file("wide.txt")});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  r = run_cli({"det", "-"}, "2 2\n1 2\n3 4\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("= -2 PASS") != std::string::npos);

  CHECK(run_cli({"det", "/nonexistent/file.txt"}).code == 2);
  CHECK(run_cli({"det", "-"}, "2 2\n1 2\n").code == 2);
  CHECK(run_cli({"det", file("worked.txt"), "--engine", "gauss"}).code == 2);
}

TEST_CASE("verify_command") {
  auto r = run_cli({"verify", file("identity3.txt"), "--identity", "jacobi"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: 6 checks, 0 failures, PASS") != std::string::npos);

  r = run_cli({"verify", file("worked.txt"), "--json"});
  CHECK(r.code == 0);
  CHECK(parse_report(r.out)["summary"]["pass"] == true);

  SeededStream rng(2024, 0);
  const std::string seeded = as_text(rng.integer_matrix(4, 4, 9));
  r = run_cli({"verify", "-", "--identity", "generalized", "--r", "2", "--json"}, seeded);
  CHECK(r.code == 0);
  const Json report = parse_report(r.out);
  CHECK(report["results"].size() == 6 * 1);  // C(4,2) row choices x C(4,4) column choices
  for (const auto& rec : report["results"]) CHECK(rec["check"] == "generalized-pluecker");

  r = run_cli({"verify", file("random5.txt"), "--identity", "three-term", "--rows", "1,3", "--cols",
               "2,5,1,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("three-term {\"rows\":[1,3],\"cols\":[1,2,4,5]} = 0 PASS") != std::string::npos);

  r = run_cli({"verify", file("worked.txt"), "--identity", "jacobi", "--pair", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("jacobi {\"i\":1,\"j\":3} = 0 PASS\n", 0) == 0);

  r = run_cli({"verify", file("pool2x4.txt"), "--identity", "pluecker", "--json"});
  CHECK(r.code == 0);
  CHECK(parse_report(r.out)["summary"]["checks"].get<int>() > 0);

  // Bad selections.
  CHECK(run_cli({"verify", file("worked.txt"), "--identity", "jacobi", "--pair", "2,2"}).code == 2);
  CHECK(run_cli({"verify", file("worked.txt"), "--identity", "jacobi", "--pair", "1,4"}).code == 2);
  CHECK(run_cli({"verify", file("worked.txt"), "--identity", "three-term"}).code == 2);
  CHECK(run_cli({"verify", file("random5.txt"), "--identity", "three-term", "--rows", "1,2"}).code == 2);
  CHECK(run_cli({"verify", file("random5.txt"), "--identity", "three-term", "--rows", "1,2", "--cols",
                 "1,2,3"})
            .code == 2);
  CHECK(run_cli({"verify", file("worked.txt"), "--pair", "1,2"}).code == 2);
  CHECK(run_cli({"verify", file("worked.txt"), "--identity", "pluecker"}).code == 2);
  CHECK(run_cli({"verify", file("worked.txt"), "--identity", "generalized", "--r", "2"}).code == 2);
}

TEST_CASE("verify_sampling_is_seeded") {
  SeededStream rng(99, 0);
  const std::string big = as_text(rng.integer_matrix(7, 7, 9));
  const auto a = run_cli({"verify", "-", "--identity", "three-term", "--seed", "3", "--json"}, big);
  const auto b = run_cli({"verify", "-", "--identity", "three-term", "--seed", "3", "--json"}, big);
  const auto c = run_cli({"verify", "-", "--identity", "three-term", "--seed", "4", "--json"}, big);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(parse_report(a.out)["results"].size() == cli::kSampledChoices);
}

TEST_CASE("pfaffian_command") {
  auto r = run_cli({"pfaffian", file("antisym2.txt"), "--check", "square"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pfaffian {\"order\":2} = 3 PASS\n"
        "det {\"order\":2} = 9 PASS\n"
        "pfaffian-square {\"order\":2} = 0 PASS\n"
        "summary: 3 checks, 0 failures, PASS\n");

  r = run_cli({"pfaffian", file("antisym4.txt"), "--check", "recurrence", "--json"});
  CHECK(r.code == 0);
  const Json report = parse_report(r.out);
  CHECK(report["results"][0]["value"] == "8");
  CHECK(report["results"][1]["check"] == "jacobi-recurrence");
  CHECK(report["results"][1]["value"] == "0");

  r = run_cli({"pfaffian", file("not_antisym.txt")});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("i=1, j=2") != std::string::npos);

  CHECK(run_cli({"pfaffian", "-"}, "3 3\n0 1 2\n-1 0 3\n-2 -3 0\n").code == 2);
  CHECK(run_cli({"pfaffian", file("wide.txt")}).code == 2);
}

TEST_CASE("embed_command") {
  auto r = run_cli({"embed", file("one_by_one.txt")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "2 2\n0 5\n-5 0\n"
        "# embedding-pfaffian {\"n\":1,\"det\":\"5\"} = 5 PASS\n"
        "# summary: 1 checks, 0 failures, PASS\n");
  std::istringstream emitted(r.out);
  CHECK(cli::read_matrix(emitted) == Matrix{{0, 5}, {-5, 0}});

  r = run_cli({"embed", file("two_by_two.txt"), "--json"});
  CHECK(r.code == 0);
  const Json report = parse_report(r.out);
  CHECK(report["results"][0]["value"] == "-2");
  CHECK(report["results"][0]["operands"]["det"] == "-2");

  r = run_cli({"embed", file("two_by_two.txt"), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(cli::read_matrix_json(r.out) ==
        Matrix{{0, 0, 2, 1}, {0, 0, 4, 3}, {-2, -4, 0, 0}, {-1, -3, 0, 0}});

  SeededStream rng(77, 0);
  const std::string seeded = as_text(rng.integer_matrix(3, 3, 9));
  r = run_cli({"embed", "-", "--minors", "--json"}, seeded);
  CHECK(r.code == 0);
  CHECK(parse_report(r.out)["results"].size() == 1 + 9 + 3);

  CHECK(run_cli({"embed", file("wide.txt")}).code == 2);
  CHECK(run_cli({"embed", "-"}, "garbage").code == 2);
}

TEST_CASE("fuzz_command") {
  const std::vector<std::string> args{"fuzz", "--seed", "42", "--trials", "100", "--size-max", "6",
                                      "--identity", "all", "--json"};
  const auto first = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == run_cli(args).out);
  CHECK(first.out == testing::slurp(data_path("golden/fuzz_seed42.json")));

  auto threaded = args;
  threaded.insert(threaded.end(), {"--jobs", "4"});
  CHECK(run_cli(threaded).out == first.out);

  const Json report = parse_report(first.out);
  CHECK(report["seed"] == 42);
  CHECK(report["summary"]["failures"] == 0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : report.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "seed", "results", "summary"});

  CHECK(run_cli({"fuzz", "--seed", "43", "--trials", "5", "--json"}).out !=
        run_cli({"fuzz", "--seed", "42", "--trials", "5", "--json"}).out);

  CHECK(run_cli({"fuzz", "--trials", "0"}).code == 2);
  CHECK(run_cli({"fuzz", "--size-max", "1"}).code == 2);
  CHECK(run_cli({"fuzz", "--size-max", "11"}).code == 2);
  CHECK(run_cli({"fuzz", "--entry-bound", "0"}).code == 2);
  CHECK(run_cli({"fuzz", "--identity", "nope"}).code == 2);
  CHECK(run_cli({"fuzz", "--trials", "x"}).code == 2);
}

TEST_CASE("exit_codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"verify", "--help"}).out.find("n <= 6") != std::string::npos);

  cli::RunReport report;
  report.results.push_back({"x", Json::object(), "0", true});
  CHECK(cli::exit_code(report) == 0);
  report.results.push_back({"x", Json::object(), "1", false});
  CHECK(cli::exit_code(report) == 1);
  std::ostringstream text;
  report.write_text(text);
  CHECK(text.str().find("summary: 2 checks, 1 failures, FAIL") != std::string::npos);
}
