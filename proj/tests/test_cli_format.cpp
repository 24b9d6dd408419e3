#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "leibkit/format.hpp"

using namespace leib;

namespace {

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/leibkit_test_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(LEIBKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string buf;
  char chunk[4096];
  std::size_t n;
  while ((n = fread(chunk, 1, sizeof chunk, pipe)) > 0) buf.append(chunk, n);
  int rc = pclose(pipe);
  if (output) *output = buf;
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("round trip on every builder") {
  std::vector<LeibnizAlgebra> algebras = {
      heisenberg_example(2),
      heisenberg_example(3),
      counterexample(2),
      counterexample(3),
      sl2(FieldSpec::rationals()),
      sl2(FieldSpec::gf(5)),
      abelian_algebra(FieldSpec::gf(2), 3),
      type2(make_type2_spec(FieldSpec::gf(3), 2, 2, {1, 2, 2, 1},
                            Type2Spec::RightMode::Negate),
            FieldSpec::gf(3)),
  };
  for (const auto& a : algebras) {
    std::string text = emit_algebra(a);
    LeibnizAlgebra back = parse_algebra(text);
    CHECK(back == a);
    CHECK(back.labels() == a.labels());
    CHECK(emit_algebra(back) == text);  // emission is canonical
  }
}

TEST_CASE("parsing accepts comments, blank lines, and scrambled products") {
  std::string text =
      "leibniz-sc 1\n"
      "# a two-dimensional example\n"
      "field GF 3\n"
      "\n"
      "dim 2\n"
      "basis a b\n"
      "p 1 0 : 1*2   # b a = 2b\n"
      "p 0 1 : 1*1\n";
  LeibnizAlgebra a = parse_algebra(text);
  CHECK(a.dim() == 2);
  CHECK(a.sc(1, 0, 1) == Scalar::of(a.field(), 2));
  CHECK(a.sc(0, 1, 1) == Scalar::one(a.field()));
  CHECK(a.labels() == std::vector<std::string>{"a", "b"});
  // Emission sorts: the (0,1) line comes first.
  std::string canon = emit_algebra(a);
  CHECK(canon.find("p 0 1") < canon.find("p 1 0"));
}

TEST_CASE("rational coefficients round trip in lowest terms") {
  std::string text =
      "leibniz-sc 1\nfield Q\ndim 2\np 0 1 : 1*1/2 + 0*-3\n";
  LeibnizAlgebra a = parse_algebra(text, true);
  CHECK(a.sc(0, 1, 1) == Scalar::rational(1, 2));
  CHECK(a.sc(0, 1, 0) == Scalar::of(a.field(), -3));
  std::string canon = emit_algebra(a);
  CHECK(canon.find("0*-3 + 1*1/2") != std::string::npos);
}

TEST_CASE("parse errors carry line positions") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_algebra(text);
      FAIL("expected a parse error");
    } catch (const FormatError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("", 0);
  expect_error("nonsense\n", 1);
  expect_error("leibniz-sc 1\nfield GF 4\n", 2);
  expect_error("leibniz-sc 1\nfield Q\ndim 2\np 5 0 : 0*1\n", 4);
  expect_error("leibniz-sc 1\nfield Q\ndim 2\np 0 0 : 0*1\np 0 0 : 0*1\n", 5);
  expect_error("leibniz-sc 1\nfield GF 5\ndim 1\np 0 0 : 0*7\n", 4);
  expect_error("leibniz-sc 1\nfield Q\ndim 2\nbasis a\n", 4);
}

TEST_CASE("validation distinguishes parse failures from identity failures") {
  // b0 b0 = b0 breaks the defining identity.
  std::string bad = "leibniz-sc 1\nfield Q\ndim 1\np 0 0 : 0*1\n";
  CHECK_THROWS_AS(parse_algebra(bad), LeibnizViolationError);
  CHECK_NOTHROW(parse_algebra(bad, true));
}

TEST_CASE("report text surfaces the headline facts") {
  StructureReport rep = structure_report(counterexample(2));
  std::string text = report_text(rep);
  CHECK(text.find("F(A) = span{z}") != std::string::npos);
  CHECK(text.find("F is ideal: false") != std::string::npos);
  CHECK(text.find("elementary: false") != std::string::npos);
  std::string json = report_json(rep);
  CHECK(json.find("\"frattini_subalgebra_is_ideal\": false") != std::string::npos);

  StructureReport qrep = structure_report(sl2(FieldSpec::rationals()));
  std::string qtext = report_text(qrep);
  CHECK(qtext.find("unsupported(") != std::string::npos);
}

TEST_CASE("cli validate exit codes") {
  std::string good = tmp_file("good.lz", emit_algebra(counterexample(2)));
  std::string bad =
      tmp_file("bad.lz", "leibniz-sc 1\nfield Q\ndim 1\np 0 0 : 0*1\n");
  std::string empty = tmp_file("empty.lz", "");
  std::string out;
  CHECK(run_cli("validate " + good, &out) == 0);
  CHECK(out.find("ok") != std::string::npos);
  CHECK(run_cli("validate " + bad, &out) == 1);
  CHECK(out.find("(0,0,0)") != std::string::npos);
  CHECK(run_cli("validate " + empty) == 2);
  CHECK(run_cli("validate /nonexistent/file.lz") == 2);
}

TEST_CASE("cli report and check") {
  std::string good = tmp_file("good.lz", emit_algebra(counterexample(2)));
  std::string out;
  CHECK(run_cli("report " + good, &out) == 0);
  CHECK(out.find("F is ideal: false") != std::string::npos);
  CHECK(run_cli("report --json " + good, &out) == 0);
  CHECK(out.find("\"dim\": 5") != std::string::npos);

  CHECK(run_cli("check all " + good, &out) == 0);
  CHECK(out.find("socle_chain: Pass") != std::string::npos);
  CHECK(run_cli("check socle_chain_equality " + good, &out) == 0);
  CHECK(out.find("Pass") != std::string::npos);
  CHECK(run_cli("check bogus " + good) == 2);
}

TEST_CASE("cli example generation round trips through validate") {
  std::string path = "/tmp/leibkit_test_gen.lz";
  CHECK(run_cli("example counter --p 2 -o " + path) == 0);
  LeibnizAlgebra a = parse_algebra_file(path);
  CHECK(a == counterexample(2));
  CHECK(run_cli("validate " + path) == 0);

  std::string out;
  CHECK(run_cli("example heisenberg --p 3", &out) == 0);
  CHECK(parse_algebra(out) == heisenberg_example(3));
  CHECK(run_cli("example counter --p 9") == 2);   // not a prime
  CHECK(run_cli("example nosuch --p 2") == 2);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run_cli("") == 2);
  CHECK(run_cli("report") == 2);
  CHECK(run_cli("validate --bogus x") == 2);
}
