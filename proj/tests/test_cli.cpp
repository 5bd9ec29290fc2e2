#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cst/check.hpp"
#include "cst/cli.hpp"
#include "cst/enumerate.hpp"
#include "cst/etg.hpp"
#include "cst/fold.hpp"
#include "cst/graph.hpp"
#include "cst/unfold.hpp"

using namespace cst;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

const Signature kSig = builtin_bintree();
const std::string kShared = "bin(bin(lf(5),lf(6)),bin(ptr(2,1.1),lf(7)))";
const std::string kCyclic = "bin(bin(bin(ptr(3),lf(6)),ptr(1,1)),lf(9))";
const std::string kGraphFile = std::string(CST_GOLDEN_DIR) + "/../data/cyclic_graph.json";

Term parse(const std::string& text, const Signature& sig = kSig) { return *parse_term(text, sig); }

}  // namespace

TEST_CASE("check prints the shape") {
  auto r = run({"check", kShared});
  CHECK(r.code == 0);
  CHECK(r.out == "B(B(L,L),B(P,L))\n");
  CHECK(r.err.empty());
}

TEST_CASE("type errors exit 1 with kind and path") {
  auto r = run({"check", "ptr(1)"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("DanglingIndex at ε") != std::string::npos);
  r = run({"check", "bin(bin(lf(5),ptr(2,2.1)),bin(lf(8),lf(7)))"});
  CHECK(r.code == 1);
  CHECK(r.err.find("InvalidPosition at 1.2") != std::string::npos);
  r = run({"check", "bin(lf(5))"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ArityMismatch") != std::string::npos);
  r = run({"check", "bin(lf(5),"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ParseFailure") != std::string::npos);
}

TEST_CASE("policy flags override the default") {
  const std::string t = "bin(bin(lf(5),ptr(2,2.1)),bin(lf(8),lf(7)))";
  CHECK(run({"--direction", "left-to-right", "check", t}).out == "B(B(L,P),B(L,L))\n");
  CHECK(run({"--direction", "ltr", "check", t}).code == 0);
  CHECK(run({"--direction", "sideways", "check", t}).code == 2);
  const std::string ind = "bin(bin(lf(5),ptr(1,1)),bin(ptr(2,1.2),lf(7)))";
  CHECK(run({"check", ind}).code == 1);
  CHECK(run({"--indirect", "check", ind}).code == 0);
  const std::string inner = "bin(lf(1),bin[ptr(1,1)](lf(2),lf(3)))";
  CHECK(run({"check", inner}).err.find("InnerPtrForbidden") != std::string::npos);
  CHECK(run({"--inner", "check", inner}).code == 0);
}

TEST_CASE("check with a context") {
  auto r = run({"check", "ptr(2,1)", "--ctx", "L", "--ctx", "B(L,L)"});
  CHECK(r.code == 0);
  CHECK(r.out == "P\n");
  CHECK(run({"check", "ptr(1)", "--ctx", "B(L"}).code == 2);
  CHECK(run({"check", "ptr(1)", "--ctx", "Q(L)"}).code == 2);
}

TEST_CASE("input from stdin and from a file") {
  CHECK(run({"check", "-"}, kShared + "\n").out == "B(B(L,L),B(P,L))\n");
  CHECK(run({"check", "-i", "-"}, kShared).out == "B(B(L,L),B(P,L))\n");
  const std::string path = "cli_test_input.txt";
  std::ofstream(path) << kShared << "\n";
  CHECK(run({"check", "--input", path}).out == "B(B(L,L),B(P,L))\n");
  std::remove(path.c_str());
  CHECK(run({"check", "--input", "/nonexistent/term.txt"}).code == 2);
  CHECK(run({"check"}).code == 2);
}

TEST_CASE("output to a file") {
  const std::string path = "cli_test_output.txt";
  auto r = run({"-o", path, "fold", kShared, "--alg", "height"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "3\n");
  std::remove(path.c_str());
}

TEST_CASE("fold subcommand duplicates the library") {
  CHECK(run({"fold", kShared, "--alg", "height"}).out == std::to_string(height(parse(kShared), kSig)) + "\n");
  CHECK(run({"fold", kShared, "--alg", "leaves"}).out == "{5,6,7}\n");
  CHECK(run({"fold", kShared, "--alg", "skeleton"}).out == to_string(skeleton(parse(kShared), kSig)) + "\n");
  CHECK(run({"fold", "ptr(1)", "--alg", "leaves", "--ctx", "B(L,L)"}).out == "{}\n");
  CHECK(run({"fold", kShared, "--alg", "width"}).code == 2);
  CHECK(run({"fold", kShared}).code == 2);
}

TEST_CASE("etg output equals the golden file") {
  auto r = run({"etg", kCyclic});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(CST_GOLDEN_DIR) + "/etg_example.json"));
  CHECK(r.out == print_etg(to_etg(parse(kCyclic), kSig)));
  CHECK(run({"etg", "bin(lf(0),ptr(2))"}).code == 1);
}

TEST_CASE("letrec and unfold duplicate the library") {
  CHECK(run({"letrec", kCyclic}).out == emit_letrec(to_etg(parse(kCyclic), kSig)) + "\n");
  CHECK(run({"unfold", kCyclic, "--depth", "2"}).out == "bin(bin(Truncated,Truncated),lf(9))\n");
  CHECK(run({"unfold", kCyclic, "--depth", "5"}).out == to_string(unfold(parse(kCyclic), 5, kSig)) + "\n");
  CHECK(run({"unfold", kCyclic}).code == 2);
  CHECK(run({"unfold", kCyclic, "--depth", "-1"}).code == 2);
}

TEST_CASE("encode and decode") {
  auto r = run({"encode", kGraphFile});
  CHECK(r.code == 0);
  CHECK(r.out == kCyclic + "\n");
  CHECK(run({"encode", "-"}, slurp(kGraphFile)).out == kCyclic + "\n");
  CHECK(run({"encode", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"encode", "-"}, "{\"root\": \"a\", \"nodes\": []}").code == 1);

  const RootedGraph g = decode(parse(kCyclic), kSig);
  CHECK(run({"decode", kCyclic}).out == print_graph(g));
  CHECK(run({"decode", kCyclic, "--dot"}).out == to_dot(g, kSig));
  CHECK(load_graph(run({"decode", kCyclic}).out) == g);
}

TEST_CASE("enumerate streams tab-separated terms and shapes") {
  auto r = run({"enumerate", "--max", "1", "--ctx", "B(L,L)"});
  CHECK(r.code == 0);
  std::string expected;
  for (const auto& [t, s] : enumerate_terms(kSig, Context({parse_shape("B(L,L)")}), 1))
    expected += print_term(t) + "\t" + to_string(s) + "\n";
  CHECK(r.out == expected);
  CHECK(r.out.find("ptr(1,2)\tP\n") != std::string::npos);
  CHECK(run({"enumerate", "--max", "0"}).code == 2);
}

TEST_CASE("signature files") {
  const std::string path = "cli_test_sig.json";
  std::ofstream(path) << R"({"symbols": [{"name": "cons", "arity": 2}, {"name": "nil", "arity": 0}]})";
  auto r = run({"--sig", path, "check", "cons(nil,cons(ptr(2),nil))"});
  CHECK(r.code == 0);
  CHECK(r.out == "CONS(NIL,CONS(P,NIL))\n");
  std::ofstream(path) << R"({"symbols": []})";
  r = run({"--sig", path, "check", "nil"});
  CHECK(r.code == 2);
  CHECK(r.err.find("signature") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", kShared, "--bogus"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
