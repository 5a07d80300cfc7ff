#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualkit/cli.hpp"
#include "dualkit/textio.hpp"

using namespace dualkit;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

}  // namespace

TEST_CASE("usage and unknown subcommands") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"frobnicate"}).err.find("unknown subcommand") !=
        std::string::npos);
  const RunResult help = run({"help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-axioms") != std::string::npos);
  CHECK(help.out.find("survey-normal") != std::string::npos);
  CHECK(run({"check-axioms"}).code == 2);
  CHECK(run({"check-axioms", "a", "b"}).code == 2);
}

TEST_CASE("missing and malformed files exit with an input error") {
  CHECK(run({"check-axioms", "no-such-file.txt"}).code == 2);
  const std::string bad = write_temp("cli_bad.txt", "algebra A\natoms 0\n");
  const RunResult r = run({"check-axioms", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("axiom profiles are printed per algebra block") {
  const std::string path = write_temp(
      "cli_ax.txt", "algebra A\natoms 2\ncontact 0-1\n\nalgebra B\natoms 3\n");
  const RunResult r = run({"check-axioms", path});
  CHECK(r.code == 1);  // the total relation fails the sixth axiom
  CHECK(r.out.find("algebra A [0-1]") != std::string::npos);
  CHECK(r.out.find("algebra B [-]") != std::string::npos);
  CHECK(r.out.find("C6 FAIL a={0}") != std::string::npos);
  CHECK(r.out.find("equiv-C16-I16 PASS") != std::string::npos);

  const std::string good = write_temp("cli_ax2.txt", "algebra B\natoms 3\n");
  CHECK(run({"check-axioms", good}).code == 0);
}

TEST_CASE("clusters are listed with their checks") {
  const std::string path =
      write_temp("cli_cl.txt", "algebra A\natoms 3\ncontact 0-1 0-2 1-2\n");
  const RunResult r = run({"clusters", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("cluster 0 ") != std::string::npos);
  CHECK(r.out.find("count 1") != std::string::npos);
  CHECK(r.out.find("strategies-agree PASS") != std::string::npos);

  const std::string big = write_temp("cli_big.txt", "algebra A\natoms 5\n");
  const RunResult rb = run({"clusters", big});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("too large") != std::string::npos);
}

TEST_CASE("dualize emits the input followed by the duals") {
  const std::string path = write_temp(
      "cli_du.txt",
      "algebra A\natoms 2\ncontact 0-1\n\nspace S\npoints 2\nopen 1\n\n"
      "map f : A -> A\natoms-map 0 -> 0\natoms-map 1 -> 1\n");
  const RunResult r = run({"dualize", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("space Clust(A)") != std::string::npos);
  CHECK(r.out.find("algebra RC(S)") != std::string::npos);
  CHECK(r.out.find("map f^ : A -> A") != std::string::npos);
  // the emitted document is itself parseable
  const Document doc = parse_document(r.out);
  CHECK(doc.algebras.size() == 2u);
  CHECK(doc.spaces.size() == 2u);
  CHECK(doc.maps.size() == 2u);

  // an algebra without contact dualises to its discrete spectrum
  const std::string plain =
      write_temp("cli_du2.txt", "algebra B\natoms 3\n");
  const RunResult rp = run({"dualize", plain});
  CHECK(rp.code == 0);
  CHECK(rp.out.find("space Ult(B)\npoints 3\n") != std::string::npos);

  // pairs gain their booleanization, extensions their trace pair
  const std::string pe = write_temp(
      "cli_du3.txt",
      "algebra A\natoms 2\n\nalgebra Two\natoms 1\n\n"
      "map f0 : A -> Two\natoms-map 0 -> 0\n\n"
      "map f1 : A -> Two\natoms-map 0 -> 1\n\npair P : A f0 f1\n");
  const RunResult rpe = run({"dualize", pe});
  CHECK(rpe.code == 0);
  CHECK(rpe.out.find("algebra P(P)") != std::string::npos);
  CHECK(rpe.out.find("map g(P) : A -> P(P)") != std::string::npos);
  CHECK(rpe.out.find("extension ext(P) : g(P)") != std::string::npos);

  const std::string ext = write_temp(
      "cli_du4.txt",
      "algebra A\natoms 2\n\nalgebra PY\natoms 2\n\n"
      "map g : A -> PY\natoms-map 0 -> 0\natoms-map 1 -> 1\n\n"
      "extension E : g\n");
  const RunResult re = run({"dualize", ext});
  CHECK(re.code == 0);
  CHECK(re.out.find("pair tr(E) : A x0(E) x1(E)") != std::string::npos);

  // oversized inputs are refused before any work happens
  const std::string big =
      write_temp("cli_du5.txt", "algebra H\natoms 7\n");
  CHECK(run({"dualize", big}).code == 2);

  // a name collision with a generated block is reported as input error
  const std::string clash = write_temp(
      "cli_du6.txt", "algebra A\natoms 1\n\nspace Ult(A)\npoints 1\n");
  const RunResult rc = run({"dualize", clash});
  CHECK(rc.code == 2);
  CHECK(rc.err.find("Ult(A)") != std::string::npos);
}

TEST_CASE("verify runs a suite and reports by exit code") {
  const RunResult r = run({"verify", "devries-core", "--max-atoms", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("normal-algebras PASS 2") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  CHECK(run({"verify", "no-such-suite"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "omega", "--bogus", "1"}).code == 2);
  CHECK(run({"verify", "omega", "--max-atoms"}).code == 2);
  CHECK(run({"verify", "omega", "--max-atoms", "two"}).code == 2);
  CHECK(run({"verify", "atom-determinacy", "--max-atoms", "9"}).code == 2);

  const RunResult seeded =
      run({"verify", "devries-transform", "--seed", "7"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out.find("random-pairs-accepted PASS") != std::string::npos);
}

TEST_CASE("survey prints one row per relation") {
  const RunResult r = run({"survey-normal", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("- C1=yes C2=yes C3=yes C4=yes C5=yes C6=yes normal=yes\n")
        != std::string::npos);
  CHECK(r.out.find("0-1 C1=yes C2=yes C3=yes C4=yes C5=yes C6=no normal=no\n")
        != std::string::npos);
  CHECK(r.out.find("normal 1 of 2\n") != std::string::npos);
  CHECK(r.out.find("normal-rows-have-empty-off-diagonal PASS") !=
        std::string::npos);

  CHECK(run({"survey-normal"}).code == 2);
  CHECK(run({"survey-normal", "0"}).code == 2);
  CHECK(run({"survey-normal", "9"}).code == 2);
  CHECK(run({"survey-normal", "x"}).code == 2);
}
