#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualkit/suites.hpp"

using namespace dualkit;

namespace {
std::string witness_of(const Report& r, const std::string& check) {
  const CheckResult* it = r.find(check);
  REQUIRE(it != nullptr);
  return it->witness;
}
}  // namespace

TEST_CASE("every suite passes at its default scale") {
  const struct {
    const char* name;
    std::size_t items;
  } expected[] = {
      {"ultrafilter-oracle", 12}, {"axiom-equivalences", 151},
      {"atom-determinacy", 6},    {"cluster-duality", 51},
      {"devries-transform", 13},  {"omega", 51},
      {"rc-calculus", 41},        {"t4-lemma", 4},
      {"lifting", 69},            {"roundtrips", 288},
      {"devries-core", 82},       {"survey-normal", 28},
  };
  const auto names = suite_names();
  REQUIRE(names.size() == std::size(expected));
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(names[i] == expected[i].name);
    const Report r = run_suite(names[i]);
    CHECK(r.all_pass());
    CHECK(r.first_failure().empty());
    CHECK(r.items.size() == expected[i].items);
  }
}

TEST_CASE("census witnesses are frozen") {
  const Report cd = run_suite("cluster-duality");
  CHECK(witness_of(cd, "transitive-relations") == "23");
  CHECK(witness_of(cd, "normal-relations") == "4");
  // a non-transitive relation records its disagreeing counts as data
  CHECK(witness_of(cd, "A3[0-1 1-2].enumeration-census") ==
        "via-ultrafilters=3 brute=2");

  const Report tr = run_suite("devries-transform");
  CHECK(witness_of(tr, "exhaustive-maps") == "123");
  CHECK(witness_of(tr, "exhaustive-pairs") == "5733");
  CHECK(witness_of(tr, "random-pool-relations") == "5");
  CHECK(witness_of(tr, "random-pairs-accepted") == "1000 of 5045 draws");

  const Report rc = run_suite("rc-calculus");
  CHECK(witness_of(rc, "irreducible-maps") == "227");
  CHECK(witness_of(rc, "dense-subsets") == "110");
  CHECK(witness_of(rc, "dense-contact-preserved") == "107");
  CHECK(witness_of(rc, "spaces-covered") == "34");

  const Report t4 = run_suite("t4-lemma");
  CHECK(witness_of(t4, "t4-codomains") == "3");
  CHECK(witness_of(t4, "closed-irreducible-onto-t4-maps") == "17");
  CHECK(witness_of(t4, "squares-checked") == "186554");

  const Report li = run_suite("lifting");
  CHECK(witness_of(li, "graph-coreflective.objects") == "6");
  CHECK(witness_of(li, "graph-coreflective.morphisms") == "75");
  CHECK(witness_of(li, "graph-reflective.objects") == "6");
  CHECK(witness_of(li, "graph-reflective.morphisms") == "75");
  CHECK(witness_of(li, "surjection.objects") == "4");
  CHECK(witness_of(li, "surjection.morphisms") == "32");
  CHECK(witness_of(li, "surjection.largest-collapsed-class") == "4");

  const Report ro = run_suite("roundtrips");
  CHECK(witness_of(ro, "equivalence.census") ==
        "algebras=8 covers=17 morphisms=610");
  CHECK(witness_of(ro, "fullness-morphisms") == "14");
  CHECK(witness_of(ro, "pairs-extensions.census") ==
        "6 member sets, 2 universal pairs, 3 extensions, 3 universal, "
        "8+23 arrows");

  const Report dc = run_suite("devries-core");
  CHECK(witness_of(dc, "normal-algebras") == "2");
  CHECK(witness_of(dc, "morphisms-checked") == "8");

  const Report ao = run_suite("axiom-equivalences");
  CHECK(witness_of(ao, "relations-checked") == "75");
}

TEST_CASE("rendering is deterministic and seed-sensitive only where random") {
  const SuiteOptions seed1{0, 0, 1};
  const SuiteOptions seed2{0, 0, 2};
  CHECK(render_report(run_suite("devries-transform", seed1)) ==
        render_report(run_suite("devries-transform", seed1)));
  // another seed draws another sample but the laws still hold
  const Report other = run_suite("devries-transform", seed2);
  CHECK(other.all_pass());
  CHECK(witness_of(other, "random-pairs-accepted") != "1000 of 5045 draws");
  CHECK(render_report(run_suite("omega", seed1)) ==
        render_report(run_suite("omega", seed2)));
}

TEST_CASE("rendered lines carry verdict and witness") {
  const std::string text = render_report(run_suite("ultrafilter-oracle"));
  CHECK(text.find("count-equals-atom-count PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  Report r;
  r.add("good", true);
  r.add("bad", false, "a={0}");
  const std::string two = render_report(r);
  CHECK(two == "good PASS\nbad FAIL a={0}\n");
}

TEST_CASE("smaller bounds shrink the scope") {
  const Report small = run_suite("cluster-duality", {2, 0, 1});
  CHECK(small.all_pass());
  CHECK(witness_of(small, "transitive-relations") == "3");
  const Report tiny = run_suite("ultrafilter-oracle", {1, 0, 1});
  CHECK(tiny.items.size() == 3u);
}

TEST_CASE("unknown names and oversized bounds are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), ValidationError);
  CHECK_THROWS_AS(run_suite("atom-determinacy", {4, 0, 1}), ValidationError);
  CHECK_THROWS_AS(run_suite("devries-transform", {3, 0, 1}), ValidationError);
  CHECK_THROWS_AS(run_suite("rc-calculus", {0, 5, 1}), ValidationError);
  CHECK_THROWS_AS(run_suite("t4-lemma", {0, 4, 1}), ValidationError);
}
