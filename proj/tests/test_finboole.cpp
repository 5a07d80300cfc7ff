#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualkit/finboole.hpp"

using namespace dualkit;

TEST_CASE("atom sets behave as finite sets") {
  const AtomSet a = AtomSet::from_bits(0b101);
  const AtomSet b = AtomSet::from_bits(0b011);
  CHECK(a.count() == 2);
  CHECK(a.contains(0));
  CHECK(!a.contains(1));
  CHECK((a | b).bits() == 0b111);
  CHECK((a & b).bits() == 0b001);
  CHECK(a.minus(b).bits() == 0b100);
  CHECK(a.subset_of(AtomSet::from_bits(0b111)));
  CHECK(!a.subset_of(b));
  CHECK(a.meets(b));
  CHECK(!AtomSet().meets(a));
  CHECK(a.to_string() == "{0,2}");
  CHECK(AtomSet().to_string() == "{}");
  CHECK(AtomSet::single(3).bits() == 8);
}

TEST_CASE("algebra carrier and lattice operations") {
  const FinBoolAlg b3("B3", 3);
  CHECK(b3.atom_count() == 3);
  CHECK(b3.element_count() == 8);
  CHECK(b3.top().bits() == 7);
  CHECK(b3.bot().empty());
  CHECK(b3.elements().size() == 8);
  CHECK(b3.atoms().size() == 3);
  CHECK(b3.complement(AtomSet::from_bits(0b101)).bits() == 0b010);
  CHECK(b3.leq(AtomSet::single(1), b3.top()));

  CHECK_THROWS_AS(FinBoolAlg("empty", 0), ValidationError);
  CHECK_THROWS_AS(FinBoolAlg("huge", 40), ValidationError);
}

TEST_CASE("ultrafilters are exactly the principal ones") {
  for (int n = 1; n <= 4; ++n) {
    const FinBoolAlg a("B" + std::to_string(n), n);
    const auto fast = ultrafilters(a);
    const auto brute = brute_force_ultrafilters(a);
    REQUIRE(fast.size() == static_cast<std::size_t>(n));
    REQUIRE(brute.size() == fast.size());
    for (int i = 0; i < n; ++i) {
      CHECK(fast[i].atom == i);
      CHECK(fast[i].members == brute[i]);
      // half the carrier contains any fixed atom
      CHECK(fast[i].members.size() ==
            static_cast<std::size_t>(a.element_count() / 2));
    }
  }
}

TEST_CASE("stone map sends an element to the ultrafilters through it") {
  const FinBoolAlg a("B3", 3);
  CHECK(eps(a, a.bot()).empty());
  CHECK(eps(a, a.top()) == std::vector<int>{0, 1, 2});
  CHECK(eps(a, AtomSet::from_bits(0b110)) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(eps(a, AtomSet::from_bits(0b11111)), ValidationError);
}

TEST_CASE("hom enumeration has one hom per atom assignment") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const FinBoolAlg dom("D", m), cod("C", n);
      const auto homs = all_homs(dom, cod);
      std::size_t expect = 1;
      for (int i = 0; i < n; ++i) expect *= m;
      CHECK(homs.size() == expect);
      std::set<std::vector<int>> seen;
      for (const auto& h : homs) seen.insert(h.atom_map());
      CHECK(seen.size() == expect);
    }
}

TEST_CASE("hom element action is determined by the dual atom map") {
  const FinBoolAlg dom("D", 3), cod("C", 2);
  const BoolHom h(dom, cod, {0, 2});  // cod atom 0 <- dom atom 0, 1 <- 2
  CHECK(h(dom.bot()).empty());
  CHECK(h(dom.top()) == cod.top());
  CHECK(h(AtomSet::single(0)) == AtomSet::single(0));
  CHECK(h(AtomSet::single(1)).empty());
  CHECK(h(AtomSet::from_bits(0b110)) == AtomSet::single(1));
  CHECK_THROWS_AS(BoolHom(dom, cod, {0}), ValidationError);
  CHECK_THROWS_AS(BoolHom(dom, cod, {0, 5}), ValidationError);

  const auto val = validate_hom(dom, cod, h.table());
  REQUIRE(val.ok);
  CHECK(val.atom_map == h.atom_map());

  auto bad = h.table();
  bad[3] = cod.top();  // break join-compatibility
  CHECK(!validate_hom(dom, cod, bad).ok);
}

TEST_CASE("composition matches table composition") {
  const FinBoolAlg a("A", 2), b("B", 3), c("C", 2);
  for (const auto& f : all_homs(a, b))
    for (const auto& g : all_homs(b, c)) {
      const BoolHom gf = BoolHom::compose(g, f);
      for (AtomSet x : a.elements()) CHECK(gf(x) == g(f(x)));
    }
  const BoolHom id = BoolHom::identity(a);
  for (AtomSet x : a.elements()) CHECK(id(x) == x);
}

TEST_CASE("homs preserve all suprema in a finite algebra") {
  const FinBoolAlg a("A", 2), b("B", 2);
  for (const auto& h : all_homs(a, b)) CHECK(is_sup_preserving(h).ok);
}

TEST_CASE("atom and evaluation correspondences are bijective") {
  for (int n = 1; n <= 4; ++n) {
    const FinBoolAlg a("B" + std::to_string(n), n);
    const TarskiMaps tm = tarski_maps(a);
    CHECK(tm.checks.all_pass());
    CHECK(tm.kappa.size() == static_cast<std::size_t>(n));
    CHECK(tm.theta.size() == static_cast<std::size_t>(a.element_count()));

    const ChiMaps cm = chi_maps(n);
    CHECK(cm.checks.all_pass());
    CHECK(cm.chi.size() == static_cast<std::size_t>(n));
    // evaluation at x answers membership
    for (int x = 0; x < n; ++x)
      for (AtomSet m : cm.powerset.elements())
        CHECK(cm.chi[x](m).empty() == !m.contains(x));
  }
}
