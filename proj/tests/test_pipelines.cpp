#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualkit/pipelines.hpp"

using namespace dualkit;

namespace {
FinBoolAlg base(int n) { return FinBoolAlg("B" + std::to_string(n), n); }
ContactAlg disc(int n) { return ContactAlg::discrete(base(n)); }
}  // namespace

TEST_CASE("power set instance with pointwise certificates") {
  const StoneInstance st = stone_instance(3);
  CHECK(st.duality.checks.all_pass());
  CHECK(st.checks.all_pass());
}

TEST_CASE("core identities for morphisms between normal algebras") {
  const ContactAlg doms[] = {disc(1), disc(2)};
  int morphisms_seen = 0;
  for (const auto& a : doms)
    for (const auto& b : doms)
      for (const auto& al : all_dv_morphisms(a, b)) {
        CHECK(devries_core_checks(a, al).all_pass());
        ++morphisms_seen;
      }
  CHECK(morphisms_seen == 8);
  // rejected off the normal fragment
  CHECK_THROWS_AS(
      devries_core_checks(ContactAlg::total(base(2)),
                          all_dv_morphisms(ContactAlg::total(base(2)),
                                           two_contact())[0]),
      ValidationError);
}

TEST_CASE("cover and contact round trip censuses") {
  const EquivalenceReport eq = equivalence_suite(3);
  CHECK(eq.checks.all_pass());
  CHECK(eq.algebras == 8);
  CHECK(eq.covers == 17);
  CHECK(eq.morphisms == 610);
}

TEST_CASE("boolean hom recovered from its lower transform") {
  int built = 0;
  const ContactAlg pool[] = {disc(1), disc(2),
                             ContactAlg::from_partition(base(2), {0, 0})};
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& al : all_dv_morphisms(a, b)) {
        try {
          const FullnessConstruct fc = fullness_construct(al);
          CHECK(fc.checks.all_pass());
          CHECK(sim_equal(fc.alpha, al));
          ++built;
        } catch (const TheoremViolation&) {
          CHECK(false);  // every one of these maps must be reachable
        }
      }
  CHECK(built == 14);
}

TEST_CASE("powerset maps decompose into point families") {
  for (int n = 1; n <= 3; ++n) CHECK(monad_check(n).all_pass());
}

TEST_CASE("pair construction validates its members") {
  const ContactAlg a = disc(2);
  auto maps = all_dv_morphisms(a, two_contact());
  REQUIRE(maps.size() == 2u);
  const DeVriesPair p = make_devries_pair(a, maps);
  CHECK(p.members.size() == 2u);
  CHECK_THROWS_AS(make_devries_pair(a, {maps[0], maps[0]}), ValidationError);
  CHECK_THROWS_AS(make_devries_pair(ContactAlg::total(base(2)),
                                    {DVMap::identity(ContactAlg::total(base(2)))}),
                  ValidationError);

  const PairOps ops = pair_ops(p);
  CHECK(ops.checks.all_pass());
  CHECK(ops.is_pair);
  CHECK(ops.dense == ops.is_pair);
  CHECK(ops.full);
  CHECK(ops.universal);

  // dropping one character leaves atom {1} unseen: not a pair any more
  const PairOps half = pair_ops(make_devries_pair(a, {maps[0]}));
  CHECK(!half.is_pair);
  CHECK(!half.universal);
}

TEST_CASE("booleanization of a full pair is an extension") {
  const ContactAlg a = disc(2);
  const DeVriesPair p =
      make_devries_pair(a, all_dv_morphisms(a, two_contact()));
  const BooleanDVExtension e = booleanize(p);
  CHECK(e.source().atom_count() == 2);
  CHECK(e.target().atom_count() == 2);
  const ExtensionOps ops = extension_ops(e);
  CHECK(ops.checks.all_pass());
  CHECK(ops.trace_distinct);
  CHECK(ops.universal);
  CHECK(ops.trace.size() == 2u);

  // the trace of the booleanization is the original pair member by member
  const ExtensionOps via_pair = extension_ops(p);
  CHECK(via_pair.checks.all_pass());
  REQUIRE(via_pair.trace.size() == p.members.size());
  for (std::size_t i = 0; i < p.members.size(); ++i)
    CHECK(sim_equal(via_pair.trace[i], p.members[i]));
}

TEST_CASE("extension construction rejects non-extensions") {
  const ContactAlg a = disc(2);
  // collapse everything to the bottom except the top: not injective
  std::vector<AtomSet> tbl(4, AtomSet());
  tbl[3] = AtomSet::from_bits(3);
  CHECK_THROWS_AS(make_extension(DVMap("g", a, disc(2), tbl)),
                  ValidationError);
  CHECK_NOTHROW(make_extension(DVMap::identity(a)));
}

TEST_CASE("pair and extension round trips at two atoms") {
  const BmoRoundtrip r = bmo_roundtrip(2);
  CHECK(r.checks.all_pass());
  CHECK(r.pairs == 6);
  CHECK(r.universal_pairs == 2);
  CHECK(r.extensions == 3);
  CHECK(r.universal_extensions == 3);
  CHECK(r.pair_morphisms == 8);
  CHECK(r.extension_morphisms == 23);
}

TEST_CASE("relation survey finds the collapse at every size") {
  const std::size_t expected_rows[5] = {0, 1, 2, 8, 64};
  for (int n = 1; n <= 4; ++n) {
    const SurveyTable t = collapse_survey(n);
    CHECK(t.checks.all_pass());
    CHECK(t.n_atoms == n);
    CHECK(t.rows.size() == expected_rows[n]);
    CHECK(t.normal_count == 1);
    CHECK(t.diagonal_only);
    // internal consistency: all six imply the first five
    for (const SurveyRow& row : t.rows) {
      if (row.normal)
        for (int i = 0; i < 5; ++i) CHECK(row.axiom[i]);
      bool six = true;
      for (int i = 0; i < 6; ++i) six = six && row.axiom[i];
      CHECK(six == row.normal);
    }
    CHECK(t.rows[0].relation == "-");
    CHECK(t.rows[0].normal);
  }
}

TEST_CASE("map classification separates the derived notions") {
  const ContactAlg a = disc(2);
  const FedFlags id = fed_classify(DVMap::identity(a));
  CHECK(id.checks.all_pass());
  CHECK(id.bool_hom);
  CHECK(id.sup_preserving);
  CHECK(id.reflects);
  CHECK(id.fedorchuk);
  CHECK(id.compatible);
  CHECK(id.coincide);

  // a non-hom table is classified without throwing
  std::vector<AtomSet> tbl{AtomSet(), AtomSet(), AtomSet(),
                           AtomSet::from_bits(3)};
  const FedFlags low = fed_classify(DVMap("low", a, a, tbl));
  CHECK(!low.bool_hom);
  CHECK(!low.fedorchuk);
}
