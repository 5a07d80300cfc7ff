#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualkit/contact.hpp"

using namespace dualkit;

namespace {
FinBoolAlg base(int n) { return FinBoolAlg("B" + std::to_string(n), n); }
}  // namespace

TEST_CASE("contact relation construction and derived element relation") {
  const ContactAlg a(base(3), {{0, 1}});
  CHECK(a.atom_contact(0, 1));
  CHECK(a.atom_contact(1, 0));  // symmetric closure
  CHECK(a.atom_contact(2, 2));  // diagonal added
  CHECK(!a.atom_contact(0, 2));
  CHECK(a.contact(AtomSet::from_bits(0b001), AtomSet::from_bits(0b010)));
  CHECK(!a.contact(AtomSet::from_bits(0b001), AtomSet::from_bits(0b100)));
  CHECK(!a.contact(a.base().bot(), a.base().top()));
  CHECK(a.rel_string() == "0-1");
  CHECK(a.off_diagonal_pairs() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(ContactAlg::discrete(base(2)).rel_string() == "-");
  CHECK_THROWS_AS(ContactAlg(base(2), {{0, 5}}), ValidationError);
}

TEST_CASE("well-inside is non-contact with the complement") {
  const ContactAlg a = ContactAlg::total(base(2));
  // under total contact only the bounds are well inside anything
  for (AtomSet x : a.base().elements()) {
    CHECK(a.ll(a.base().bot(), x));
    CHECK(a.ll(x, a.base().top()));
  }
  CHECK(!a.ll(AtomSet::single(0), AtomSet::single(0)));

  const ContactAlg d = ContactAlg::discrete(base(2));
  for (AtomSet x : d.base().elements())
    for (AtomSet y : d.base().elements())
      CHECK(d.ll(x, y) == d.base().leq(x, y));
}

TEST_CASE("partition contacts are transitive on ultrafilters") {
  const ContactAlg p = ContactAlg::from_partition(base(4), {0, 0, 1, 1});
  CHECK(p.uf_equivalence());
  CHECK(p.atom_contact(0, 1));
  CHECK(!p.atom_contact(1, 2));
  const AxiomReport ax = check_axioms(p);
  CHECK(ax.c14());
  CHECK(ax.c[4].pass);   // partitions admit the splitting axiom
  CHECK(!ax.c[5].pass);  // but a merged block leaves no avoiding element
  CHECK(!ax.c16());
  CHECK_THROWS_AS(ContactAlg::from_partition(base(2), {0}), ValidationError);

  const ContactAlg cyc(base(3), {{0, 1}, {1, 2}});
  CHECK(!cyc.uf_equivalence());
}

TEST_CASE("axiom profiles of the canonical relations") {
  for (int n = 1; n <= 4; ++n) {
    const AxiomReport disc = check_axioms(ContactAlg::discrete(base(n)));
    CHECK(disc.c16());
    CHECK(disc.i16());
    CHECK(disc.equiv14.pass);
    CHECK(disc.equiv16.pass);

    const AxiomReport tot = check_axioms(ContactAlg::total(base(n)));
    CHECK(tot.c14());
    CHECK(tot.c16() == (n == 1));  // interpolation fails once there is room
    CHECK(tot.equiv16.pass);
  }
  const Report r = check_axioms(ContactAlg::total(base(2))).as_report("t");
  CHECK(!r.all_pass());
  CHECK(r.find("C6") != nullptr);
  CHECK(!r.find("C6")->pass);
}

TEST_CASE("axiom-list equivalences hold on every small relation") {
  for (int n = 1; n <= 4; ++n) {
    const auto rels = all_contact_algs(base(n));
    CHECK(rels.size() == (1u << (n * (n - 1) / 2)));
    for (const auto& a : rels) {
      const AxiomReport ax = check_axioms(a);
      CHECK(ax.equiv14.pass);
      CHECK(ax.equiv16.pass);
      CHECK(ax.c14() == ax.i14());
      CHECK(ax.c16() == ax.i16());
    }
  }
}

TEST_CASE("canonical contacts bound every relation") {
  const CanonicalContacts cc = canonical_contacts(base(3));
  CHECK(cc.checks.all_pass());
  CHECK(cc.smallest.same_structure(ContactAlg::discrete(base(3))));
  CHECK(cc.largest.same_structure(ContactAlg::total(base(3))));
}

TEST_CASE("element contact is recovered from ultrafilter contact") {
  for (const auto& a : all_contact_algs(base(3))) {
    const UfContactReport u = contact_via_ufs(a);
    CHECK(u.checks.all_pass());
    CHECK(u.equivalence == a.uf_equivalence());
  }
}

TEST_CASE("clusters from ultrafilters agree with the subset scan") {
  // one-block partition: a single cluster holding every nonzero element
  const ContactAlg tot = ContactAlg::total(base(3));
  const ClusterEnumeration en = clusters(tot);
  CHECK(en.uf_equivalence);
  CHECK(!en.discrepancy);
  CHECK(en.checks.all_pass());
  REQUIRE(en.brute.size() == 1);
  CHECK(en.brute[0].members.size() == 7u);
  CHECK(en.via_ufs == en.brute);

  // discrete: one cluster per ultrafilter
  const ClusterEnumeration dd = clusters(ContactAlg::discrete(base(4)));
  CHECK(dd.checks.all_pass());
  CHECK(dd.brute.size() == 4u);

  // two blocks: two clusters
  const ClusterEnumeration pp =
      clusters(ContactAlg::from_partition(base(3), {0, 1, 1}));
  CHECK(pp.checks.all_pass());
  CHECK(pp.brute.size() == 2u);
}

TEST_CASE("cluster membership conditions reject near-misses") {
  const ContactAlg tot = ContactAlg::total(base(2));
  const Cluster c = clusters(tot).brute[0];
  CHECK(is_cluster(tot, c.members).ok);
  // dropping the top breaks upward closure
  std::vector<AtomSet> chopped;
  for (AtomSet a : c.members)
    if (a != tot.base().top()) chopped.push_back(a);
  CHECK(!is_cluster(tot, chopped).ok);
  CHECK(!is_cluster(tot, {}).ok);
}

TEST_CASE("transitive and fully normal relation censuses at small size") {
  // transitive relations are the partitions: Bell numbers 1, 2, 5, 15
  const int bell[5] = {0, 1, 2, 5, 15};
  for (int n = 1; n <= 4; ++n) {
    int transitive = 0, normal = 0;
    for (const auto& a : all_contact_algs(base(n))) {
      if (a.uf_equivalence()) ++transitive;
      if (check_axioms(a).c16()) ++normal;
    }
    CHECK(transitive == bell[n]);
    CHECK(normal == 1);  // only the discrete relation survives interpolation
  }
}

TEST_CASE("cluster spaces of partition contacts") {
  const ClustSpace dd = clust_space(ContactAlg::discrete(base(3)));
  CHECK(dd.checks.all_pass());
  CHECK(dd.points.size() == 3u);
  CHECK(dd.topology.opens().size() == 8u);

  // a merged block breaks the sixth axiom, and with it the interior
  // identity; the quotient comparison still works
  const ContactAlg p = ContactAlg::from_partition(base(4), {0, 0, 1, 2});
  const ClustSpace cs = clust_space(p);
  CHECK(cs.points.size() == 3u);
  CHECK(cs.topology.point_count() == 3);
  CHECK(cs.topology.opens().size() == 8u);
  REQUIRE(cs.checks.find("interior-identity") != nullptr);
  CHECK(!cs.checks.find("interior-identity")->pass);
  CHECK(cs.checks.find("gamma-well-defined")->pass);
  CHECK(cs.checks.find("gamma-bijective")->pass);
  CHECK(cs.checks.find("gamma-homeomorphism")->pass);
}
