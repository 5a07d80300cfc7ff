#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualkit/devries.hpp"

using namespace dualkit;

namespace {
FinBoolAlg base(int n) { return FinBoolAlg("B" + std::to_string(n), n); }
ContactAlg disc(int n) { return ContactAlg::discrete(base(n)); }
ContactAlg total(int n) { return ContactAlg::total(base(n)); }
}  // namespace

TEST_CASE("map tables are validated at construction") {
  CHECK_THROWS_AS(DVMap("f", disc(2), disc(2), {AtomSet()}), ValidationError);
  CHECK_THROWS_AS(DVMap("f", disc(1), disc(1),
                        {AtomSet(), AtomSet::from_bits(2)}),
                  ValidationError);
  const DVMap id = DVMap::identity(disc(2));
  CHECK(id.is_bool_hom());
  CHECK(id.as_bool_hom().atom_map() == std::vector<int>{0, 1});
  const DVMap collapse("c", total(2), total(2),
                       {AtomSet(), AtomSet(), AtomSet(),
                        AtomSet::from_bits(3)});
  CHECK(!collapse.is_bool_hom());
  CHECK_THROWS_AS(collapse.as_bool_hom(), ValidationError);
}

TEST_CASE("identity on a discrete algebra satisfies all four laws") {
  const DVCheck ck = check_dv_morphism(DVMap::identity(disc(3)));
  CHECK(ck.ok());
  CHECK(ck.unital.pass);
  CHECK(ck.as_report("id").all_pass());
}

TEST_CASE("identity on a total algebra fails the approximation law") {
  const DVCheck ck = check_dv_morphism(DVMap::identity(total(2)));
  CHECK(ck.v[0].pass);
  CHECK(ck.v[1].pass);
  CHECK(ck.v[2].pass);
  CHECK(!ck.v[3].pass);  // only the bounds are approximated from below
  CHECK(!ck.ok());
}

TEST_CASE("lower transform laws on every monotone pair at two atoms") {
  const ContactAlg doms[] = {disc(2), total(2)};
  for (const auto& a : doms)
    for (const auto& b : doms) {
      const auto pool = all_dv_morphisms(a, b);
      for (const auto& f : pool) {
        const DVMap ft = dv_transform(f);
        // below the original, monotone, idempotent
        for (AtomSet x : a.base().elements())
          CHECK(b.base().leq(ft(x), f(x)));
        CHECK(dv_transform(ft) == ft);
        CHECK(check_dv_morphism(ft).ok());
      }
      for (const auto& f : pool)
        for (const auto& g : all_dv_morphisms(b, a)) {
          const DVMap lhs = dv_transform(plain_compose(g, f));
          const DVMap rhs = dv_transform(plain_compose(dv_transform(g),
                                                       dv_transform(f)));
          CHECK(lhs == rhs);
          CHECK(dv_compose(g, f) == lhs);
        }
    }
}

TEST_CASE("morphism enumeration counts maps into the two-element algebra") {
  // one morphism per cluster of the domain
  CHECK(all_dv_morphisms(total(2), two_contact()).size() == 1u);
  CHECK(all_dv_morphisms(disc(2), two_contact()).size() == 2u);
  CHECK(all_dv_morphisms(disc(3), two_contact()).size() == 3u);
  CHECK(all_dv_morphisms(
            ContactAlg::from_partition(base(3), {0, 1, 1}), two_contact())
            .size() == 2u);
  // names are stable handles
  const auto pool = all_dv_morphisms(disc(2), two_contact());
  CHECK(pool[0].name() == "dv0");
  CHECK(pool[1].name() == "dv1");
}

TEST_CASE("composition is associative after transform identification") {
  const ContactAlg a = disc(2);
  const auto pool = all_dv_morphisms(a, a);
  for (const auto& f : pool)
    for (const auto& g : pool)
      for (const auto& h : pool)
        CHECK(sim_equal(dv_compose(h, dv_compose(g, f)),
                        dv_compose(dv_compose(h, g), f)));
}

TEST_CASE("compatible homs reflect contact exactly when they preserve the order") {
  const ContactAlg doms[] = {disc(2), total(2), total(3)};
  for (const auto& a : doms)
    for (const auto& b : doms)
      for (const auto& h : all_homs(a.base(), b.base()))
        CHECK(reflects_contact(a, b, h) == preserves_ll(a, b, h));
  // into a total codomain only the constant atom assignments survive;
  // reflection towards a total domain and between overlap contacts is free
  CHECK(all_compatible_homs(disc(2), total(2)).size() == 2u);
  CHECK(all_compatible_homs(total(2), disc(2)).size() == 4u);
  CHECK(all_compatible_homs(disc(2), disc(2)).size() == 4u);
}

TEST_CASE("cluster correspondence for maps into the two-element algebra") {
  const ContactAlg pools[] = {disc(1), disc(2), disc(3), total(2), total(3),
                              ContactAlg::from_partition(base(3), {0, 0, 1})};
  for (const auto& a : pools) {
    CHECK(omega_bijection(a).all_pass());
    const auto maps = all_dv_morphisms(a, two_contact());
    const auto cl = clusters(a).brute;
    REQUIRE(maps.size() == cl.size());
    std::set<Cluster> seen;
    for (const auto& f : maps) {
      const Cluster c = omega_of(f);
      seen.insert(c);
      CHECK(sim_equal(omega_inv("back", a, c), f));
    }
    CHECK(seen.size() == cl.size());
  }
  CHECK_THROWS_AS(omega_of(DVMap::identity(disc(2))), ValidationError);
}

TEST_CASE("pullback of a cluster along a morphism is a cluster") {
  const ContactAlg a = total(2), b = disc(2);
  for (const auto& f : all_dv_morphisms(a, b))
    for (const Cluster& d : clusters(b).brute) {
      const Cluster c = cluster_pullback(f, d);
      CHECK(is_cluster(a, c.members).ok);
    }
}

TEST_CASE("covers carry the same-fibre contact") {
  const auto cs = all_covers(base(3));
  // one cover per surjection onto an initial segment: 1 + 6 + 6 = 13
  CHECK(cs.size() == 13u);
  for (const auto& c : cs) {
    CHECK(check_axioms(c.alg).c16() == (c.classes == 3));
    CHECK(c.alg.uf_equivalence());
  }
}
