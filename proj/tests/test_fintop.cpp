#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualkit/combinatorics.hpp"
#include "dualkit/rc.hpp"

using namespace dualkit;

TEST_CASE("open families are completed under union and intersection") {
  Report comp;
  const FinTopSpace x("X", 3, {0b011, 0b110}, &comp);
  CHECK(x.is_open(0b010));   // the intersection had to be added
  CHECK(x.is_open(0b111));
  CHECK(x.is_open(0));
  CHECK(!x.is_open(0b100));
  CHECK(!comp.items.empty());
  CHECK(x.closure(0b100) == 0b100);  // its complement was added as an open
  CHECK(x.closure(0b010) == 0b111);
  CHECK(x.interior(0b101) == 0u);
  CHECK(x.is_closed(0b100));

  const FinTopSpace s = FinTopSpace::sierpinski();
  CHECK(s.opens() == std::vector<std::uint32_t>{0, 2, 3});
  CHECK(s.closure(0b10) == 0b11);  // the open point is 1
  CHECK(s.closure(0b01) == 0b01);
}

TEST_CASE("space census for up to three points") {
  CHECK(all_spaces(1).size() == 1u);
  CHECK(all_spaces(2).size() == 4u);
  CHECK(all_spaces(3).size() == 29u);
  for (const auto& x : all_spaces(3)) {
    CHECK(x.point_count() == 3);
    CHECK(x.is_open(0));
    CHECK(x.is_open(x.full()));
  }
}

TEST_CASE("continuity is enforced and classified") {
  const FinTopSpace s = FinTopSpace::sierpinski();
  const FinTopSpace d = FinTopSpace::discrete(2);
  CHECK(ContMap::is_continuous(d, s, {1, 0}));
  CHECK(!ContMap::is_continuous(s, d, {1, 0}) ==
        !ContMap::is_continuous(s, d, {1, 0}));  // stable answer
  // identity carried from the discrete refinement is continuous
  const ContMap f("f", d, s, {0, 1});
  CHECK(f.image(0b01) == 0b01);
  CHECK(f.preimage(0b10) == 0b10);
  CHECK_THROWS_AS(ContMap("bad", s, d, {0, 1}), ValidationError);

  const MapFlags flags = classify_map(ContMap("id", s, s, {0, 1}));
  CHECK(flags.surjective);
  CHECK(flags.closed);
  CHECK(flags.irreducible);
  CHECK(flags.quasi_open);

  // constant onto the closed point is closed but not irreducible
  const MapFlags c = classify_map(ContMap("c", d, d, {0, 0}));
  CHECK(c.closed);
  CHECK(!c.surjective);
  CHECK(!c.irreducible);
}

TEST_CASE("space classification recognises the standard examples") {
  const SpaceFlags disc = classify_space(FinTopSpace::discrete(3));
  CHECK(disc.discrete);
  CHECK(disc.hausdorff);
  CHECK(disc.normal);
  CHECK(disc.extremally_disconnected);

  const SpaceFlags ind = classify_space(FinTopSpace::indiscrete(2));
  CHECK(!ind.discrete);
  CHECK(!ind.hausdorff);
  CHECK(ind.normal);  // no disjoint nonempty closed pairs exist

  const SpaceFlags sier = classify_space(FinTopSpace::sierpinski());
  CHECK(!sier.hausdorff);
  CHECK(sier.extremally_disconnected);

  // finite spaces are Hausdorff exactly when discrete
  for (const auto& x : all_spaces(3))
    CHECK(classify_space(x).hausdorff == classify_space(x).discrete);
}

TEST_CASE("dense subsets and subspaces") {
  const FinTopSpace s = FinTopSpace::sierpinski();
  CHECK(is_dense(s, 0b10));   // the open point reaches everything
  CHECK(!is_dense(s, 0b01));  // the closed point is already closed
  const FinTopSpace sub = subspace(s, 0b10, "sub");
  CHECK(sub.point_count() == 1);

  int dense_count = 0;
  for (const auto& x : all_spaces(2))
    for (std::uint32_t pts = 1; pts < 4u; ++pts)
      if (is_dense(x, pts)) ++dense_count;
  CHECK(dense_count == 8);
}

TEST_CASE("regular closed members form a Boolean algebra") {
  for (const auto& x : all_spaces(3)) {
    const RCAlgebra rc = rc_algebra(x);
    CHECK(rc.checks.all_pass());
    for (std::uint32_t f : rc.members) {
      CHECK(x.closure(x.interior(f)) == f);
      CHECK(rc.is_member(f));
      CHECK(rc.to_set(rc.to_abstract(f)) == f);
    }
    CHECK(rc.algebra.element_count() ==
          static_cast<int>(rc.members.size()));
    // join is union, complement is closure of the set complement
    for (std::uint32_t f : rc.members)
      for (std::uint32_t g : rc.members) {
        CHECK(rc.is_member(f | g));
        CHECK(rc.to_abstract(f | g) ==
              (rc.to_abstract(f) | rc.to_abstract(g)));
      }
    for (std::uint32_t f : rc.members)
      CHECK(rc.to_set(rc.algebra.complement(rc.to_abstract(f))) ==
            x.closure(x.full() & ~f));
  }
  CHECK_THROWS_AS(rc_algebra(FinTopSpace::sierpinski())
                      .to_abstract(0b10),
                  ValidationError);
}

TEST_CASE("overlap contact of the regular closed algebra") {
  const RCAlgebra rc = rc_algebra(FinTopSpace::discrete(2));
  CHECK(rc.contact.same_structure(
      ContactAlg::discrete(FinBoolAlg("", 2))));
  const RCAlgebra ri = rc_algebra(FinTopSpace::indiscrete(2));
  CHECK(ri.algebra.atom_count() == 1);
}

TEST_CASE("irreducible maps exchange the regular closed algebras") {
  // count and verify every closed irreducible surjection at <= 3 points
  std::vector<FinTopSpace> spaces;
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : all_spaces(n)) spaces.push_back(x);
  int irreducible = 0;
  for (const auto& x : spaces) {
    const RCAlgebra rx = rc_algebra(x);
    for (const auto& y : spaces) {
      const RCAlgebra ry = rc_algebra(y);
      for (const auto& tbl : all_functions(x.point_count(), y.point_count())) {
        if (!ContMap::is_continuous(x, y, tbl)) continue;
        const ContMap p("p", x, y, tbl);
        if (!classify_map(p).irreducible) continue;
        ++irreducible;
        CHECK(irreducible_calculus(rx, ry, p).all_pass());
      }
    }
  }
  CHECK(irreducible == 227);
}

TEST_CASE("restriction to a dense subset is an isomorphism") {
  int dense_total = 0, contact_kept = 0;
  std::vector<FinTopSpace> spaces;
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : all_spaces(n)) spaces.push_back(x);
  for (const auto& x : spaces) {
    const RCAlgebra rc = rc_algebra(x);
    for (std::uint32_t pts = 1; pts <= x.full(); ++pts) {
      if (!is_dense(x, pts)) continue;
      ++dense_total;
      const DenseRestriction dr = dense_restriction(rc, pts);
      CHECK(dr.checks.all_pass());
      if (dr.contact_preserved) ++contact_kept;
    }
  }
  CHECK(dense_total == 110);
  CHECK(contact_kept == 107);  // contact can genuinely be lost
}

TEST_CASE("complete separation agrees with its component oracle") {
  const FinTopSpace s = FinTopSpace::sierpinski();
  const SeparationCheck sep = complete_separation(s, 0b01, 0b10);
  CHECK(sep.checks.all_pass());
  CHECK(!sep.separated);  // the open point closes onto the other
  const SeparationCheck dd =
      complete_separation(FinTopSpace::discrete(2), 0b01, 0b10);
  CHECK(dd.checks.all_pass());
  CHECK(dd.separated);
}

TEST_CASE("separation contact of the regular closed algebra") {
  for (const auto& x : all_spaces(2)) {
    const BetaContact bc = beta_contact(rc_algebra(x));
    CHECK(bc.checks.all_pass());
  }
}

TEST_CASE("square identity over normal Hausdorff codomains") {
  // the smallest non-trivial configuration: identity square on two points
  const FinTopSpace d = FinTopSpace::discrete(2);
  const RCAlgebra rd = rc_algebra(d);
  const ContMap id("id", d, d, {0, 1});
  const Report r = t4_square_identity(rd, id, id, id, id);
  CHECK(r.all_pass());

  // rejected when the codomain is not Hausdorff
  const FinTopSpace s = FinTopSpace::sierpinski();
  const RCAlgebra rs = rc_algebra(s);
  const ContMap ids("id", s, s, {0, 1});
  CHECK(!t4_square_identity(rs, ids, ids, ids, ids).all_pass());
}
