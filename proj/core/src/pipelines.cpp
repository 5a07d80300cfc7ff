#include "dualkit/pipelines.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dualkit/combinatorics.hpp"

namespace dualkit {

namespace {

std::string alg_label(const ContactAlg& a) {
  return a.base().name() + "[" + a.rel_string() + "]";
}

std::string map_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

bool is_c16(const ContactAlg& a) { return check_axioms(a).c16(); }

// Contact classes of atoms, numbered by first occurrence.  Meaningful when
// the atom relation is transitive.
struct AtomClasses {
  std::vector<int> class_of;
  int count = 0;
};

AtomClasses atom_classes(const ContactAlg& a) {
  AtomClasses out;
  const int n = a.atom_count();
  out.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (out.class_of[x] >= 0) continue;
    const int c = out.count++;
    for (int y = x; y < n; ++y)
      if (out.class_of[y] < 0 && a.atom_contact(x, y)) out.class_of[y] = c;
  }
  return out;
}

int index_of_cluster(const std::vector<Cluster>& pts, const Cluster& c) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == c) return static_cast<int>(i);
  return -1;
}

int index_of_table(const std::vector<DVMap>& maps,
                   const std::vector<AtomSet>& table) {
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].table() == table) return static_cast<int>(i);
  return -1;
}

// Class map induced on atom classes by the dual atom map of h.  When the
// image of a class is not contained in a single class, *well is cleared.
std::vector<int> descend(const AtomClasses& dom_cl, const AtomClasses& cod_cl,
                         const BoolHom& h, bool* well) {
  std::vector<int> f(cod_cl.count, -1);
  for (std::size_t y = 0; y < h.atom_map().size(); ++y) {
    int& slot = f[cod_cl.class_of[y]];
    const int v = dom_cl.class_of[h.atom_map()[y]];
    if (slot < 0)
      slot = v;
    else if (slot != v && well)
      *well = false;
  }
  return f;
}

// Does the family take the value 1 somewhere on every nonzero element?
bool pair_condition_all(const ContactAlg& a, const std::vector<DVMap>& fam) {
  const AtomSet one = AtomSet::single(0);
  for (AtomSet e : a.base().elements()) {
    if (e.empty()) continue;
    bool hit = false;
    for (const DVMap& f : fam)
      if (f(e) == one) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Members of the family vanishing on the complement of e, as a bit mask.
std::uint32_t family_mask(const std::vector<DVMap>& fam, const ContactAlg& a,
                          AtomSet e) {
  std::uint32_t m = 0;
  const AtomSet star = a.base().complement(e);
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (fam[i](star).empty()) m |= 1u << i;
  return m;
}

bool injective_table(const DVMap& g) {
  std::set<std::uint32_t> seen;
  for (const AtomSet& v : g.table())
    if (!seen.insert(v.bits()).second) return false;
  return true;
}

bool atoms_are_meets(const DVMap& g) {
  const FinBoolAlg& tb = g.cod().base();
  for (int x = 0; x < tb.atom_count(); ++x) {
    AtomSet meet = tb.top();
    for (AtomSet a : g.dom().base().elements())
      if (g(a).contains(x)) meet = tb.meet(meet, g(a));
    if (!(meet == AtomSet::single(x))) return false;
  }
  return true;
}

// Compositions of g with the coordinate characters of its target, one per
// target atom, in atom order.
std::vector<DVMap> trace_of(const DVMap& g) {
  std::vector<DVMap> out;
  const ContactAlg& a = g.dom();
  const FinBoolAlg& tb = g.cod().base();
  ContactAlg two = two_contact();
  const AtomSet one = AtomSet::single(0);
  for (int x = 0; x < tb.atom_count(); ++x) {
    std::vector<AtomSet> tbl;
    for (AtomSet e : a.base().elements())
      tbl.push_back(g(e).contains(x) ? one : AtomSet::from_bits(0));
    out.push_back(
        DVMap("x" + std::to_string(x) + "g", a, two, std::move(tbl)));
  }
  return out;
}

bool pair_universal(const DeVriesPair& p, int bound, std::string* wit) {
  const ContactAlg& a = p.algebra;
  ContactAlg two = two_contact();
  const int ny = static_cast<int>(p.members.size());

  std::set<std::uint32_t> fam;
  for (AtomSet e : a.base().elements())
    fam.insert(family_mask(p.members, a, e));

  const auto perms = all_permutations(ny);
  for (int n2 = 1; n2 <= bound; ++n2) {
    FinBoolAlg b2("C" + std::to_string(n2), n2);
    for (const ContactAlg& a2 : all_contact_algs(b2)) {
      if (!is_c16(a2)) continue;
      const auto homs2 = all_dv_morphisms(a2, two);
      const int nh2 = static_cast<int>(homs2.size());
      if (nh2 < ny || nh2 > 20) continue;
      const auto alphas = all_dv_morphisms(a2, a);
      for (std::uint32_t sel = 0; sel < (1u << nh2); ++sel) {
        if (std::popcount(sel) != ny) continue;
        std::vector<DVMap> sub;
        for (int i = 0; i < nh2; ++i)
          if ((sel >> i) & 1u) sub.push_back(homs2[i]);
        if (!pair_condition_all(a2, sub)) continue;
        for (const std::vector<int>& perm : perms) {
          // zero-set family pulled back through the bijection
          std::set<std::uint32_t> tf;
          for (AtomSet e : a2.base().elements()) {
            const std::uint32_t sm = family_mask(sub, a2, e);
            std::uint32_t pulled = 0;
            for (int i = 0; i < ny; ++i)
              if ((sm >> perm[i]) & 1u) pulled |= 1u << i;
            tf.insert(pulled);
          }
          if (tf != fam) continue;
          int matches = 0;
          for (const DVMap& al : alphas) {
            bool ok = true;
            for (int i = 0; i < ny && ok; ++i)
              ok = dv_compose(p.members[i], al).table() ==
                   sub[perm[i]].table();
            if (ok && ++matches > 1) break;
          }
          if (matches != 1) {
            if (wit)
              *wit = alg_label(a2) + " selection " + point_set_to_string(sel) +
                     " bijection " + map_string(perm) +
                     (matches == 0 ? " admits no factorisation"
                                   : " factors more than once");
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

StoneInstance stone_instance(int max_atoms) {
  if (max_atoms < 1 || max_atoms > 4)
    throw ValidationError("stone_instance: atom bound must be between 1 and 4");
  StoneInstance out{power_set_duality(max_atoms), Report{}};
  out.checks.subject = "stone(" + std::to_string(max_atoms) + ")";
  out.checks.merge(out.duality.checks, "skeleton");

  for (int k = 1; k <= max_atoms; ++k) {
    FinBoolAlg a("B" + std::to_string(k), k);
    const std::string pre = a.name();

    const auto fast = ultrafilters(a);
    const auto brute = brute_force_ultrafilters(a);
    bool agree = fast.size() == brute.size();
    for (std::size_t i = 0; agree && i < fast.size(); ++i)
      agree = fast[i].members == brute[i];
    out.checks.add(pre + ".ultrafilters-match-enumeration", agree);

    out.checks.merge(tarski_maps(a).checks, pre);
    out.checks.merge(chi_maps(k).checks, pre);

    bool unit = static_cast<int>(fast.size()) == k;
    for (int x = 0; unit && x < k; ++x) unit = fast[x].atom == x;
    out.checks.add(pre + ".unit-pointwise-bijective", unit);

    std::set<std::vector<int>> seen;
    for (AtomSet e : a.elements()) seen.insert(eps(a, e));
    out.checks.add(pre + ".counit-pointwise-injective",
                   seen.size() == a.elements().size());
  }
  return out;
}

Report devries_core_checks(const ContactAlg& alg, const DVMap& alpha) {
  if (!alpha.dom().same_structure(alg))
    throw ValidationError(
        "devries_core_checks: the map must start at the given algebra");
  if (!is_c16(alg) || !is_c16(alpha.cod()))
    throw ValidationError(
        "devries_core_checks: both algebras must satisfy all six contact "
        "axioms");
  if (!check_dv_morphism(alpha).ok())
    throw ValidationError("devries_core_checks: the map fails V1-V4");

  Report r;
  r.subject = "core(" + alg_label(alg) + ", " + alpha.name() + ")";

  ClustSpace za = clust_space(alg);
  RCAlgebra rza = rc_algebra(za.topology);
  const auto elems = alg.base().elements();

  // the closure map must land in the regular-closed sets of the cluster
  // space, one distinct value per element
  bool inside = true;
  std::string w0;
  std::vector<AtomSet> tau;
  for (AtomSet e : elems) {
    const std::uint32_t m = za.tau[e.bits()];
    if (!rza.is_member(m)) {
      inside = false;
      w0 = "element " + e.to_string();
      break;
    }
    tau.push_back(rza.to_abstract(m));
  }
  r.add("tau-lands-in-regular-closed", inside, w0);
  if (!inside) return r;

  {
    std::set<std::uint32_t> seen;
    for (const AtomSet& v : tau) seen.insert(v.bits());
    r.add("tau-bijective",
          seen.size() == tau.size() && tau.size() == rza.members.size());
  }
  HomValidation hv = validate_hom(alg.base(), rza.algebra, tau);
  r.add("tau-boolean-hom", hv.ok, hv.ok ? "" : hv.report.first_failure());

  bool contact_iff = true, ll_iff = true;
  std::string w1, w2;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (alg.contact(elems[i], elems[j]) !=
              rza.contact.contact(tau[i], tau[j]) &&
          contact_iff) {
        contact_iff = false;
        w1 = elems[i].to_string() + "," + elems[j].to_string();
      }
      if (alg.ll(elems[i], elems[j]) != rza.contact.ll(tau[i], tau[j]) &&
          ll_iff) {
        ll_iff = false;
        w2 = elems[i].to_string() + "," + elems[j].to_string();
      }
    }
  r.add("tau-matches-contact", contact_iff, w1);
  r.add("tau-matches-way-below", ll_iff, w2);

  // pushing the point set of an element forward along the projection must
  // give exactly the closure value
  bool tri = true;
  std::string w3;
  for (AtomSet e : elems) {
    std::uint32_t img = 0;
    for (int x = 0; x < alg.atom_count(); ++x)
      if (e.contains(x)) img |= 1u << za.gamma[za.uf_class[x]];
    if (img != za.tau[e.bits()]) {
      tri = false;
      w3 = "element " + e.to_string();
      break;
    }
  }
  r.add("projection-image-is-tau", tri, w3);

  // naturality of the closure map against the cluster action of alpha
  ClustSpace zb = clust_space(alpha.cod());
  RCAlgebra rzb = rc_algebra(zb.topology);
  std::vector<int> hat(zb.points.size(), -1);
  bool total = true;
  std::string w4;
  for (std::size_t j = 0; j < zb.points.size(); ++j) {
    hat[j] = index_of_cluster(za.points, cluster_pullback(alpha, zb.points[j]));
    if (hat[j] < 0) {
      total = false;
      w4 = "cluster " + std::to_string(j);
    }
  }
  r.add("cluster-pullback-total", total, w4);
  if (total) {
    const bool cont = ContMap::is_continuous(zb.topology, za.topology, hat);
    r.add("cluster-map-continuous", cont);
    if (cont) {
      ContMap hm("c(" + alpha.name() + ")", zb.topology, za.topology, hat);
      DVMap act = rc_of_map(rzb, rza, hm, "rc(" + alpha.name() + ")");
      bool sq = true;
      std::string w5;
      for (AtomSet e : elems) {
        if (!(act(tau[e.bits()]) ==
              rzb.to_abstract(zb.tau[alpha(e).bits()]))) {
          sq = false;
          w5 = "element " + e.to_string();
          break;
        }
      }
      r.add("naturality-square", sq, w5);
    }
  }

  // composing with alpha then taking the vanishing family agrees with the
  // cluster action point by point
  bool om = true;
  std::string w6;
  for (const DVMap& psi : all_dv_morphisms(alpha.cod(), two_contact())) {
    if (!(omega_of(dv_compose(psi, alpha)) ==
          cluster_pullback(alpha, omega_of(psi)))) {
      om = false;
      w6 = psi.name();
      break;
    }
  }
  r.add("omega-naturality", om, w6);
  return r;
}

EquivalenceReport equivalence_suite(int max_atoms) {
  if (max_atoms < 1 || max_atoms > 3)
    throw ValidationError(
        "equivalence_suite: atom bound must be between 1 and 3");
  EquivalenceReport out;
  Report& r = out.checks;
  r.subject = "equivalence(" + std::to_string(max_atoms) + ")";

  std::vector<ContactAlg> objs;
  for (int n = 1; n <= max_atoms; ++n) {
    FinBoolAlg base("B" + std::to_string(n), n);

    // each quotient of the atom set induces a contact; the canonical
    // projection onto contact classes must give it back, and the relabeling
    // between the two quotients must be a bijection making the triangle
    // commute
    for (const Cover& cv : all_covers(base)) {
      ++out.covers;
      const std::string lab = base.name() + "/p=" + map_string(cv.p);

      bool fib = true;
      std::string w;
      for (int x = 0; x < n && fib; ++x)
        for (int y = 0; y < n && fib; ++y)
          if (cv.alg.atom_contact(x, y) != (cv.p[x] == cv.p[y])) {
            fib = false;
            w = "atoms " + std::to_string(x) + "," + std::to_string(y);
          }
      r.add(lab + ".atom-contact-is-fibre-contact", fib, w);

      AtomClasses cl = atom_classes(cv.alg);
      r.add(lab + ".projection-induces-same-contact",
            ContactAlg::from_partition(base, cl.class_of)
                .same_structure(cv.alg));

      std::vector<int> ell(cv.classes, -1);
      bool well = true;
      for (int x = 0; x < n; ++x) {
        int& slot = ell[cv.p[x]];
        if (slot < 0)
          slot = cl.class_of[x];
        else if (slot != cl.class_of[x])
          well = false;
      }
      bool bij = well && cv.classes == cl.count;
      if (bij) {
        std::vector<char> seen(cl.count, 0);
        for (int v : ell) {
          if (v < 0 || seen[v]) {
            bij = false;
            break;
          }
          seen[v] = 1;
        }
      }
      r.add(lab + ".comparison-well-defined", well);
      r.add(lab + ".comparison-bijective", bij);
      bool square = well;
      for (int x = 0; square && x < n; ++x)
        square = ell[cv.p[x]] == cl.class_of[x];
      r.add(lab + ".comparison-triangle", square);
    }

    // object round trip from the relation side
    for (const ContactAlg& ca : all_contact_algs(base)) {
      if (!ca.uf_equivalence()) continue;
      ++out.algebras;
      AtomClasses cl = atom_classes(ca);
      r.add(alg_label(ca) + ".quotient-induce-identity",
            ContactAlg::from_partition(base, cl.class_of).same_structure(ca));
      objs.push_back(ca);
    }
  }

  // morphisms descend to class maps; equal descents must coincide with
  // equal lower transforms
  for (const ContactAlg& ca : objs) {
    const AtomClasses cla = atom_classes(ca);
    for (const ContactAlg& cb : objs) {
      const AtomClasses clb = atom_classes(cb);
      const auto homs = all_compatible_homs(ca, cb);
      out.morphisms += static_cast<int>(homs.size());
      const std::string lab = alg_label(ca) + "->" + alg_label(cb);

      bool well_all = true;
      std::string w;
      std::vector<std::vector<int>> descents;
      for (const BoolHom& h : homs) {
        bool well = true;
        descents.push_back(descend(cla, clb, h, &well));
        if (!well && well_all) {
          well_all = false;
          w = "atom map " + map_string(h.atom_map());
        }
      }
      r.add(lab + ".descends-to-classes", well_all, w);

      std::vector<std::vector<AtomSet>> transforms;
      for (const BoolHom& h : homs)
        transforms.push_back(
            dv_transform(DVMap::from_hom("h", ca, cb, h)).table());
      bool iff = true;
      std::string w2;
      for (std::size_t i = 0; i < homs.size() && iff; ++i)
        for (std::size_t j = i + 1; j < homs.size() && iff; ++j)
          if ((descents[i] == descents[j]) !=
              (transforms[i] == transforms[j])) {
            iff = false;
            w2 = map_string(homs[i].atom_map()) + " vs " +
                 map_string(homs[j].atom_map());
          }
      r.add(lab + ".equal-descent-iff-equal-transform", iff, w2);
    }
  }

  // class maps compose contravariantly along plain composition
  {
    bool fun = true;
    std::string w;
    long instances = 0;
    for (const ContactAlg& ca : objs) {
      const AtomClasses cla = atom_classes(ca);
      for (const ContactAlg& cb : objs) {
        const AtomClasses clb = atom_classes(cb);
        const auto fg = all_compatible_homs(ca, cb);
        if (fg.empty()) continue;
        for (const ContactAlg& cc : objs) {
          const AtomClasses clc = atom_classes(cc);
          const auto gh = all_compatible_homs(cb, cc);
          for (const BoolHom& f : fg)
            for (const BoolHom& g : gh) {
              ++instances;
              const BoolHom gf = BoolHom::compose(g, f);
              const std::vector<int> df = descend(cla, clb, f, nullptr);
              const std::vector<int> dg = descend(clb, clc, g, nullptr);
              const std::vector<int> dgf = descend(cla, clc, gf, nullptr);
              for (int c = 0; c < clc.count && fun; ++c)
                if (dgf[c] != df[dg[c]]) {
                  fun = false;
                  w = alg_label(ca) + "->" + alg_label(cb) + "->" +
                      alg_label(cc) + " maps " + map_string(f.atom_map()) +
                      "," + map_string(g.atom_map());
                }
            }
        }
      }
    }
    r.add("descent-functorial", fun, w);
    r.add("descent-functorial-instances", true,
          std::to_string(instances) + " composites");
  }
  return out;
}

FullnessConstruct fullness_construct(const DVMap& alpha) {
  if (!check_dv_morphism(alpha).ok())
    throw ValidationError("fullness_construct: the map fails V1-V4");
  const ContactAlg& a = alpha.dom();
  const ContactAlg& b = alpha.cod();
  if (!a.uf_equivalence() || !b.uf_equivalence())
    throw ValidationError(
        "fullness_construct: ultrafilter contact must be an equivalence on "
        "both sides");

  Report r;
  r.subject = "fullness(" + alpha.name() + ": " + alg_label(a) + " -> " +
              alg_label(b) + ")";

  ClustSpace za = clust_space(a);
  ClustSpace zb = clust_space(b);

  std::vector<int> hat(zb.points.size(), -1);
  bool total = true;
  std::string w;
  for (std::size_t j = 0; j < zb.points.size(); ++j) {
    hat[j] =
        index_of_cluster(za.points, cluster_pullback(alpha, zb.points[j]));
    if (hat[j] < 0) {
      total = false;
      w = "cluster " + zb.points[j].to_string();
    }
  }
  r.add("cluster-pullback-total", total, w);
  if (!total)
    throw TheoremViolation(
        "fullness_construct: a pulled-back family is not a cluster");

  // move the cluster map down to contact classes and pick the least atom
  // in each class as a section
  std::vector<int> cls_of_cluster(za.points.size(), -1);
  for (std::size_t c = 0; c < za.gamma.size(); ++c)
    cls_of_cluster[za.gamma[c]] = static_cast<int>(c);
  std::vector<int> bar(zb.gamma.size(), -1);
  for (std::size_t c = 0; c < zb.gamma.size(); ++c)
    bar[c] = cls_of_cluster[hat[zb.gamma[c]]];

  std::vector<int> least(za.gamma.size(), -1);
  for (int x = a.atom_count() - 1; x >= 0; --x) least[za.uf_class[x]] = x;

  std::vector<int> lift(b.atom_count(), -1);
  for (int y = 0; y < b.atom_count(); ++y)
    lift[y] = least[bar[zb.uf_class[y]]];

  bool comm = true;
  std::string w2;
  for (int y = 0; y < b.atom_count(); ++y)
    if (za.uf_class[lift[y]] != bar[zb.uf_class[y]]) {
      comm = false;
      w2 = "point " + std::to_string(y);
    }
  r.add("lift-commutes-with-projections", comm, w2);

  BoolHom phi(a.base(), b.base(), lift);
  r.add("dual-hom-reflects-contact", reflects_contact(a, b, phi));

  DVMap phim = DVMap::from_hom(alpha.name() + "#", a, b, phi);
  r.add("transform-recovers-input",
        dv_transform(phim).table() == alpha.table());

  // conjugating the regular-closed action by the closure maps recovers the
  // input; stated when both projections are bijections
  if (is_c16(a) && is_c16(b)) {
    RCAlgebra rza = rc_algebra(za.topology);
    RCAlgebra rzb = rc_algebra(zb.topology);
    const int na = a.atom_count();
    const int nb = b.atom_count();

    bool built = true;
    std::string wb;
    std::vector<AtomSet> ztab;
    try {
      for (AtomSet e : rza.algebra.elements()) {
        const std::uint32_t k = rza.to_set(e);
        std::uint32_t h = 0;
        for (int x = 0; x < na; ++x)
          if ((k >> za.gamma[za.uf_class[x]]) & 1u) h |= 1u << x;
        std::uint32_t h2 = 0;
        for (int y = 0; y < nb; ++y)
          if ((h >> lift[y]) & 1u) h2 |= 1u << y;
        std::uint32_t img = 0;
        for (int y = 0; y < nb; ++y)
          if ((h2 >> y) & 1u) img |= 1u << zb.gamma[zb.uf_class[y]];
        ztab.push_back(rzb.to_abstract(img));
      }
    } catch (const ValidationError& ex) {
      built = false;
      wb = ex.what();
    }
    r.add("clopen-action-well-defined", built, wb);

    if (built) {
      DVMap zeta("z(" + alpha.name() + ")", rza.contact, rzb.contact,
                 std::move(ztab));
      DVMap zv = dv_transform(zeta);
      std::map<std::uint32_t, AtomSet> tau_b_inv;
      for (AtomSet e : b.base().elements())
        tau_b_inv[zb.tau[e.bits()]] = e;
      bool ok = true;
      std::string w3;
      for (AtomSet e : a.base().elements()) {
        const AtomSet ta = rza.to_abstract(za.tau[e.bits()]);
        const auto it = tau_b_inv.find(rzb.to_set(zv(ta)));
        if (it == tau_b_inv.end() || !(it->second == alpha(e))) {
          ok = false;
          w3 = "element " + e.to_string();
          break;
        }
      }
      r.add("tau-conjugation-recovers-input", ok, w3);
    }
  }
  return FullnessConstruct{alpha, phi, lift, r};
}

Report monad_check(int n_points) {
  if (n_points < 1 || n_points > 4)
    throw ValidationError("monad_check: point count must be between 1 and 4");
  Report r;
  r.subject = "monad(" + std::to_string(n_points) + " points)";
  FinBoolAlg px("P" + std::to_string(n_points), n_points);
  ContactAlg disc = ContactAlg::discrete(px);

  ClusterEnumeration en = clusters(disc);
  r.merge(en.checks, "clusters");
  const auto ufs = ultrafilters(px);
  bool match = en.brute.size() == ufs.size();
  std::string w;
  if (match) {
    for (const Ultrafilter& u : ufs) {
      Cluster cu;
      cu.members = u.members;
      if (index_of_cluster(en.brute, cu) < 0) {
        match = false;
        w = "atom " + std::to_string(u.atom);
        break;
      }
    }
  } else {
    w = std::to_string(en.brute.size()) + " clusters vs " +
        std::to_string(ufs.size()) + " ultrafilters";
  }
  r.add("clusters-are-ultrafilters", match, w);

  // maps into the power set transpose to tuples of characters, one per
  // point, bijectively
  ContactAlg two = two_contact();
  const AtomSet one = AtomSet::single(0);
  for (int k = 1; k <= 3; ++k) {
    FinBoolAlg ab("A" + std::to_string(k), k);
    ContactAlg a = ContactAlg::discrete(ab);
    const std::string pre = ab.name();
    const auto phis = all_dv_morphisms(a, disc);
    const auto chars = all_dv_morphisms(a, two);

    double expect = 1;
    for (int t = 0; t < n_points; ++t)
      expect *= static_cast<double>(chars.size());
    r.add(pre + ".map-count-is-character-power",
          static_cast<double>(phis.size()) == expect,
          std::to_string(phis.size()) + " maps, " +
              std::to_string(chars.size()) + " characters");

    std::set<std::vector<int>> tuples;
    bool into = true;
    std::string w1;
    for (const DVMap& f : phis) {
      std::vector<int> t(n_points, -1);
      for (int x = 0; x < n_points && into; ++x) {
        std::vector<AtomSet> tbl;
        for (AtomSet e : ab.elements())
          tbl.push_back(f(e).contains(x) ? one : AtomSet::from_bits(0));
        t[x] = index_of_table(chars, tbl);
        if (t[x] < 0) {
          into = false;
          w1 = f.name() + " at point " + std::to_string(x);
        }
      }
      if (!into) break;
      tuples.insert(std::move(t));
    }
    r.add(pre + ".transpose-pointwise-characters", into, w1);
    r.add(pre + ".transpose-injective", into && tuples.size() == phis.size());

    bool rev = into;
    std::string w2;
    if (rev) {
      for (const std::vector<int>& t :
           all_functions(n_points, static_cast<int>(chars.size()))) {
        std::vector<AtomSet> tbl;
        for (AtomSet e : ab.elements()) {
          std::uint32_t m = 0;
          for (int x = 0; x < n_points; ++x)
            if (chars[t[x]](e) == one) m |= 1u << x;
          tbl.push_back(AtomSet::from_bits(m));
        }
        if (index_of_table(phis, tbl) < 0) {
          rev = false;
          w2 = "tuple " + map_string(t);
          break;
        }
      }
    }
    r.add(pre + ".assemble-surjective", rev, w2);
  }
  return r;
}

DeVriesPair make_devries_pair(ContactAlg algebra, std::vector<DVMap> members) {
  if (!is_c16(algebra))
    throw ValidationError(
        "pair: the algebra must satisfy all six contact axioms");
  ContactAlg two = two_contact();
  for (const DVMap& m : members) {
    if (!m.dom().same_structure(algebra) || !m.cod().same_structure(two))
      throw ValidationError("pair: member '" + m.name() +
                            "' has the wrong shape");
    if (!check_dv_morphism(m).ok())
      throw ValidationError("pair: member '" + m.name() + "' fails V1-V4");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i].table() == members[j].table())
        throw ValidationError("pair: members '" + members[i].name() +
                              "' and '" + members[j].name() + "' coincide");
  return DeVriesPair{std::move(algebra), std::move(members)};
}

PairOps pair_ops(const DeVriesPair& p) {
  make_devries_pair(p.algebra, p.members);
  PairOps out;
  Report& r = out.checks;
  const ContactAlg& a = p.algebra;
  const int ny = static_cast<int>(p.members.size());
  r.subject =
      "pair(" + alg_label(a) + ", " + std::to_string(ny) + " members)";

  ContactAlg two = two_contact();
  const AtomSet one = AtomSet::single(0);
  const auto homs = all_dv_morphisms(a, two);
  const int nh = static_cast<int>(homs.size());
  if (nh > 12)
    throw ValidationError("pair_ops: map space too large for the survey");

  std::vector<int> where(ny, -1);
  bool located = true;
  for (int i = 0; i < ny; ++i) {
    where[i] = index_of_table(homs, p.members[i].table());
    if (where[i] < 0) located = false;
  }
  r.add("members-among-all-maps", located);
  if (!located)
    throw TheoremViolation(
        "pair_ops: a validated member is missing from the enumeration");

  out.is_pair = pair_condition_all(a, p.members);

  // topologise the full map space with the vanishing families as a closed
  // base; the member set must be dense exactly when the pair condition
  // holds
  const std::uint32_t full = (1u << nh) - 1u;
  std::vector<std::uint32_t> opens;
  for (AtomSet e : a.base().elements())
    opens.push_back(full & ~family_mask(homs, a, e));
  FinTopSpace sp("m(" + a.base().name() + ")", nh, opens);
  std::uint32_t ymask = 0;
  for (int i = 0; i < ny; ++i) ymask |= 1u << where[i];
  out.dense = is_dense(sp, ymask);
  r.add("density-matches-pair-condition", out.dense == out.is_pair,
        std::string("pair=") + (out.is_pair ? "yes" : "no") +
            " dense=" + (out.dense ? "yes" : "no"));

  {
    const std::uint32_t ytop = family_mask(p.members, a, a.base().top());
    const std::uint32_t ybot = family_mask(p.members, a, a.base().bot());
    const std::uint32_t all_members =
        ny == 0 ? 0u : ((1u << ny) - 1u);
    r.add("family-endpoints", ytop == all_members && ybot == 0);
  }

  // per-point families on the map space are clusters and follow the
  // interior rule
  RCAlgebra rc = rc_algebra(sp);
  SigmaReport sg = sigma_candidates(rc, rc.contact);
  r.add("point-families-are-clusters", sg.all_clusters);
  bool irule = true;
  std::string wi;
  for (int x = 0; x < nh && irule; ++x) {
    std::vector<AtomSet> tbl;
    for (AtomSet e : rc.algebra.elements()) {
      const std::uint32_t f = rc.to_set(e);
      tbl.push_back(((sp.interior(f) >> x) & 1u) ? one
                                                 : AtomSet::from_bits(0));
    }
    DVMap sx("s" + std::to_string(x), rc.contact, two, std::move(tbl));
    if (!check_dv_morphism(sx).ok()) {
      irule = false;
      wi = "point " + std::to_string(x) + " not a morphism";
      break;
    }
    if (!(omega_of(sx) == sg.candidates[x])) {
      irule = false;
      wi = "point " + std::to_string(x) + " family mismatch";
    }
  }
  r.add("interior-rule-matches-point-families", irule, wi);

  out.bound = a.atom_count();
  out.full = (ny == nh);
  std::string uw;
  if (out.is_pair) {
    if (ny > 6)
      throw ValidationError(
          "pair_ops: universality search supports at most 6 members");
    out.universal = pair_universal(p, out.bound, &uw);
  } else {
    out.universal = false;
    uw = "not a pair";
  }
  r.add("universality-search-bound", true,
        "codomains up to " + std::to_string(out.bound) + " atoms");
  r.add("universal-iff-all-maps", out.universal == (out.is_pair && out.full),
        uw);
  return out;
}

BooleanDVExtension make_extension(DVMap gamma) {
  if (!gamma.cod().off_diagonal_pairs().empty())
    throw ValidationError(
        "extension: the target must carry the overlap contact");
  if (!is_c16(gamma.dom()))
    throw ValidationError(
        "extension: the source must satisfy all six contact axioms");
  if (!check_dv_morphism(gamma).ok())
    throw ValidationError("extension: the map fails V1-V4");
  if (!injective_table(gamma))
    throw ValidationError("extension: the map is not injective");
  if (!atoms_are_meets(gamma))
    throw ValidationError(
        "extension: a target atom is not the meet of the image elements "
        "above it");
  return BooleanDVExtension{std::move(gamma)};
}

BooleanDVExtension booleanize(const DeVriesPair& p) {
  make_devries_pair(p.algebra, p.members);
  if (p.members.empty())
    throw ValidationError(
        "booleanize: an empty member set has a degenerate power set");
  const int ny = static_cast<int>(p.members.size());
  FinBoolAlg pb("P" + std::to_string(ny), ny);
  ContactAlg tgt = ContactAlg::discrete(pb);
  const AtomSet one = AtomSet::single(0);
  std::vector<AtomSet> table;
  for (AtomSet e : p.algebra.base().elements()) {
    std::uint32_t m = 0;
    for (int i = 0; i < ny; ++i)
      if (p.members[i](e) == one) m |= 1u << i;
    table.push_back(AtomSet::from_bits(m));
  }
  return BooleanDVExtension{DVMap("g(" + p.algebra.base().name() + ")",
                                  p.algebra, tgt, std::move(table))};
}

namespace {

ExtensionOps extension_core(BooleanDVExtension ext, Report head,
                            const DeVriesPair* origin) {
  ExtensionOps out{std::move(ext), {}, false, false, 0, std::move(head)};
  Report& r = out.checks;
  const DVMap& g = out.ext.gamma;
  const ContactAlg& a = g.dom();
  const FinBoolAlg& tb = g.cod().base();

  if (origin) {
    DVCheck dc = check_dv_morphism(g);
    r.add("booleanization-v-morphism", dc.ok(),
          dc.ok() ? "" : dc.as_report("").first_failure());
    r.add("booleanization-injective", injective_table(g));
    r.add("booleanization-atoms-are-meets", atoms_are_meets(g));
  }

  out.trace = trace_of(g);
  bool tr_ok = true;
  std::string tw;
  for (std::size_t x = 0; x < out.trace.size(); ++x)
    if (!check_dv_morphism(out.trace[x]).ok() && tr_ok) {
      tr_ok = false;
      tw = "target atom " + std::to_string(x);
    }
  r.add("trace-members-are-morphisms", tr_ok, tw);

  out.trace_distinct = true;
  {
    std::set<std::vector<AtomSet>> seen;
    for (const DVMap& t : out.trace)
      if (!seen.insert(t.table()).second) out.trace_distinct = false;
  }
  r.add("atomic-comparison-injective", out.trace_distinct);

  const bool tp = pair_condition_all(a, out.trace);
  r.add("trace-is-pair", tp);

  if (origin) {
    bool same = origin->members.size() == out.trace.size();
    std::string ws;
    for (std::size_t i = 0; same && i < out.trace.size(); ++i)
      if (origin->members[i].table() != out.trace[i].table()) {
        same = false;
        ws = "member " + std::to_string(i);
      }
    r.add("trace-recovers-members", same, ws);
  }

  // rebuilding the extension from its own trace gives the same map once
  // target atoms are identified with trace members
  if (tr_ok && out.trace_distinct && tp) {
    DeVriesPair tq{a, out.trace};
    BooleanDVExtension g2 = booleanize(tq);
    std::vector<AtomSet> idtab;
    for (AtomSet e : tb.elements()) idtab.push_back(e);
    HomValidation hv = validate_hom(tb, g2.gamma.cod().base(), idtab);
    r.add("atom-identification-boolean-iso", hv.ok);
    bool comm = true;
    std::string wc;
    for (AtomSet e : a.base().elements())
      if (g2.gamma(e).bits() != g(e).bits()) {
        comm = false;
        wc = "element " + e.to_string();
        break;
      }
    r.add("identification-commutes", comm, wc);
  }

  // universality: every extension of a small algebra with the same image
  // must factor through this one
  out.bound = a.atom_count();
  bool uni = true;
  std::string uw;
  std::set<std::uint32_t> image;
  for (const AtomSet& v : g.table()) image.insert(v.bits());
  for (int n2 = 1; n2 <= out.bound && uni; ++n2) {
    FinBoolAlg b2("C" + std::to_string(n2), n2);
    for (const ContactAlg& a2 : all_contact_algs(b2)) {
      if (!is_c16(a2)) continue;
      const auto gs = all_dv_morphisms(a2, g.cod());
      const auto alphas = all_dv_morphisms(a2, a);
      for (const DVMap& g3 : gs) {
        if (!injective_table(g3) || !atoms_are_meets(g3)) continue;
        std::set<std::uint32_t> im2;
        for (const AtomSet& v : g3.table()) im2.insert(v.bits());
        if (im2 != image) continue;
        bool found = false;
        for (const DVMap& al : alphas)
          if (dv_compose(g, al).table() == g3.table()) {
            found = true;
            break;
          }
        if (!found) {
          uni = false;
          uw = alg_label(a2) + " map " + g3.name();
          break;
        }
      }
      if (!uni) break;
    }
  }
  out.universal = uni;
  r.add("universality-search-bound", true,
        "sources up to " + std::to_string(out.bound) + " atoms");
  r.add("universality-verdict", true,
        uni ? "universal" : "not universal: " + uw);
  return out;
}

}  // namespace

ExtensionOps extension_ops(const DeVriesPair& p) {
  BooleanDVExtension e = booleanize(p);
  Report head;
  head.subject = "extension(pair " + alg_label(p.algebra) + ", " +
                 std::to_string(p.members.size()) + " members)";
  return extension_core(std::move(e), std::move(head), &p);
}

ExtensionOps extension_ops(const BooleanDVExtension& e) {
  BooleanDVExtension v = make_extension(e.gamma);
  Report head;
  head.subject = "extension(" + e.gamma.name() + ")";
  return extension_core(std::move(v), std::move(head), nullptr);
}

BmoRoundtrip bmo_roundtrip(int max_atoms) {
  if (max_atoms < 1 || max_atoms > 2)
    throw ValidationError("bmo_roundtrip: atom bound must be 1 or 2");
  BmoRoundtrip out;
  Report& r = out.checks;
  r.subject = "bmo(" + std::to_string(max_atoms) + ")";
  ContactAlg two = two_contact();

  // every member set over every admissible algebra goes through the pair
  // survey; universal ones continue through the extension survey
  std::vector<DeVriesPair> upairs;
  for (int n = 1; n <= max_atoms; ++n) {
    FinBoolAlg base("B" + std::to_string(n), n);
    for (const ContactAlg& ca : all_contact_algs(base)) {
      if (!is_c16(ca)) continue;
      const auto homs = all_dv_morphisms(ca, two);
      const int nh = static_cast<int>(homs.size());
      for (std::uint32_t sel = 0; sel < (1u << nh); ++sel) {
        std::vector<DVMap> members;
        for (int i = 0; i < nh; ++i)
          if ((sel >> i) & 1u) members.push_back(homs[i]);
        DeVriesPair p{ca, std::move(members)};
        ++out.pairs;
        const std::string lab = alg_label(ca) + "/Y=" +
                                point_set_to_string(sel);
        PairOps po = pair_ops(p);
        r.add("pair." + lab, po.checks.all_pass(), po.checks.first_failure());
        if (po.is_pair && po.universal) {
          ++out.universal_pairs;
          ExtensionOps eo = extension_ops(p);
          r.add("pair-roundtrip." + lab, eo.checks.all_pass(),
                eo.checks.first_failure());
          upairs.push_back(std::move(p));
        }
      }
    }
  }

  // arrows between universal pairs: maps whose composites send the member
  // set of the target into the member set of the source
  struct PairArrow {
    int src;
    int dst;
    DVMap alpha;
    std::vector<int> f;
  };
  std::vector<PairArrow> arrows;
  bool act_ok = true, fun_ok = true;
  std::string wa, wf;
  for (std::size_t i = 0; i < upairs.size(); ++i)
    for (std::size_t j = 0; j < upairs.size(); ++j) {
      const DeVriesPair& pi = upairs[i];
      const DeVriesPair& pj = upairs[j];
      for (const DVMap& al : all_dv_morphisms(pi.algebra, pj.algebra)) {
        bool morph = true;
        std::vector<int> fa(pj.members.size(), -1);
        for (std::size_t y = 0; y < pj.members.size() && morph; ++y) {
          fa[y] = index_of_table(pi.members,
                                 dv_compose(pj.members[y], al).table());
          if (fa[y] < 0) morph = false;
        }
        if (!morph) continue;
        ++out.pair_morphisms;

        const DVMap gi = booleanize(pi).gamma;
        const DVMap gj = booleanize(pj).gamma;
        BoolHom delta(gi.cod().base(), gj.cod().base(), fa);

        // the preimage hom closes the square with the booleanizations
        DVMap rhs = dv_compose(gj, al);
        for (AtomSet e : pi.algebra.base().elements())
          if (!(delta(gi(e)) == rhs(e)) && act_ok) {
            act_ok = false;
            wa = "square " + std::to_string(i) + "->" + std::to_string(j) +
                 " " + al.name();
          }

        // composing with a complete hom needs no lower transform
        DVMap ddv = DVMap::from_hom("d", gi.cod(), gj.cod(), delta);
        if (dv_compose(ddv, gi).table() != plain_compose(ddv, gi).table() &&
            act_ok) {
          act_ok = false;
          wa = "composite " + std::to_string(i) + "->" + std::to_string(j);
        }

        // evaluation against coordinates matches the index action
        for (std::size_t y = 0; y < pj.members.size() && act_ok; ++y)
          for (AtomSet e : pi.algebra.base().elements())
            if (pi.members[fa[y]](e).contains(0) !=
                delta(gi(e)).contains(static_cast<int>(y))) {
              act_ok = false;
              wa = "evaluation " + std::to_string(i) + "->" +
                   std::to_string(j);
            }
        arrows.push_back(
            PairArrow{static_cast<int>(i), static_cast<int>(j), al, fa});
      }
    }
  for (const PairArrow& u : arrows)
    for (const PairArrow& v : arrows) {
      if (v.src != u.dst || !fun_ok) continue;
      const DeVriesPair& pi = upairs[u.src];
      const DeVriesPair& pk = upairs[v.dst];
      DVMap comp = dv_compose(v.alpha, u.alpha);
      for (std::size_t y = 0; y < pk.members.size() && fun_ok; ++y) {
        const int idx =
            index_of_table(pi.members, dv_compose(pk.members[y], comp).table());
        if (idx < 0 || idx != u.f[v.f[y]])
          fun_ok = false;
      }
      if (!fun_ok)
        wf = "arrows " + std::to_string(u.src) + "->" + std::to_string(u.dst) +
             "->" + std::to_string(v.dst);
    }
  r.add("pair-morphism-action", act_ok, wa);
  r.add("pair-morphism-functorial", fun_ok, wf);

  // extension census over the same bounds
  std::vector<BooleanDVExtension> uexts;
  std::vector<std::vector<DVMap>> utraces;
  for (int n = 1; n <= max_atoms; ++n) {
    FinBoolAlg base("B" + std::to_string(n), n);
    for (const ContactAlg& ca : all_contact_algs(base)) {
      if (!is_c16(ca)) continue;
      for (int m = 1; m <= max_atoms; ++m) {
        ContactAlg tgt =
            ContactAlg::discrete(FinBoolAlg("P" + std::to_string(m), m));
        for (const DVMap& g : all_dv_morphisms(ca, tgt)) {
          if (!injective_table(g) || !atoms_are_meets(g)) continue;
          ++out.extensions;
          BooleanDVExtension ext{g};
          ExtensionOps eo = extension_ops(ext);
          const std::string lab =
              alg_label(ca) + "->" + tgt.base().name() + "/" + g.name();
          r.add("extension." + lab, eo.checks.all_pass(),
                eo.checks.first_failure());
          if (eo.universal) {
            ++out.universal_extensions;
            utraces.push_back(trace_of(g));
            uexts.push_back(std::move(ext));
          }
        }
      }
    }
  }

  // arrows between universal extensions: map pairs closing the square,
  // with the trace action and the atom identification natural in them
  struct ExtArrow {
    int src;
    int dst;
    DVMap alpha;
    BoolHom delta;
  };
  std::vector<ExtArrow> earr;
  bool ub_ok = true, nat_ok = true;
  std::string wu, wn;
  for (std::size_t i = 0; i < uexts.size(); ++i)
    for (std::size_t j = 0; j < uexts.size(); ++j) {
      const DVMap& gi = uexts[i].gamma;
      const DVMap& gj = uexts[j].gamma;
      for (const DVMap& al : all_dv_morphisms(gi.dom(), gj.dom()))
        for (const BoolHom& d : all_homs(gi.cod().base(), gj.cod().base())) {
          bool sq = true;
          DVMap rhs = dv_compose(gj, al);
          for (AtomSet e : gi.dom().base().elements())
            if (!(d(gi(e)) == rhs(e))) {
              sq = false;
              break;
            }
          if (!sq) continue;
          ++out.extension_morphisms;

          DVMap ddv = DVMap::from_hom("d", gi.cod(), gj.cod(), d);
          if (dv_compose(ddv, gi).table() != plain_compose(ddv, gi).table() &&
              ub_ok) {
            ub_ok = false;
            wu = "composite " + std::to_string(i) + "->" + std::to_string(j);
          }

          const std::vector<DVMap>& tri = utraces[i];
          const std::vector<DVMap>& trj = utraces[j];
          std::vector<int> f(trj.size(), -1);
          bool ev = true;
          for (std::size_t y = 0; y < trj.size() && ev; ++y) {
            f[y] = index_of_table(tri, dv_compose(trj[y], al).table());
            if (f[y] < 0) ev = false;
          }
          for (std::size_t y = 0; y < trj.size() && ev; ++y) {
            DVMap lhs = dv_compose(trj[y], al);
            for (AtomSet e : gi.dom().base().elements())
              if (lhs(e).contains(0) !=
                  d(gi(e)).contains(static_cast<int>(y))) {
                ev = false;
                break;
              }
          }
          if (!ev && ub_ok) {
            ub_ok = false;
            wu = "trace action " + std::to_string(i) + "->" +
                 std::to_string(j);
          }
          if (ev) {
            for (AtomSet e : gi.cod().base().elements()) {
              std::uint32_t lhsm = 0;
              for (std::size_t y = 0; y < f.size(); ++y)
                if (e.contains(f[y])) lhsm |= 1u << y;
              if (lhsm != d(e).bits() && nat_ok) {
                nat_ok = false;
                wn = "identification " + std::to_string(i) + "->" +
                     std::to_string(j);
              }
            }
          }
          earr.push_back(
              ExtArrow{static_cast<int>(i), static_cast<int>(j), al, d});
        }
    }
  bool paste_ok = true;
  std::string wp;
  for (const ExtArrow& u : earr)
    for (const ExtArrow& v : earr) {
      if (v.src != u.dst || !paste_ok) continue;
      DVMap ca = dv_compose(v.alpha, u.alpha);
      BoolHom cd = BoolHom::compose(v.delta, u.delta);
      DVMap rhs = dv_compose(uexts[v.dst].gamma, ca);
      const DVMap& gsrc = uexts[u.src].gamma;
      for (AtomSet e : gsrc.dom().base().elements())
        if (!(cd(gsrc(e)) == rhs(e))) {
          paste_ok = false;
          wp = "arrows " + std::to_string(u.src) + "->" +
               std::to_string(u.dst) + "->" + std::to_string(v.dst);
        }
    }
  r.add("extension-morphism-composite-plain", ub_ok, wu);
  r.add("identification-natural", nat_ok, wn);
  r.add("extension-morphism-pasting", paste_ok, wp);
  r.add("census", true,
        std::to_string(out.pairs) + " member sets, " +
            std::to_string(out.universal_pairs) + " universal pairs, " +
            std::to_string(out.extensions) + " extensions, " +
            std::to_string(out.universal_extensions) + " universal, " +
            std::to_string(out.pair_morphisms) + "+" +
            std::to_string(out.extension_morphisms) + " arrows");
  return out;
}

SurveyTable collapse_survey(int n) {
  if (n < 1 || n > 4)
    throw ValidationError(
        "collapse_survey: atom count must be between 1 and 4");
  SurveyTable out;
  out.n_atoms = n;
  Report& r = out.checks;
  r.subject = "survey(" + std::to_string(n) + ")";
  FinBoolAlg base("B" + std::to_string(n), n);

  bool diag = true, overlap_pass = false;
  std::string wd;
  for (const ContactAlg& ca : all_contact_algs(base)) {
    AxiomReport ax = check_axioms(ca);
    SurveyRow row;
    row.relation = ca.rel_string();
    for (int i = 0; i < 6; ++i) row.axiom[i] = ax.c[i].pass;
    row.normal = ax.c16();
    if (ca.off_diagonal_pairs().empty()) overlap_pass = row.normal;
    if (row.normal) {
      ++out.normal_count;
      if (!ca.off_diagonal_pairs().empty()) {
        diag = false;
        wd = row.relation;
      }
    }
    out.rows.push_back(std::move(row));
  }
  out.diagonal_only = diag;
  r.add("overlap-relation-passes", overlap_pass);
  r.add("normal-rows-have-empty-off-diagonal", diag, wd);
  r.add("census", true,
        std::to_string(out.rows.size()) + " relations, " +
            std::to_string(out.normal_count) + " pass all six");
  return out;
}

FedFlags fed_classify(const DVMap& phi) {
  FedFlags out;
  Report& r = out.checks;
  r.subject = "fed(" + phi.name() + ")";

  out.bool_hom = phi.is_bool_hom();
  r.add("boolean-hom", true, out.bool_hom ? "yes" : "no");
  if (out.bool_hom) {
    BoolHom h = phi.as_bool_hom();
    out.sup_preserving = is_sup_preserving(h).ok;
    out.reflects = reflects_contact(phi.dom(), phi.cod(), h);
    r.add("sup-preserving", true, out.sup_preserving ? "yes" : "no");
    r.add("reflects-contact", true, out.reflects ? "yes" : "no");
    r.add("reflection-matches-way-below-preservation",
          out.reflects == preserves_ll(phi.dom(), phi.cod(), h));
  }
  out.fedorchuk = out.bool_hom && out.sup_preserving && out.reflects;
  out.compatible = out.bool_hom && out.reflects;
  out.coincide = out.fedorchuk == out.compatible;
  r.add("classes-coincide-here", true, out.coincide ? "yes" : "no");
  return out;
}

}  // namespace dualkit
