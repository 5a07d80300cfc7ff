#include "dualkit/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dualkit/catkit.hpp"
#include "dualkit/combinatorics.hpp"
#include "dualkit/contact.hpp"
#include "dualkit/devries.hpp"
#include "dualkit/finboole.hpp"
#include "dualkit/fintop.hpp"
#include "dualkit/fixtures.hpp"
#include "dualkit/pipelines.hpp"
#include "dualkit/rc.hpp"

namespace dualkit {

namespace {

int pick(int v, int dflt) { return v > 0 ? v : dflt; }

std::string alg_label(const ContactAlg& a) {
  return a.base().name() + "[" + a.rel_string() + "]";
}

std::vector<ContactAlg> relations_up_to(int max_atoms) {
  std::vector<ContactAlg> out;
  for (int n = 1; n <= max_atoms; ++n) {
    FinBoolAlg base("A" + std::to_string(n), n);
    for (ContactAlg& ca : all_contact_algs(base)) out.push_back(std::move(ca));
  }
  return out;
}

bool is_normal_alg(const ContactAlg& a) { return check_axioms(a).c16(); }

std::string table_string(const std::vector<AtomSet>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += t[i].to_string();
  }
  return s + "]";
}

std::string map_string(const std::vector<int>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s + ")";
}

std::vector<FinTopSpace> spaces_up_to(int max_points) {
  std::vector<FinTopSpace> out;
  for (int n = 1; n <= max_points; ++n)
    for (FinTopSpace& s : all_spaces(n)) out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------

Report ultrafilter_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "ultrafilter-oracle";
  const int maxn = pick(opt.max_atoms, 4);
  for (int k = 1; k <= maxn; ++k) {
    FinBoolAlg a("B" + std::to_string(k), k);
    const auto fast = ultrafilters(a);
    const auto brute = brute_force_ultrafilters(a);
    bool same = fast.size() == brute.size();
    std::string w;
    if (!same)
      w = "fast=" + std::to_string(fast.size()) +
          " brute=" + std::to_string(brute.size());
    for (std::size_t i = 0; same && i < fast.size(); ++i)
      if (fast[i].members != brute[i]) {
        same = false;
        w = "index " + std::to_string(i);
      }
    r.add(a.name() + ".principal-enumeration-matches-filter-search", same, w);
    r.add(a.name() + ".count-equals-atom-count",
          static_cast<int>(fast.size()) == k, std::to_string(fast.size()));
    bool ordered = true;
    for (std::size_t i = 0; i < fast.size(); ++i)
      if (fast[i].atom != static_cast<int>(i)) ordered = false;
    r.add(a.name() + ".generators-in-atom-order", ordered);
  }
  return r;
}

Report axiom_equivalence_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "axiom-equivalences";
  const int maxn = pick(opt.max_atoms, 4);
  long total = 0;
  for (const ContactAlg& ca : relations_up_to(maxn)) {
    const AxiomReport ax = check_axioms(ca);
    const std::string lab = alg_label(ca);
    r.add(lab + "." + ax.equiv14.check, ax.equiv14.pass, ax.equiv14.witness);
    r.add(lab + "." + ax.equiv16.check, ax.equiv16.pass, ax.equiv16.witness);
    ++total;
  }
  r.add("relations-checked", true, std::to_string(total));
  return r;
}

// Every reflexive symmetric additive relation on the nonzero elements is the
// canonical extension of its restriction to atoms.  The candidate space is
// walked directly: the diagonal is forced, symmetry is built into the
// encoding, and additivity is tested pairwise before the comparison.
Report atom_determinacy_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "atom-determinacy";
  const int maxn = pick(opt.max_atoms, 3);
  if (maxn > 3)
    throw ValidationError(
        "atom-determinacy: relations on more than 3 atoms are out of reach");
  for (int n = 1; n <= maxn; ++n) {
    const int m = (1 << n) - 1;  // nonzero element masks 1..m
    std::vector<std::pair<int, int>> free_pairs;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) free_pairs.emplace_back(a, b);
    const int nb = static_cast<int>(free_pairs.size());
    long survivors = 0;
    bool all_derived = true;
    std::string wit;
    std::vector<std::uint8_t> row(m + 1, 0);
    for (std::uint64_t code = 0; code < (1ull << nb); ++code) {
      for (int a = 1; a <= m; ++a)
        row[a] = static_cast<std::uint8_t>(1u << (a - 1));
      for (int i = 0; i < nb; ++i)
        if ((code >> i) & 1) {
          row[free_pairs[i].first] |=
              static_cast<std::uint8_t>(1u << (free_pairs[i].second - 1));
          row[free_pairs[i].second] |=
              static_cast<std::uint8_t>(1u << (free_pairs[i].first - 1));
        }
      bool additive = true;
      for (int a = 1; a <= m && additive; ++a) {
        const std::uint8_t ra = row[a];
        for (int b = 1; b <= m && additive; ++b)
          for (int c = b + 1; c <= m; ++c) {
            const int u = b | c;
            const bool lhs = (ra >> (u - 1)) & 1;
            const bool rhs = ((ra >> (b - 1)) & 1) || ((ra >> (c - 1)) & 1);
            if (lhs != rhs) {
              additive = false;
              break;
            }
          }
      }
      if (!additive) continue;
      ++survivors;
      if (!all_derived) continue;
      std::vector<std::pair<int, int>> atom_pairs;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if ((row[1 << x] >> ((1 << y) - 1)) & 1) atom_pairs.emplace_back(x, y);
      ContactAlg derived(FinBoolAlg("D", n), atom_pairs);
      for (int a = 1; a <= m && all_derived; ++a)
        for (int b = 1; b <= m; ++b) {
          const bool want = (row[a] >> (b - 1)) & 1;
          const bool got = derived.contact(AtomSet::from_bits(a),
                                           AtomSet::from_bits(b));
          if (want != got) {
            all_derived = false;
            wit = "atoms=" + std::to_string(n) + " code=" + std::to_string(code);
            break;
          }
        }
    }
    const std::string base = "B" + std::to_string(n);
    r.add(base + ".additive-relations-are-atom-derived", all_derived, wit);
    const long expect = 1l << (n * (n - 1) / 2);
    r.add(base + ".survivor-count-matches-atom-relation-count",
          survivors == expect,
          "found " + std::to_string(survivors) + " expected " +
              std::to_string(expect));
  }
  return r;
}

// Both cluster enumerations on every relation up to 3 atoms; beyond that the
// subset walk is kept to the transitive relations, where the agreement and
// class-count statements actually apply.
Report cluster_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "cluster-duality";
  const int maxn = pick(opt.max_atoms, 4);
  int transitive = 0, normal = 0;
  for (const ContactAlg& ca : relations_up_to(maxn)) {
    if (ca.atom_count() > 3 && !ca.uf_equivalence()) continue;
    ClusterEnumeration en = clusters(ca);
    const std::string lab = alg_label(ca);
    if (en.uf_equivalence) {
      ++transitive;
      if (is_normal_alg(ca)) ++normal;
      r.merge(en.checks, lab);
    } else {
      r.add(lab + ".enumeration-census", true,
            "via-ultrafilters=" + std::to_string(en.via_ufs.size()) +
                " brute=" + std::to_string(en.brute.size()));
    }
  }
  r.add("transitive-relations", true, std::to_string(transitive));
  r.add("normal-relations", true, std::to_string(normal));
  return r;
}

bool table_monotone(const FinBoolAlg& dom, const FinBoolAlg& cod,
                    const std::vector<AtomSet>& t) {
  const auto elems = dom.elements();
  for (AtomSet a : elems)
    for (AtomSet b : elems)
      if (dom.leq(a, b) && !cod.leq(t[a.bits()], t[b.bits()])) return false;
  return true;
}

bool table_preserves_ll(const ContactAlg& dom, const ContactAlg& cod,
                        const std::vector<AtomSet>& t) {
  const auto elems = dom.base().elements();
  for (AtomSet a : elems)
    for (AtomSet b : elems)
      if (dom.ll(a, b) && !cod.ll(t[a.bits()], t[b.bits()])) return false;
  return true;
}

std::vector<AtomSet> local_transform(const ContactAlg& dom,
                                     const ContactAlg& cod,
                                     const std::vector<AtomSet>& t) {
  const auto elems = dom.base().elements();
  std::vector<AtomSet> out;
  out.reserve(elems.size());
  for (AtomSet e : elems) {
    AtomSet j = cod.base().bot();
    for (AtomSet b : elems)
      if (dom.ll(b, e)) j = cod.base().join(j, t[b.bits()]);
    out.push_back(j);
  }
  return out;
}

struct LawVerdict {
  bool below = true, monotone = true, idem = true, local = true;
  std::string w_below, w_monotone, w_idem, w_local;
};

void check_unary_laws(const DVMap& f, LawVerdict& v, const std::string& lab) {
  const FinBoolAlg& cb = f.cod().base();
  const DVMap fv = dv_transform(f);
  for (AtomSet e : f.dom().base().elements())
    if (!cb.leq(fv(e), f(e)) && v.below) {
      v.below = false;
      v.w_below = lab + " at " + e.to_string();
    }
  if (!table_monotone(f.dom().base(), cb, fv.table()) && v.monotone) {
    v.monotone = false;
    v.w_monotone = lab;
  }
  if (dv_transform(fv).table() != fv.table() && v.idem) {
    v.idem = false;
    v.w_idem = lab;
  }
  if (local_transform(f.dom(), f.cod(), f.table()) != fv.table() && v.local) {
    v.local = false;
    v.w_local = lab;
  }
}

Report transform_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "devries-transform";
  const int maxn = pick(opt.max_atoms, 2);
  if (maxn > 2)
    throw ValidationError(
        "devries-transform: the exhaustive stage tops out at 2 atoms");

  std::vector<ContactAlg> pool;
  {
    auto rels = relations_up_to(maxn);
    for (ContactAlg& ca : rels)
      if (check_axioms(ca).c[4].pass) pool.push_back(std::move(ca));
  }
  const int np = static_cast<int>(pool.size());

  struct AdmMap {
    std::vector<AtomSet> t, tv;
  };
  std::vector<std::vector<std::vector<AdmMap>>> adm(np);
  long map_count = 0;
  LawVerdict ex;
  for (int i = 0; i < np; ++i) {
    adm[i].resize(np);
    for (int j = 0; j < np; ++j) {
      const ContactAlg& A = pool[i];
      const ContactAlg& B = pool[j];
      const int ne = 1 << A.atom_count();
      for (const auto& fn : all_functions(ne, 1 << B.atom_count())) {
        std::vector<AtomSet> t;
        t.reserve(ne);
        for (int v : fn)
          t.push_back(AtomSet::from_bits(static_cast<std::uint32_t>(v)));
        if (!table_monotone(A.base(), B.base(), t) ||
            !table_preserves_ll(A, B, t))
          continue;
        ++map_count;
        DVMap f("f", A, B, t);
        check_unary_laws(f, ex,
                         alg_label(A) + "->" + alg_label(B) + " " +
                             table_string(t));
        adm[i][j].push_back({std::move(t), local_transform(A, B, f.table())});
      }
    }
  }

  long pair_count = 0;
  bool comp_ok = true;
  std::string comp_w;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      for (int k = 0; k < np; ++k)
        for (const AdmMap& mf : adm[i][j])
          for (const AdmMap& mg : adm[j][k]) {
            ++pair_count;
            const int ne = static_cast<int>(mf.t.size());
            std::vector<AtomSet> plain(ne), viav(ne);
            for (int e = 0; e < ne; ++e) {
              plain[e] = mg.t[mf.t[e].bits()];
              viav[e] = mg.tv[mf.tv[e].bits()];
            }
            if (local_transform(pool[i], pool[k], plain) !=
                    local_transform(pool[i], pool[k], viav) &&
                comp_ok) {
              comp_ok = false;
              comp_w = alg_label(pool[i]) + "->" + alg_label(pool[j]) + "->" +
                       alg_label(pool[k]) + " " + table_string(mf.t) + " then " +
                       table_string(mg.t);
            }
          }

  r.add("exhaustive-maps", true, std::to_string(map_count));
  r.add("exhaustive-pairs", true, std::to_string(pair_count));
  r.add("transform-below-map", ex.below, ex.w_below);
  r.add("transform-monotone", ex.monotone, ex.w_monotone);
  r.add("transform-idempotent", ex.idem, ex.w_idem);
  r.add("transform-compositional", comp_ok, comp_w);
  r.add("local-transform-matches-library", ex.local, ex.w_local);

  FinBoolAlg rbase("R3", 3);
  std::vector<ContactAlg> rpool;
  {
    auto rels = all_contact_algs(rbase);
    for (ContactAlg& ca : rels)
      if (check_axioms(ca).c[4].pass) rpool.push_back(std::move(ca));
  }
  r.add("random-pool-relations", true, std::to_string(rpool.size()));

  std::mt19937 rng(opt.seed);
  auto rand_monotone = [&rng](const ContactAlg& A, const ContactAlg& B) {
    const int n = A.atom_count();
    const std::uint32_t full = (1u << B.atom_count()) - 1;
    std::vector<std::uint32_t> v(n);
    for (int x = 0; x < n; ++x) v[x] = rng() & full;
    const auto elems = A.base().elements();
    std::vector<AtomSet> t;
    t.reserve(elems.size());
    for (AtomSet e : elems) {
      std::uint32_t j = 0;
      for (int x = 0; x < n; ++x)
        if (e.contains(x)) j |= v[x];
      t.push_back(AtomSet::from_bits(j));
    }
    if (rng() & 1u) t.back() = AtomSet::from_bits(full);
    return t;
  };

  const long target = 1000, cap = 500000;
  long accepted = 0, tried = 0;
  LawVerdict rn;
  bool rcomp_ok = true;
  std::string rcomp_w;
  while (accepted < target && tried < cap) {
    ++tried;
    const ContactAlg& A = rpool[rng() % rpool.size()];
    const ContactAlg& B = rpool[rng() % rpool.size()];
    const ContactAlg& C = rpool[rng() % rpool.size()];
    auto t1 = rand_monotone(A, B);
    auto t2 = rand_monotone(B, C);
    if (!table_preserves_ll(A, B, t1) || !table_preserves_ll(B, C, t2))
      continue;
    ++accepted;
    const std::string lab = "sample " + std::to_string(accepted);
    DVMap f("f", A, B, t1), g("g", B, C, t2);
    check_unary_laws(f, rn, lab + " first leg");
    check_unary_laws(g, rn, lab + " second leg");
    if (dv_transform(plain_compose(g, f)).table() !=
            dv_transform(plain_compose(dv_transform(g), dv_transform(f)))
                .table() &&
        rcomp_ok) {
      rcomp_ok = false;
      rcomp_w = lab + " " + alg_label(A) + "->" + alg_label(B) + "->" +
                alg_label(C);
    }
  }
  r.add("random-pairs-accepted", accepted >= target,
        std::to_string(accepted) + " of " + std::to_string(tried) + " draws");
  r.add("random-transform-below-map", rn.below, rn.w_below);
  r.add("random-transform-monotone", rn.monotone, rn.w_monotone);
  r.add("random-transform-idempotent", rn.idem, rn.w_idem);
  r.add("random-transform-compositional", rcomp_ok, rcomp_w);
  return r;
}

Report omega_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "omega";
  const int maxn = pick(opt.max_atoms, 3);
  int covered = 0;
  for (const ContactAlg& ca : relations_up_to(maxn)) {
    if (!ca.uf_equivalence()) continue;
    ++covered;
    r.merge(omega_bijection(ca), alg_label(ca));
  }
  r.add("algebras-covered", true, std::to_string(covered));

  const int nat = std::min(maxn, 2);
  std::vector<ContactAlg> npool;
  {
    auto rels = relations_up_to(nat);
    for (ContactAlg& ca : rels)
      if (is_normal_alg(ca)) npool.push_back(std::move(ca));
  }
  long squares = 0;
  bool nat_ok = true;
  std::string nw;
  const ContactAlg two = two_contact();
  for (const ContactAlg& A : npool)
    for (const ContactAlg& B : npool)
      for (const DVMap& al : all_dv_morphisms(A, B))
        for (const DVMap& psi : all_dv_morphisms(B, two)) {
          ++squares;
          const Cluster lhs = omega_of(dv_compose(psi, al));
          const Cluster rhs = cluster_pullback(al, omega_of(psi));
          if (!(lhs == rhs) && nat_ok) {
            nat_ok = false;
            nw = alg_label(A) + "->" + alg_label(B) + " " + al.name() +
                 " with " + psi.name();
          }
        }
  r.add("pullback-naturality", nat_ok, nw);
  r.add("naturality-squares", true, std::to_string(squares));
  return r;
}

Report rc_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "rc-calculus";
  const int maxp = pick(opt.max_points, 3);
  if (maxp > 4)
    throw ValidationError("rc-calculus: spaces beyond 4 points are out of reach");
  const std::vector<FinTopSpace> spaces = spaces_up_to(maxp);
  std::vector<RCAlgebra> rcs;
  rcs.reserve(spaces.size());
  for (const FinTopSpace& s : spaces) {
    RCAlgebra rc = rc_algebra(s);
    r.add(s.name() + ".regular-closed-laws", rc.checks.all_pass(),
          rc.checks.first_failure());
    rcs.push_back(std::move(rc));
  }

  long irr = 0;
  bool irr_ok = true;
  std::string irr_w;
  for (std::size_t xi = 0; xi < spaces.size(); ++xi)
    for (std::size_t yi = 0; yi < spaces.size(); ++yi) {
      const FinTopSpace& X = spaces[xi];
      const FinTopSpace& Y = spaces[yi];
      for (const auto& pm : all_functions(X.point_count(), Y.point_count())) {
        if (!ContMap::is_continuous(X, Y, pm)) continue;
        ContMap p("p", X, Y, pm);
        if (!classify_map(p).irreducible) continue;
        ++irr;
        const Report t = irreducible_calculus(rcs[xi], rcs[yi], p);
        if (!t.all_pass() && irr_ok) {
          irr_ok = false;
          irr_w = X.name() + "->" + Y.name() + " " + map_string(pm) + ": " +
                  t.first_failure();
        }
      }
    }
  r.add("irreducible-image-calculus", irr_ok, irr_w);
  r.add("irreducible-maps", true, std::to_string(irr));

  long dense_count = 0, preserved = 0;
  bool dr_ok = true;
  std::string dr_w;
  for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
    const FinTopSpace& X = spaces[xi];
    for (std::uint32_t d = 1; d <= X.full(); ++d) {
      if (!is_dense(X, d)) continue;
      const DenseRestriction dr = dense_restriction(rcs[xi], d);
      ++dense_count;
      if (dr.contact_preserved) ++preserved;
      if (!dr.checks.all_pass() && dr_ok) {
        dr_ok = false;
        dr_w = X.name() + " D=" + point_set_to_string(d) + ": " +
               dr.checks.first_failure();
      }
    }
  }
  r.add("dense-restriction-isomorphism", dr_ok, dr_w);
  r.add("dense-subsets", true, std::to_string(dense_count));
  r.add("dense-contact-preserved", true, std::to_string(preserved));

  bool beta_ok = true;
  std::string beta_w;
  for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
    const BetaContact bc = beta_contact(rcs[xi]);
    if (!bc.checks.all_pass() && beta_ok) {
      beta_ok = false;
      beta_w = spaces[xi].name() + ": " + bc.checks.first_failure();
    }
  }
  r.add("separation-contact-consistency", beta_ok, beta_w);
  r.add("spaces-covered", true, std::to_string(spaces.size()));
  return r;
}

Report t4_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "t4-lemma";
  const int maxp = pick(opt.max_points, 3);
  if (maxp > 3)
    throw ValidationError("t4-lemma: spaces beyond 3 points are out of reach");
  const std::vector<FinTopSpace> spaces = spaces_up_to(maxp);
  std::vector<char> t4_flag(spaces.size(), 0);
  int t4_spaces = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const SpaceFlags sf = classify_space(spaces[i]);
    t4_flag[i] = sf.normal && sf.hausdorff;
    if (t4_flag[i]) ++t4_spaces;
  }
  r.add("t4-codomains", true, std::to_string(t4_spaces));

  std::vector<RCAlgebra> rcs;
  rcs.reserve(spaces.size());
  for (const FinTopSpace& s : spaces) rcs.push_back(rc_algebra(s));

  long pmaps = 0, squares = 0;
  bool ok = true;
  std::string w;
  for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
    const FinTopSpace& X = spaces[xi];
    for (std::size_t yi = 0; yi < spaces.size(); ++yi) {
      if (!t4_flag[yi]) continue;
      const FinTopSpace& Y = spaces[yi];
      for (const auto& pm : all_functions(X.point_count(), Y.point_count())) {
        if (!ContMap::is_continuous(X, Y, pm)) continue;
        ContMap p("p", X, Y, pm);
        if (!classify_map(p).irreducible) continue;
        ++pmaps;
        for (std::size_t ai = 0; ai < spaces.size(); ++ai) {
          const FinTopSpace& A = spaces[ai];
          for (const auto& fm :
               all_functions(A.point_count(), X.point_count())) {
            if (!ContMap::is_continuous(A, X, fm)) continue;
            for (std::size_t bi = 0; bi < spaces.size(); ++bi) {
              const FinTopSpace& B = spaces[bi];
              for (const auto& ppm :
                   all_surjections(A.point_count(), B.point_count())) {
                if (!ContMap::is_continuous(A, B, ppm)) continue;
                std::vector<int> gm(B.point_count(), -1);
                bool well = true;
                for (int z = 0; z < A.point_count(); ++z) {
                  const int tgt = pm[fm[z]];
                  int& slot = gm[ppm[z]];
                  if (slot < 0)
                    slot = tgt;
                  else if (slot != tgt) {
                    well = false;
                    break;
                  }
                }
                if (!well) continue;
                if (!ContMap::is_continuous(B, Y, gm)) continue;
                ContMap f("f", A, X, fm), pp("pp", A, B, ppm),
                    g("g", B, Y, gm);
                const Report t = t4_square_identity(rcs[xi], f, p, pp, g);
                ++squares;
                if (!t.all_pass() && ok) {
                  ok = false;
                  w = "X=" + X.name() + " Y=" + Y.name() + " A=" + A.name() +
                      " B=" + B.name() + " f=" + map_string(fm) +
                      " p=" + map_string(pm) + " pp=" + map_string(ppm) +
                      ": " + t.first_failure();
                }
              }
            }
          }
        }
      }
    }
  }
  r.add("closed-irreducible-onto-t4-maps", true, std::to_string(pmaps));
  r.add("identity-on-every-square", ok, w);
  r.add("squares-checked", true, std::to_string(squares));
  return r;
}

Report lifting_suite(const SuiteOptions&) {
  Report r;
  r.subject = "lifting";
  const GraphFixture fx = graph_fixture();
  const CoreflectiveLift cl =
      lift_right_coreflective(fx.corefl_base, fx.coreflection);
  r.merge(cl.lift.checks, "graph-coreflective");
  r.merge(cl.checks, "graph-coreflective");
  r.add("graph-coreflective.objects", true,
        std::to_string(cl.lift.objects.size()));
  r.add("graph-coreflective.morphisms", true,
        std::to_string(cl.lift.bcat.morphism_count()));
  const ReflectiveLift rl = lift_left(fx.refl_base, fx.reflection);
  r.merge(rl.lift.checks, "graph-reflective");
  r.merge(rl.checks, "graph-reflective");
  r.add("graph-reflective.objects", true,
        std::to_string(rl.lift.objects.size()));
  r.add("graph-reflective.morphisms", true,
        std::to_string(rl.lift.bcat.morphism_count()));
  const SurjectionFixture sf = surjection_fixture();
  const LiftedDuality ld = lift_right(sf.base, sf.ycat, sf.x, sf.covering);
  r.merge(ld.checks, "surjection");
  r.add("surjection.objects", true, std::to_string(ld.objects.size()));
  r.add("surjection.morphisms", true,
        std::to_string(ld.bcat.morphism_count()));
  int widest = 0;
  for (int c : ld.class_size) widest = std::max(widest, c);
  r.add("surjection.largest-collapsed-class", true, std::to_string(widest));
  return r;
}

Report roundtrips_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "roundtrips";
  const int maxn = pick(opt.max_atoms, 3);
  const EquivalenceReport eq = equivalence_suite(std::min(maxn, 3));
  r.merge(eq.checks, "equivalence");
  r.add("equivalence.census", true,
        "algebras=" + std::to_string(eq.algebras) +
            " covers=" + std::to_string(eq.covers) +
            " morphisms=" + std::to_string(eq.morphisms));

  std::vector<ContactAlg> pool;
  {
    auto rels = relations_up_to(std::min(maxn, 2));
    for (ContactAlg& ca : rels)
      if (ca.uf_equivalence()) pool.push_back(std::move(ca));
  }
  long fmaps = 0;
  bool f_ok = true;
  std::string f_w;
  for (const ContactAlg& A : pool)
    for (const ContactAlg& B : pool)
      for (const DVMap& al : all_dv_morphisms(A, B)) {
        ++fmaps;
        const std::string lab =
            alg_label(A) + "->" + alg_label(B) + " " + al.name();
        try {
          const FullnessConstruct fc = fullness_construct(al);
          if (!fc.checks.all_pass() && f_ok) {
            f_ok = false;
            f_w = lab + ": " + fc.checks.first_failure();
          }
        } catch (const TheoremViolation& e) {
          if (f_ok) {
            f_ok = false;
            f_w = lab + ": " + e.what();
          }
        }
      }
  r.add("fullness-inverse", f_ok, f_w);
  r.add("fullness-morphisms", true, std::to_string(fmaps));

  for (int k = 1; k <= std::min(maxn, 3); ++k)
    r.merge(monad_check(k), "monad.X" + std::to_string(k));

  const BmoRoundtrip bmo = bmo_roundtrip(std::min(maxn, 2));
  r.merge(bmo.checks, "pairs-extensions");
  return r;
}

Report devries_core_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "devries-core";
  const int maxn = pick(opt.max_atoms, 2);
  std::vector<ContactAlg> pool;
  {
    auto rels = relations_up_to(maxn);
    for (ContactAlg& ca : rels)
      if (is_normal_alg(ca)) pool.push_back(std::move(ca));
  }
  long maps = 0;
  for (const ContactAlg& A : pool)
    for (const ContactAlg& B : pool)
      for (const DVMap& al : all_dv_morphisms(A, B)) {
        ++maps;
        r.merge(devries_core_checks(A, al),
                alg_label(A) + "->" + alg_label(B) + "." + al.name());
      }
  r.add("normal-algebras", true, std::to_string(pool.size()));
  r.add("morphisms-checked", true, std::to_string(maps));
  return r;
}

Report survey_suite(const SuiteOptions& opt) {
  Report r;
  r.subject = "survey-normal";
  const int maxn = pick(opt.max_atoms, 4);
  for (int n = 1; n <= maxn; ++n) {
    const SurveyTable t = collapse_survey(n);
    const std::string base = "atoms" + std::to_string(n);
    r.merge(t.checks, base);
    bool consistent = true;
    std::string w;
    for (const SurveyRow& row : t.rows)
      if (row.normal)
        for (int i = 0; i < 5; ++i)
          if (!row.axiom[i]) {
            consistent = false;
            w = row.relation;
          }
    r.add(base + ".normal-rows-satisfy-first-five", consistent, w);
    r.add(base + ".rows", true, std::to_string(t.rows.size()));
    r.add(base + ".normal-rows", true, std::to_string(t.normal_count));
    r.add(base + ".only-discrete-is-normal", true,
          t.diagonal_only ? "yes" : "no");
  }
  return r;
}

using SuiteFn = Report (*)(const SuiteOptions&);
struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};
constexpr SuiteEntry kSuites[] = {
    {"ultrafilter-oracle", &ultrafilter_suite},
    {"axiom-equivalences", &axiom_equivalence_suite},
    {"atom-determinacy", &atom_determinacy_suite},
    {"cluster-duality", &cluster_suite},
    {"devries-transform", &transform_suite},
    {"omega", &omega_suite},
    {"rc-calculus", &rc_suite},
    {"t4-lemma", &t4_suite},
    {"lifting", &lifting_suite},
    {"roundtrips", &roundtrips_suite},
    {"devries-core", &devries_core_suite},
    {"survey-normal", &survey_suite},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteEntry& e : kSuites) out.push_back(e.name);
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const SuiteEntry& e : kSuites)
    if (name == e.name) return e.fn(opt);
  throw ValidationError("unknown suite: " + name);
}

std::string render_report(const Report& r) {
  std::string out;
  for (const CheckResult& c : r.items) {
    out += c.check;
    out += c.pass ? " PASS" : " FAIL";
    if (!c.witness.empty()) {
      out += ' ';
      out += c.witness;
    }
    out += '\n';
  }
  return out;
}

}  // namespace dualkit
