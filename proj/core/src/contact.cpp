#include "dualkit/contact.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dualkit {

ContactAlg::ContactAlg(FinBoolAlg base,
                       const std::vector<std::pair<int, int>>& pairs)
    : base_(std::move(base)), rel_(base_.atom_count(), 0) {
  const int n = base_.atom_count();
  for (int x = 0; x < n; ++x) rel_[x] |= 1u << x;  // diagonal
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw ValidationError("contact: atom pair out of range");
    rel_[x] |= 1u << y;
    rel_[y] |= 1u << x;  // symmetric closure
  }
}

bool ContactAlg::contact(AtomSet a, AtomSet b) const {
  for (int x = 0; x < atom_count(); ++x)
    if (a.contains(x) && (rel_[x] & b.bits())) return true;
  return false;
}

bool ContactAlg::uf_equivalence() const {
  const int n = atom_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!atom_contact(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (atom_contact(y, z) && !atom_contact(x, z)) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> ContactAlg::off_diagonal_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < atom_count(); ++x)
    for (int y = x + 1; y < atom_count(); ++y)
      if (atom_contact(x, y)) out.emplace_back(x, y);
  return out;
}

std::string ContactAlg::rel_string() const {
  auto pairs = off_diagonal_pairs();
  if (pairs.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ' ';
    os << pairs[i].first << '-' << pairs[i].second;
  }
  return os.str();
}

ContactAlg ContactAlg::discrete(FinBoolAlg base) {
  return ContactAlg(std::move(base), {});
}

ContactAlg ContactAlg::total(FinBoolAlg base) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < base.atom_count(); ++x)
    for (int y = x + 1; y < base.atom_count(); ++y) pairs.emplace_back(x, y);
  return ContactAlg(std::move(base), pairs);
}

ContactAlg ContactAlg::from_partition(FinBoolAlg base,
                                      const std::vector<int>& block_of_atom) {
  if (static_cast<int>(block_of_atom.size()) != base.atom_count())
    throw ValidationError("from_partition: one block per atom required");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < base.atom_count(); ++x)
    for (int y = x + 1; y < base.atom_count(); ++y)
      if (block_of_atom[x] == block_of_atom[y]) pairs.emplace_back(x, y);
  return ContactAlg(std::move(base), pairs);
}

namespace {

std::string pair_witness(AtomSet a, AtomSet b) {
  return "(" + a.to_string() + "," + b.to_string() + ")";
}

}  // namespace

AxiomReport check_axioms(const ContactAlg& alg) {
  AxiomReport r;
  const FinBoolAlg& ba = alg.base();
  const auto elems = ba.elements();

  r.c[0] = {"C1", true, ""};
  for (AtomSet a : elems)
    if (!a.empty() && !alg.contact(a, a)) {
      r.c[0] = {"C1", false, "a=" + a.to_string()};
      break;
    }
  r.c[1] = {"C2", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems)
      if (alg.contact(a, b) && (a.empty() || b.empty())) {
        r.c[1] = {"C2", false, pair_witness(a, b)};
        break;
      }
    if (!r.c[1].pass) break;
  }
  r.c[2] = {"C3", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems)
      if (alg.contact(a, b) != alg.contact(b, a)) {
        r.c[2] = {"C3", false, pair_witness(a, b)};
        break;
      }
    if (!r.c[2].pass) break;
  }
  r.c[3] = {"C4", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems) {
      for (AtomSet c : elems) {
        bool lhs = alg.contact(a, ba.join(b, c));
        bool rhs = alg.contact(a, b) || alg.contact(a, c);
        if (lhs != rhs) {
          r.c[3] = {"C4", false,
                    "a=" + a.to_string() + " b=" + b.to_string() +
                        " c=" + c.to_string()};
          break;
        }
      }
      if (!r.c[3].pass) break;
    }
    if (!r.c[3].pass) break;
  }
  r.c[4] = {"C5", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems) {
      if (alg.contact(a, b)) continue;
      bool found = false;
      for (AtomSet c : elems)
        if (!alg.contact(a, c) && !alg.contact(b, ba.complement(c))) {
          found = true;
          break;
        }
      if (!found) {
        r.c[4] = {"C5", false, pair_witness(a, b)};
        break;
      }
    }
    if (!r.c[4].pass) break;
  }
  r.c[5] = {"C6", true, ""};
  for (AtomSet a : elems) {
    if (a == ba.top()) continue;
    bool found = false;
    for (AtomSet b : elems)
      if (!b.empty() && !alg.contact(b, a)) {
        found = true;
        break;
      }
    if (!found) {
      r.c[5] = {"C6", false, "a=" + a.to_string()};
      break;
    }
  }

  r.i[0] = {"I1", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems)
      if (alg.ll(a, b) && !ba.leq(a, b)) {
        r.i[0] = {"I1", false, pair_witness(a, b)};
        break;
      }
    if (!r.i[0].pass) break;
  }
  r.i[1] = {"I2", true, ""};
  for (AtomSet b : elems) {
    for (AtomSet c : elems) {
      if (!alg.ll(b, c)) continue;
      for (AtomSet a : elems) {
        if (!ba.leq(a, b)) continue;
        for (AtomSet d : elems)
          if (ba.leq(c, d) && !alg.ll(a, d)) {
            r.i[1] = {"I2", false,
                      a.to_string() + "<=" + b.to_string() + "<<" +
                          c.to_string() + "<=" + d.to_string()};
            break;
          }
        if (!r.i[1].pass) break;
      }
      if (!r.i[1].pass) break;
    }
    if (!r.i[1].pass) break;
  }
  r.i[2] = {"I3", true, ""};
  if (!alg.ll(ba.bot(), ba.bot())) r.i[2] = {"I3", false, "0<<0 fails"};
  if (r.i[2].pass)
    for (AtomSet a : elems) {
      for (AtomSet b : elems)
        if (alg.ll(a, b) &&
            !alg.ll(ba.complement(b), ba.complement(a))) {
          r.i[2] = {"I3", false, pair_witness(a, b)};
          break;
        }
      if (!r.i[2].pass) break;
    }
  r.i[3] = {"I4", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems) {
      for (AtomSet c : elems)
        if (alg.ll(a, c) && alg.ll(b, c) && !alg.ll(ba.join(a, b), c)) {
          r.i[3] = {"I4", false,
                    "a=" + a.to_string() + " b=" + b.to_string() +
                        " c=" + c.to_string()};
          break;
        }
      if (!r.i[3].pass) break;
    }
    if (!r.i[3].pass) break;
  }
  r.i[4] = {"I5", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet c : elems) {
      if (!alg.ll(a, c)) continue;
      bool found = false;
      for (AtomSet b : elems)
        if (alg.ll(a, b) && alg.ll(b, c)) {
          found = true;
          break;
        }
      if (!found) {
        r.i[4] = {"I5", false, pair_witness(a, c)};
        break;
      }
    }
    if (!r.i[4].pass) break;
  }
  r.i[5] = {"I6", true, ""};
  for (AtomSet a : elems) {
    if (a.empty()) continue;
    bool found = false;
    for (AtomSet b : elems)
      if (!b.empty() && alg.ll(b, a)) {
        found = true;
        break;
      }
    if (!found) {
      r.i[5] = {"I6", false, "a=" + a.to_string()};
      break;
    }
  }

  r.equiv14 = {"equiv-C14-I14", r.c14() == r.i14(),
               r.c14() == r.i14() ? "" : "lists disagree"};
  r.equiv16 = {"equiv-C16-I16", r.c16() == r.i16(),
               r.c16() == r.i16() ? "" : "lists disagree"};
  return r;
}

Report AxiomReport::as_report(const std::string& subject) const {
  Report rep;
  rep.subject = subject;
  for (const auto& it : c) rep.items.push_back(it);
  for (const auto& it : i) rep.items.push_back(it);
  rep.items.push_back(equiv14);
  rep.items.push_back(equiv16);
  return rep;
}

CanonicalContacts canonical_contacts(const FinBoolAlg& base) {
  CanonicalContacts out{ContactAlg::discrete(base), ContactAlg::total(base), {}};
  out.checks.subject = "canonical " + base.name();
  bool overlap = true;
  for (AtomSet a : base.elements())
    for (AtomSet b : base.elements())
      if (out.smallest.contact(a, b) != a.meets(b)) { overlap = false; }
  out.checks.add("smallest-is-overlap", overlap);
  bool ll_is_leq = true;
  for (AtomSet a : base.elements())
    for (AtomSet b : base.elements())
      if (out.smallest.ll(a, b) != base.leq(a, b)) { ll_is_leq = false; }
  out.checks.add("smallest-ll-is-leq", ll_is_leq);
  bool largest_ok = true;
  for (AtomSet a : base.elements())
    for (AtomSet b : base.elements())
      if (out.largest.contact(a, b) != (!a.empty() && !b.empty()))
        largest_ok = false;
  out.checks.add("largest-all-nonzero", largest_ok);
  out.checks.add("smallest-normal", check_axioms(out.smallest).c16());
  return out;
}

bool uf_contact(const ContactAlg& alg, const Ultrafilter& u,
                const Ultrafilter& v) {
  for (AtomSet c : u.members)
    for (AtomSet d : v.members)
      if (!alg.contact(c, d)) return false;
  return true;
}

UfContactReport contact_via_ufs(const ContactAlg& alg) {
  UfContactReport out;
  out.checks.subject = "uf-contact " + alg.base().name();
  auto ufs = ultrafilters(alg.base());
  const int k = static_cast<int>(ufs.size());
  out.uf_rel.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.uf_rel[i][j] = uf_contact(alg, ufs[i], ufs[j]);
  bool agrees = true;
  std::string w;
  for (AtomSet a : alg.base().elements()) {
    for (AtomSet b : alg.base().elements()) {
      bool direct = alg.contact(a, b);
      bool via = false;
      for (int i = 0; i < k && !via; ++i) {
        if (!ufs[i].contains(a)) continue;
        for (int j = 0; j < k; ++j)
          if (ufs[j].contains(b) && out.uf_rel[i][j]) { via = true; break; }
      }
      if (direct != via) {
        agrees = false;
        w = pair_witness(a, b);
        break;
      }
    }
    if (!agrees) break;
  }
  out.checks.add("element-contact-via-ufs", agrees, w);
  bool refl = true, sym = true, trans = true;
  for (int i = 0; i < k; ++i) {
    if (!out.uf_rel[i][i]) refl = false;
    for (int j = 0; j < k; ++j) {
      if (out.uf_rel[i][j] != out.uf_rel[j][i]) sym = false;
      for (int l = 0; l < k; ++l)
        if (out.uf_rel[i][j] && out.uf_rel[j][l] && !out.uf_rel[i][l])
          trans = false;
    }
  }
  out.equivalence = refl && sym && trans;
  out.checks.add("uf-contact-reflexive", refl);
  out.checks.add("uf-contact-symmetric", sym);
  return out;
}

bool Cluster::contains(AtomSet a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

std::string Cluster::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) os << ' ';
    os << members[i].to_string();
  }
  os << ']';
  return os.str();
}

Cluster cluster_from_uf(const ContactAlg& alg, const Ultrafilter& u) {
  Cluster c;
  for (AtomSet a : alg.base().elements()) {
    bool all = true;
    for (AtomSet b : u.members)
      if (!alg.contact(a, b)) { all = false; break; }
    if (all) c.members.push_back(a);
  }
  std::sort(c.members.begin(), c.members.end());
  return c;
}

ClusterCheck is_cluster(const ContactAlg& alg, const std::vector<AtomSet>& s) {
  ClusterCheck out;
  out.report.subject = "cluster";
  bool cl1 = !s.empty();
  out.report.add("cl1-nonempty", cl1);
  bool cl2 = true;
  std::string w2;
  for (AtomSet a : s) {
    for (AtomSet b : s)
      if (!alg.contact(a, b)) {
        cl2 = false;
        w2 = pair_witness(a, b);
        break;
      }
    if (!cl2) break;
  }
  out.report.add("cl2-pairwise-contact", cl2, w2);
  auto in_s = [&](AtomSet a) {
    return std::find(s.begin(), s.end(), a) != s.end();
  };
  bool cl3 = true;
  std::string w3;
  for (AtomSet a : alg.base().elements()) {
    for (AtomSet b : alg.base().elements()) {
      if (in_s(alg.base().join(a, b)) && !in_s(a) && !in_s(b)) {
        cl3 = false;
        w3 = pair_witness(a, b);
        break;
      }
    }
    if (!cl3) break;
  }
  out.report.add("cl3-join-prime", cl3, w3);
  bool cl4 = true;
  std::string w4;
  for (AtomSet a : alg.base().elements()) {
    bool touches_all = true;
    for (AtomSet b : s)
      if (!alg.contact(a, b)) { touches_all = false; break; }
    if (touches_all && !s.empty() && !in_s(a)) {
      cl4 = false;
      w4 = "a=" + a.to_string();
      break;
    }
  }
  out.report.add("cl4-saturated", cl4, w4);
  out.ok = cl1 && cl2 && cl3 && cl4;
  return out;
}

ClusterEnumeration clusters(const ContactAlg& alg) {
  ClusterEnumeration out;
  out.checks.subject = "clusters " + alg.base().name();
  out.uf_equivalence = alg.uf_equivalence();

  for (const Ultrafilter& u : ultrafilters(alg.base())) {
    Cluster c = cluster_from_uf(alg, u);
    if (std::find(out.via_ufs.begin(), out.via_ufs.end(), c) == out.via_ufs.end())
      out.via_ufs.push_back(c);
  }
  std::sort(out.via_ufs.begin(), out.via_ufs.end());

  const auto elems = alg.base().elements();
  const int n = static_cast<int>(elems.size());
  // skip the bottom element: cl2 rules it out of any cluster
  std::vector<AtomSet> nz(elems.begin() + 1, elems.end());
  const int k = static_cast<int>(nz.size());
  for (std::uint64_t sub = 1; sub < (1ull << k); ++sub) {
    std::vector<AtomSet> cand;
    for (int i = 0; i < k; ++i)
      if ((sub >> i) & 1) cand.push_back(nz[i]);
    if (is_cluster(alg, cand).ok) {
      Cluster c;
      c.members = cand;
      std::sort(c.members.begin(), c.members.end());
      out.brute.push_back(std::move(c));
    }
  }
  std::sort(out.brute.begin(), out.brute.end());
  (void)n;

  out.discrepancy = out.via_ufs != out.brute;
  if (out.uf_equivalence) {
    out.checks.add("strategies-agree", !out.discrepancy);
    // count classes of the transitive atom relation
    std::vector<int> cls(alg.atom_count(), -1);
    int classes = 0;
    for (int x = 0; x < alg.atom_count(); ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = classes;
      for (int y = 0; y < alg.atom_count(); ++y)
        if (alg.atom_contact(x, y)) cls[y] = classes;
      ++classes;
    }
    out.checks.add("count-equals-contact-classes",
                   static_cast<int>(out.brute.size()) == classes,
                   std::to_string(out.brute.size()) + " vs " +
                       std::to_string(classes));
  } else {
    out.checks.add("non-equivalence-flagged", true,
                   out.discrepancy ? "strategies differ" : "strategies agree");
  }
  return out;
}

ClustSpace clust_space(const ContactAlg& alg) {
  if (!alg.uf_equivalence())
    throw ValidationError(
        "clust_space: ultrafilter contact is not an equivalence on " +
        alg.base().name());
  ClustSpace out;
  out.checks.subject = "clust-space " + alg.base().name();

  auto en = clusters(alg);
  out.points = en.brute;
  if (en.discrepancy)
    throw TheoremViolation("clust_space: cluster strategies disagree on " +
                           alg.base().name());

  const int np = static_cast<int>(out.points.size());
  for (AtomSet a : alg.base().elements()) {
    std::uint32_t m = 0;
    for (int i = 0; i < np; ++i)
      if (out.points[i].contains(a)) m |= 1u << i;
    out.tau.push_back(m);
  }

  // closed family generated by { tau(a) } under union and intersection
  std::vector<std::uint32_t> closed{0u, np == 32 ? ~0u : (1u << np) - 1};
  for (std::uint32_t t : out.tau) closed.push_back(t);
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = closed;
    for (std::uint32_t a : snapshot)
      for (std::uint32_t b : snapshot)
        for (std::uint32_t c : {static_cast<std::uint32_t>(a | b),
                                static_cast<std::uint32_t>(a & b)})
          if (std::find(closed.begin(), closed.end(), c) == closed.end()) {
            closed.push_back(c);
            changed = true;
          }
  }
  const std::uint32_t allp = np == 32 ? ~0u : (1u << np) - 1;
  std::vector<std::uint32_t> opens;
  for (std::uint32_t c : closed) opens.push_back(allp & ~c);
  out.topology = FinTopSpace("clust(" + alg.base().name() + ")",
                             np, opens);

  // interior identity: int(tau(a)) = complement of tau(a*)
  bool int_ok = true;
  std::string w;
  for (AtomSet a : alg.base().elements()) {
    std::uint32_t lhs = out.topology.interior(out.tau[a.bits()]);
    std::uint32_t rhs = allp & ~out.tau[alg.base().complement(a).bits()];
    if (lhs != rhs) {
      int_ok = false;
      w = "a=" + a.to_string();
      break;
    }
  }
  out.checks.add("interior-identity", int_ok, w);

  // quotient of the ultrafilter set by contact
  auto ufs = ultrafilters(alg.base());
  out.uf_class.assign(ufs.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < ufs.size(); ++i) {
    if (out.uf_class[i] >= 0) continue;
    out.uf_class[i] = classes;
    for (std::size_t j = 0; j < ufs.size(); ++j)
      if (uf_contact(alg, ufs[i], ufs[j])) out.uf_class[j] = classes;
    ++classes;
  }
  out.gamma.assign(classes, -1);
  bool gamma_fun = true;
  for (std::size_t i = 0; i < ufs.size(); ++i) {
    Cluster c = cluster_from_uf(alg, ufs[i]);
    auto it = std::find(out.points.begin(), out.points.end(), c);
    if (it == out.points.end()) {
      gamma_fun = false;
      break;
    }
    int idx = static_cast<int>(it - out.points.begin());
    if (out.gamma[out.uf_class[i]] == -1)
      out.gamma[out.uf_class[i]] = idx;
    else if (out.gamma[out.uf_class[i]] != idx)
      gamma_fun = false;
  }
  out.checks.add("gamma-well-defined", gamma_fun);
  bool bij = gamma_fun && classes == np;
  if (bij) {
    std::vector<char> hit(np, 0);
    for (int v : out.gamma) {
      if (v < 0 || hit[v]) { bij = false; break; }
      hit[v] = 1;
    }
  }
  out.checks.add("gamma-bijective", bij,
                 bij ? "" : std::to_string(classes) + " classes vs " +
                                std::to_string(np) + " clusters");
  if (!bij)
    throw TheoremViolation("clust_space: gamma not bijective on " +
                           alg.base().name());

  // the ultrafilter space is discrete, so its quotient is discrete and gamma
  // is a homeomorphism exactly when the cluster topology is discrete too
  bool homeo = classify_space(out.topology).discrete;
  out.checks.add("gamma-homeomorphism", homeo,
                 homeo ? "" : "cluster topology not discrete");
  return out;
}

std::vector<ContactAlg> all_contact_algs(const FinBoolAlg& base) {
  const int n = base.atom_count();
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) slots.emplace_back(x, y);
  std::vector<ContactAlg> out;
  for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1) pairs.push_back(slots[i]);
    out.emplace_back(base, pairs);
  }
  return out;
}

}  // namespace dualkit
