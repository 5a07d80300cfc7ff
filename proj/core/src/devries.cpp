#include "dualkit/devries.hpp"

#include <algorithm>

#include "dualkit/combinatorics.hpp"

namespace dualkit {

DVMap::DVMap(std::string name, ContactAlg dom, ContactAlg cod,
             std::vector<AtomSet> table)
    : name_(std::move(name)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      table_(std::move(table)) {
  if (table_.size() != dom_.base().elements().size())
    throw ValidationError(name_ + ": table must cover every element");
  for (AtomSet v : table_)
    if (!cod_.base().is_element(v))
      throw ValidationError(name_ + ": table value outside codomain");
}

DVMap DVMap::from_hom(std::string name, ContactAlg dom, ContactAlg cod,
                      const BoolHom& h) {
  if (h.dom().atom_count() != dom.atom_count() ||
      h.cod().atom_count() != cod.atom_count())
    throw ValidationError(name + ": hom shape mismatch");
  std::vector<AtomSet> table;
  for (AtomSet a : dom.base().elements()) table.push_back(h(a));
  return DVMap(std::move(name), std::move(dom), std::move(cod),
               std::move(table));
}

DVMap DVMap::identity(const ContactAlg& a) {
  std::vector<AtomSet> table = a.base().elements();
  return DVMap("1", a, a, std::move(table));
}

bool DVMap::is_bool_hom() const {
  const FinBoolAlg& d = dom_.base();
  const FinBoolAlg& c = cod_.base();
  if ((*this)(d.top()) != c.top()) return false;
  for (AtomSet a : d.elements()) {
    if ((*this)(d.complement(a)) != c.complement((*this)(a))) return false;
    for (AtomSet b : d.elements())
      if ((*this)(d.join(a, b)) != c.join((*this)(a), (*this)(b)))
        return false;
  }
  return true;
}

BoolHom DVMap::as_bool_hom() const {
  if (!is_bool_hom())
    throw ValidationError(name_ + ": table is not a Boolean hom");
  std::vector<int> atom_map(cod_.atom_count(), -1);
  for (int y = 0; y < cod_.atom_count(); ++y) {
    AtomSet best = dom_.base().top();
    for (AtomSet a : dom_.base().elements())
      if ((*this)(a).contains(y) && a.subset_of(best)) best = a;
    if (best.count() != 1)
      throw TheoremViolation(name_ + ": atom recovery failed");
    for (int x = 0; x < dom_.atom_count(); ++x)
      if (best.contains(x)) atom_map[y] = x;
  }
  return BoolHom(dom_.base(), cod_.base(), atom_map);
}

Report DVCheck::as_report(const std::string& subject) const {
  Report r;
  r.subject = subject;
  for (const auto& it : v) r.items.push_back(it);
  r.items.push_back(unital);
  return r;
}

DVCheck check_dv_morphism(const DVMap& f) {
  DVCheck out;
  const ContactAlg& A = f.dom();
  const ContactAlg& B = f.cod();
  const auto elems = A.base().elements();

  out.v[0] = {"V1", f(A.base().bot()) == B.base().bot(),
              f(A.base().bot()) == B.base().bot()
                  ? ""
                  : "f(0)=" + f(A.base().bot()).to_string()};

  out.v[1] = {"V2", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems) {
      AtomSet lhs = f(A.base().meet(a, b));
      AtomSet rhs = B.base().meet(f(a), f(b));
      if (lhs != rhs) {
        out.v[1] = {"V2", false,
                    "a=" + a.to_string() + " b=" + b.to_string()};
        break;
      }
    }
    if (!out.v[1].pass) break;
  }

  out.v[2] = {"V3", true, ""};
  for (AtomSet a : elems) {
    for (AtomSet b : elems) {
      if (!A.ll(a, b)) continue;
      AtomSet lhs = B.base().complement(f(A.base().complement(a)));
      if (!B.ll(lhs, f(b))) {
        out.v[2] = {"V3", false,
                    "a=" + a.to_string() + " b=" + b.to_string()};
        break;
      }
    }
    if (!out.v[2].pass) break;
  }

  out.v[3] = {"V4", true, ""};
  for (AtomSet a : elems) {
    AtomSet join = B.base().bot();
    for (AtomSet b : elems)
      if (A.ll(b, a)) join = B.base().join(join, f(b));
    if (join != f(a)) {
      out.v[3] = {"V4", false,
                  "a=" + a.to_string() + " sup=" + join.to_string() +
                      " f(a)=" + f(a).to_string()};
      break;
    }
  }

  out.unital = {"unital", f(A.base().top()) == B.base().top(), ""};
  return out;
}

DVMap dv_transform(const DVMap& f) {
  const ContactAlg& A = f.dom();
  const ContactAlg& B = f.cod();
  std::vector<AtomSet> table;
  for (AtomSet a : A.base().elements()) {
    AtomSet join = B.base().bot();
    for (AtomSet b : A.base().elements())
      if (A.ll(b, a)) join = B.base().join(join, f(b));
    table.push_back(join);
  }
  return DVMap(f.name() + "^", A, B, std::move(table));
}

DVMap plain_compose(const DVMap& g, const DVMap& f) {
  if (!g.dom().same_structure(f.cod()))
    throw ValidationError("plain_compose: shape mismatch");
  std::vector<AtomSet> table;
  for (AtomSet a : f.dom().base().elements()) table.push_back(g(f(a)));
  return DVMap(g.name() + "." + f.name(), f.dom(), g.cod(), std::move(table));
}

DVMap dv_compose(const DVMap& g, const DVMap& f) {
  DVMap comp = dv_transform(plain_compose(g, f));
  return DVMap(g.name() + "*" + f.name(), comp.dom(), comp.cod(),
               comp.table());
}

bool sim_equal(const DVMap& f, const DVMap& g) {
  if (!f.same_shape(g)) return false;
  return dv_transform(f).table() == dv_transform(g).table();
}

bool reflects_contact(const ContactAlg& dom, const ContactAlg& cod,
                      const BoolHom& h) {
  for (AtomSet a : dom.base().elements())
    for (AtomSet b : dom.base().elements())
      if (cod.contact(h(a), h(b)) && !dom.contact(a, b)) return false;
  return true;
}

bool preserves_ll(const ContactAlg& dom, const ContactAlg& cod,
                  const BoolHom& h) {
  for (AtomSet a : dom.base().elements())
    for (AtomSet b : dom.base().elements())
      if (dom.ll(a, b) && !cod.ll(h(a), h(b))) return false;
  return true;
}

std::vector<BoolHom> all_compatible_homs(const ContactAlg& dom,
                                         const ContactAlg& cod) {
  std::vector<BoolHom> out;
  for (const BoolHom& h : all_homs(dom.base(), cod.base()))
    if (reflects_contact(dom, cod, h)) out.push_back(h);
  return out;
}

std::vector<DVMap> all_dv_morphisms(const ContactAlg& dom,
                                    const ContactAlg& cod) {
  const int n = dom.atom_count();
  const auto cod_elems = cod.base().elements();
  const std::size_t m = cod_elems.size();
  double cand = 1;
  for (int i = 0; i < n; ++i) cand *= static_cast<double>(m);
  if (cand > 2.0e6)
    throw ValidationError("all_dv_morphisms: instance too large");

  const FinBoolAlg& db = dom.base();
  const FinBoolAlg& cb = cod.base();
  const auto dom_elems = db.elements();
  std::vector<DVMap> out;

  // odometer over coatom values, last coatom fastest
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    // supersets of the join of coatom values are the legal top values
    AtomSet base_join = cb.bot();
    for (int i = 0; i < n; ++i)
      base_join = cb.join(base_join, cod_elems[idx[i]]);
    std::vector<AtomSet> tops;
    std::uint32_t gap = cb.top().bits() & ~base_join.bits();
    std::uint32_t x = gap;
    while (true) {
      tops.push_back(AtomSet::from_bits(base_join.bits() | x));
      if (x == 0) break;
      x = (x - 1) & gap;
    }
    std::sort(tops.begin(), tops.end());

    for (AtomSet top_val : tops) {
      std::vector<AtomSet> table(dom_elems.size(), cb.bot());
      bool v1 = true;
      for (std::size_t e = 0; e < dom_elems.size(); ++e) {
        AtomSet a = dom_elems[e];
        if (a == db.top()) {
          table[e] = top_val;
          continue;
        }
        AtomSet val = top_val;
        for (int i = 0; i < n; ++i)
          if (!a.contains(i)) val = cb.meet(val, cod_elems[idx[i]]);
        table[e] = val;
        if (a.empty() && !val.empty()) v1 = false;
      }
      if (!v1) continue;
      DVMap f("dv" + std::to_string(out.size()), dom, cod, table);
      DVCheck c = check_dv_morphism(f);
      if (c.ok()) out.push_back(std::move(f));
    }

    int i = n - 1;
    while (i >= 0 && idx[i] == m - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

Cluster cluster_pullback(const DVMap& f, const Cluster& d) {
  const ContactAlg& A = f.dom();
  const ContactAlg& B = f.cod();
  Cluster out;
  for (AtomSet a : A.base().elements()) {
    bool in = true;
    AtomSet astar = A.base().complement(a);
    for (AtomSet b : A.base().elements()) {
      if (!A.ll(b, astar)) continue;
      if (!d.contains(B.base().complement(f(b)))) {
        in = false;
        break;
      }
    }
    if (in) out.members.push_back(a);
  }
  return out;
}

ContactAlg two_contact() {
  return ContactAlg::discrete(FinBoolAlg("2", 1));
}

Cluster omega_of(const DVMap& f) {
  if (f.cod().atom_count() != 1)
    throw ValidationError("omega_of: codomain must be the two-element algebra");
  Cluster out;
  for (AtomSet a : f.dom().base().elements())
    if (f(f.dom().base().complement(a)).empty()) out.members.push_back(a);
  return out;
}

DVMap omega_inv(std::string name, const ContactAlg& a, const Cluster& c) {
  ContactAlg two = two_contact();
  std::vector<AtomSet> table;
  for (AtomSet x : a.base().elements())
    table.push_back(c.contains(a.base().complement(x)) ? two.base().bot()
                                                       : two.base().top());
  return DVMap(std::move(name), a, two, std::move(table));
}

Report omega_bijection(const ContactAlg& a) {
  Report r;
  r.subject = "omega " + a.base().name();
  ContactAlg two = two_contact();
  auto maps = all_dv_morphisms(a, two);
  auto cl = clusters(a).brute;

  bool into = true, inj = true, left = true;
  std::string w;
  std::vector<Cluster> images;
  for (const DVMap& f : maps) {
    Cluster c = omega_of(f);
    if (std::find(cl.begin(), cl.end(), c) == cl.end()) {
      into = false;
      w = f.name();
    }
    if (std::find(images.begin(), images.end(), c) != images.end())
      inj = false;
    images.push_back(c);
    if (!(omega_inv("back", a, c) == f)) left = false;
  }
  r.add("omega-lands-in-clusters", into, w);
  r.add("omega-injective", inj);
  r.add("omega-inv-recovers-map", left);

  bool onto = true, right = true;
  for (const Cluster& c : cl) {
    DVMap f = omega_inv("f", a, c);
    bool found = false;
    for (const DVMap& g : maps)
      if (g == f) { found = true; break; }
    if (!found) onto = false;
    Cluster back = omega_of(f);
    if (!(back == c)) right = false;
  }
  r.add("omega-surjective", onto);
  r.add("omega-recovers-cluster", right);
  r.add("omega-counts", maps.size() == cl.size(),
        std::to_string(maps.size()) + " maps vs " + std::to_string(cl.size()) +
            " clusters");
  return r;
}

std::vector<Cover> all_covers(const FinBoolAlg& base) {
  std::vector<Cover> out;
  const int n = base.atom_count();
  for (int k = 1; k <= n; ++k)
    for (auto& p : all_surjections(n, k))
      out.push_back(Cover{p, k, ContactAlg::from_partition(base, p)});
  return out;
}

}  // namespace dualkit
