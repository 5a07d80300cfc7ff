#include "dualkit/finboole.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dualkit {

int AtomSet::count() const { return std::popcount(bits_); }

std::string AtomSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!contains(i)) continue;
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

FinBoolAlg::FinBoolAlg(std::string name, int n_atoms)
    : name_(std::move(name)), n_atoms_(n_atoms) {
  if (n_atoms < 1)
    throw ValidationError("algebra '" + name_ +
                          "': atom count must be at least 1");
  if (n_atoms > 20)
    throw ValidationError("algebra '" + name_ + "': atom count too large");
}

std::vector<AtomSet> FinBoolAlg::elements() const {
  std::vector<AtomSet> out;
  out.reserve(element_count());
  for (std::uint32_t m = 0; m < (1u << n_atoms_); ++m)
    out.push_back(AtomSet::from_bits(m));
  return out;
}

std::vector<AtomSet> FinBoolAlg::atoms() const {
  std::vector<AtomSet> out;
  for (int i = 0; i < n_atoms_; ++i) out.push_back(AtomSet::single(i));
  return out;
}

std::vector<Ultrafilter> ultrafilters(const FinBoolAlg& a) {
  std::vector<Ultrafilter> out;
  for (int x = 0; x < a.atom_count(); ++x) {
    Ultrafilter u;
    u.atom = x;
    for (AtomSet e : a.elements())
      if (e.contains(x)) u.members.push_back(e);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<std::vector<AtomSet>> brute_force_ultrafilters(const FinBoolAlg& a) {
  const auto elems = a.elements();
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<AtomSet>> found;
  // Subsets of the carrier are walked as bitmasks over element indices.
  for (std::uint64_t sub = 1; sub < (1ull << n); ++sub) {
    std::vector<AtomSet> f;
    for (int i = 0; i < n; ++i)
      if ((sub >> i) & 1) f.push_back(elems[i]);
    bool ok = true;
    // proper: bottom not a member
    for (AtomSet m : f)
      if (m.empty()) { ok = false; break; }
    // closed under meets
    for (std::size_t i = 0; ok && i < f.size(); ++i)
      for (std::size_t j = i; ok && j < f.size(); ++j) {
        AtomSet m = a.meet(f[i], f[j]);
        if (std::find(f.begin(), f.end(), m) == f.end()) ok = false;
      }
    // upward closed
    for (std::size_t i = 0; ok && i < f.size(); ++i)
      for (AtomSet e : elems) {
        if (!a.leq(f[i], e)) continue;
        if (std::find(f.begin(), f.end(), e) == f.end()) { ok = false; break; }
      }
    // prime: contains each element or its complement
    for (AtomSet e : elems) {
      if (!ok) break;
      bool has = std::find(f.begin(), f.end(), e) != f.end();
      bool hasc =
          std::find(f.begin(), f.end(), a.complement(e)) != f.end();
      if (has == hasc) { ok = false; break; }
    }
    if (ok) found.push_back(std::move(f));
  }
  // Order by generating atom (the minimum of the filter), matching
  // ultrafilters().
  std::sort(found.begin(), found.end(),
            [](const std::vector<AtomSet>& l, const std::vector<AtomSet>& r) {
              AtomSet lm = l.front(), rm = r.front();
              for (AtomSet e : l)
                if (e.bits() < lm.bits()) lm = e;
              for (AtomSet e : r)
                if (e.bits() < rm.bits()) rm = e;
              return lm < rm;
            });
  for (auto& f : found) std::sort(f.begin(), f.end());
  return found;
}

std::vector<int> eps(const FinBoolAlg& a, AtomSet elem) {
  if (!a.is_element(elem))
    throw ValidationError("eps: not an element of " + a.name());
  std::vector<int> out;
  auto ufs = ultrafilters(a);
  for (int i = 0; i < static_cast<int>(ufs.size()); ++i)
    if (ufs[i].contains(elem)) out.push_back(i);
  return out;
}

BoolHom::BoolHom(FinBoolAlg dom, FinBoolAlg cod, std::vector<int> atom_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), atom_map_(std::move(atom_map)) {
  if (static_cast<int>(atom_map_.size()) != cod_.atom_count())
    throw ValidationError("hom: atom map must have one entry per cod atom");
  for (int v : atom_map_)
    if (v < 0 || v >= dom_.atom_count())
      throw ValidationError("hom: atom map entry out of range");
}

AtomSet BoolHom::operator()(AtomSet a) const {
  std::uint32_t out = 0;
  for (int y = 0; y < cod_.atom_count(); ++y)
    if (a.contains(atom_map_[y])) out |= 1u << y;
  return AtomSet::from_bits(out);
}

std::vector<AtomSet> BoolHom::table() const {
  std::vector<AtomSet> t;
  t.reserve(dom_.element_count());
  for (AtomSet a : dom_.elements()) t.push_back((*this)(a));
  return t;
}

BoolHom BoolHom::identity(const FinBoolAlg& a) {
  std::vector<int> m(a.atom_count());
  for (int i = 0; i < a.atom_count(); ++i) m[i] = i;
  return BoolHom(a, a, m);
}

BoolHom BoolHom::compose(const BoolHom& g, const BoolHom& f) {
  if (!f.cod().same_shape(g.dom()))
    throw ValidationError("hom composition: shapes do not match");
  // Dual atom maps compose the other way round.
  std::vector<int> m(g.cod().atom_count());
  for (int y = 0; y < g.cod().atom_count(); ++y)
    m[y] = f.atom_map()[g.atom_map()[y]];
  return BoolHom(f.dom(), g.cod(), m);
}

HomValidation validate_hom(const FinBoolAlg& dom, const FinBoolAlg& cod,
                           const std::vector<AtomSet>& table) {
  HomValidation v;
  v.report.subject = "hom " + dom.name() + " -> " + cod.name();
  if (static_cast<int>(table.size()) != dom.element_count())
    throw ValidationError("validate_hom: table must cover every dom element");
  for (AtomSet t : table)
    if (!cod.is_element(t))
      throw ValidationError("validate_hom: table value outside cod");

  auto at = [&](AtomSet a) { return table[a.bits()]; };
  bool ok = true;
  if (!at(dom.bot()).empty()) {
    v.report.add("preserves-bottom", false, "phi({})=" + at(dom.bot()).to_string());
    ok = false;
  } else {
    v.report.add("preserves-bottom", true);
  }
  if (!(at(dom.top()) == cod.top())) {
    v.report.add("preserves-top", false, "phi(top)=" + at(dom.top()).to_string());
    ok = false;
  } else {
    v.report.add("preserves-top", true);
  }
  auto law2 = [&](const char* name, auto op_dom, auto op_cod) {
    for (AtomSet a : dom.elements())
      for (AtomSet b : dom.elements()) {
        if (!(at(op_dom(a, b)) == op_cod(at(a), at(b)))) {
          v.report.add(name, false, "at (" + a.to_string() + "," + b.to_string() + ")");
          ok = false;
          return;
        }
      }
    v.report.add(name, true);
  };
  law2("preserves-meet",
       [&](AtomSet a, AtomSet b) { return dom.meet(a, b); },
       [&](AtomSet a, AtomSet b) { return cod.meet(a, b); });
  law2("preserves-join",
       [&](AtomSet a, AtomSet b) { return dom.join(a, b); },
       [&](AtomSet a, AtomSet b) { return cod.join(a, b); });
  {
    bool cok = true;
    for (AtomSet a : dom.elements())
      if (!(at(dom.complement(a)) == cod.complement(at(a)))) {
        v.report.add("preserves-complement", false, "at " + a.to_string());
        ok = cok = false;
        break;
      }
    if (cok) v.report.add("preserves-complement", true);
  }
  if (!ok) return v;

  // Recover the dual atom map:  At(phi)(y) = meet of { a : y <= phi(a) }.
  v.atom_map.resize(cod.atom_count());
  for (int y = 0; y < cod.atom_count(); ++y) {
    AtomSet m = dom.top();
    for (AtomSet a : dom.elements())
      if (at(a).contains(y)) m = m & a;
    if (m.count() != 1)
      throw TheoremViolation("validate_hom: recovered atom map not atomic at cod atom " +
                             std::to_string(y));
    int atom = 0;
    while (!m.contains(atom)) ++atom;
    v.atom_map[y] = atom;
  }
  // The derived action must reproduce the table.
  BoolHom h(dom, cod, v.atom_map);
  for (AtomSet a : dom.elements())
    if (!(h(a) == at(a)))
      throw TheoremViolation("validate_hom: derived action differs at " + a.to_string());
  v.ok = true;
  return v;
}

SupCheck is_sup_preserving(const BoolHom& phi) {
  SupCheck s;
  const auto elems = phi.dom().elements();
  const int n = static_cast<int>(elems.size());
  for (std::uint64_t sub = 0; sub < (1ull << n); ++sub) {
    AtomSet join_d = phi.dom().bot();
    AtomSet join_im = phi.cod().bot();
    for (int i = 0; i < n; ++i)
      if ((sub >> i) & 1) {
        join_d = join_d | elems[i];
        join_im = join_im | phi(elems[i]);
      }
    if (!(phi(join_d) == join_im)) {
      std::ostringstream os;
      os << "subset with join " << join_d.to_string();
      s.ok = false;
      s.witness = os.str();
      return s;
    }
  }
  return s;
}

TarskiMaps tarski_maps(const FinBoolAlg& a) {
  TarskiMaps t{FinBoolAlg("2", 1), {}, {}, {}};
  t.checks.subject = "tarski " + a.name();
  for (AtomSet e : a.elements()) {
    // atoms below e, computed by scanning (not just relabelling)
    std::uint32_t bits = 0;
    for (int x = 0; x < a.atom_count(); ++x)
      if (a.leq(AtomSet::single(x), e)) bits |= 1u << x;
    t.theta.push_back(AtomSet::from_bits(bits));
  }
  {
    bool inj = true;
    for (std::size_t i = 0; i < t.theta.size() && inj; ++i)
      for (std::size_t j = i + 1; j < t.theta.size(); ++j)
        if (t.theta[i] == t.theta[j]) { inj = false; break; }
    t.checks.add("theta-bijective", inj && t.theta.size() == (1u << a.atom_count()));
  }
  for (int x = 0; x < a.atom_count(); ++x)
    t.kappa.emplace_back(a, t.two, std::vector<int>{x});
  {
    // kappa(x)(e) = 1 iff x in e; distinct atoms give distinct homs
    bool ok = true;
    for (int x = 0; x < a.atom_count() && ok; ++x)
      for (AtomSet e : a.elements())
        if ((t.kappa[x](e) == t.two.top()) != e.contains(x)) { ok = false; break; }
    t.checks.add("kappa-characteristic", ok);
    auto homs = all_homs(a, t.two);
    t.checks.add("kappa-bijective",
                 homs.size() == static_cast<std::size_t>(a.atom_count()));
  }
  return t;
}

ChiMaps chi_maps(int n_points) {
  ChiMaps c{FinBoolAlg("P", n_points), {}, {}};
  c.checks.subject = "chi";
  FinBoolAlg two("2", 1);
  for (int x = 0; x < n_points; ++x) c.chi.emplace_back(c.powerset, two, std::vector<int>{x});
  bool ok = true;
  for (int x = 0; x < n_points && ok; ++x)
    for (AtomSet m : c.powerset.elements())
      if ((c.chi[x](m) == two.top()) != m.contains(x)) { ok = false; break; }
  c.checks.add("chi-evaluation", ok);
  auto homs = all_homs(c.powerset, two);
  c.checks.add("chi-bijective", homs.size() == static_cast<std::size_t>(n_points));
  return c;
}

std::vector<BoolHom> all_homs(const FinBoolAlg& dom, const FinBoolAlg& cod) {
  std::vector<BoolHom> out;
  std::vector<int> m(cod.atom_count(), 0);
  for (;;) {
    out.emplace_back(dom, cod, m);
    int i = cod.atom_count() - 1;
    while (i >= 0 && m[i] == dom.atom_count() - 1) m[i--] = 0;
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

}  // namespace dualkit
