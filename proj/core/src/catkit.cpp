#include "dualkit/catkit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace dualkit {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int find_mor_name(const std::vector<FinCat::Mor>& mors, const std::string& name) {
  for (std::size_t i = 0; i < mors.size(); ++i)
    if (mors[i].name == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

FinCat::Builder& FinCat::Builder::object(const std::string& name) {
  if (find_name(objects_, name) >= 0)
    throw ValidationError("duplicate object name: " + name);
  objects_.push_back(name);
  return *this;
}

FinCat::Builder& FinCat::Builder::morphism(const std::string& name,
                                           const std::string& dom,
                                           const std::string& cod) {
  if (find_mor_name(mors_, name) >= 0)
    throw ValidationError("duplicate morphism name: " + name);
  int d = find_name(objects_, dom);
  if (d < 0) throw ValidationError("unknown object: " + dom);
  int c = find_name(objects_, cod);
  if (c < 0) throw ValidationError("unknown object: " + cod);
  mors_.push_back(Mor{name, d, c});
  return *this;
}

FinCat::Builder& FinCat::Builder::identity(const std::string& obj,
                                           const std::string& mor) {
  int o = find_name(objects_, obj);
  if (o < 0) throw ValidationError("unknown object: " + obj);
  int m = find_mor_name(mors_, mor);
  if (m < 0) throw ValidationError("unknown morphism: " + mor);
  ids_.push_back({o, m});
  return *this;
}

FinCat::Builder& FinCat::Builder::compose(const std::string& g,
                                          const std::string& f,
                                          const std::string& gf) {
  int gi = find_mor_name(mors_, g);
  if (gi < 0) throw ValidationError("unknown morphism: " + g);
  int fi = find_mor_name(mors_, f);
  if (fi < 0) throw ValidationError("unknown morphism: " + f);
  int ci = find_mor_name(mors_, gf);
  if (ci < 0) throw ValidationError("unknown morphism: " + gf);
  comp_.push_back({gi, fi, ci});
  return *this;
}

FinCat FinCat::Builder::build(std::string cat_name) const {
  std::vector<std::string> objects = objects_;
  std::vector<Mor> mors = mors_;
  std::vector<int> ids(objects.size(), -1);
  for (auto [o, m] : ids_) {
    if (ids[o] >= 0)
      throw ValidationError("two identities declared for " + objects[o]);
    ids[o] = m;
  }
  for (std::size_t o = 0; o < objects.size(); ++o) {
    if (ids[o] >= 0) continue;
    std::string name = "1_" + objects[o];
    if (find_mor_name(mors, name) >= 0)
      throw ValidationError("cannot synthesise identity " + name +
                            ": name taken, declare the identity explicitly");
    ids[o] = static_cast<int>(mors.size());
    mors.push_back(Mor{name, static_cast<int>(o), static_cast<int>(o)});
  }
  const int n = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (auto [g, f, gf] : comp_) {
    if (comp[g][f] >= 0 && comp[g][f] != gf)
      throw ValidationError("conflicting composites declared for " +
                            mors[g].name + " after " + mors[f].name);
    comp[g][f] = gf;
  }
  for (int m = 0; m < n; ++m) {
    int left = ids[mors[m].cod], right = ids[mors[m].dom];
    if (comp[left][m] < 0) comp[left][m] = m;
    if (comp[m][right] < 0) comp[m][right] = m;
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (mors[g].dom == mors[f].cod && comp[g][f] < 0)
        throw ValidationError("missing composite: " + mors[g].name + " after " +
                              mors[f].name);
  return from_tables(std::move(cat_name), std::move(objects), std::move(mors),
                     std::move(comp), std::move(ids));
}

FinCat FinCat::from_tables(std::string name, std::vector<std::string> objects,
                           std::vector<Mor> morphisms,
                           std::vector<std::vector<int>> comp,
                           std::vector<int> identity_of) {
  FinCat c;
  c.name_ = std::move(name);
  c.objects_ = std::move(objects);
  c.mors_ = std::move(morphisms);
  c.comp_ = std::move(comp);
  c.ids_ = std::move(identity_of);
  Report r = c.validate();
  if (!r.all_pass())
    throw ValidationError("invalid category " + c.name_ + ": " +
                          r.first_failure());
  return c;
}

int FinCat::object_index(const std::string& name) const {
  int o = find_name(objects_, name);
  if (o < 0) throw ValidationError("no object named " + name + " in " + name_);
  return o;
}

int FinCat::morphism_index(const std::string& name) const {
  int m = find_mor_name(mors_, name);
  if (m < 0) throw ValidationError("no morphism named " + name + " in " + name_);
  return m;
}

bool FinCat::is_identity(int m) const {
  return mors_[m].dom == mors_[m].cod && ids_[mors_[m].dom] == m;
}

int FinCat::compose(int g, int f) const {
  if (!composable(g, f))
    throw ValidationError("non-composable: " + mors_[g].name + " after " +
                          mors_[f].name);
  return comp_[g][f];
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (mors_[m].dom == a && mors_[m].cod == b) out.push_back(m);
  return out;
}

int FinCat::inverse(int m) const {
  for (int g : hom(cod(m), dom(m)))
    if (comp_[g][m] == ids_[dom(m)] && comp_[m][g] == ids_[cod(m)]) return g;
  return -1;
}

FinCat FinCat::opposite() const {
  FinCat o;
  o.name_ = name_ + "^op";
  o.objects_ = objects_;
  o.mors_.reserve(mors_.size());
  for (const Mor& m : mors_) o.mors_.push_back(Mor{m.name, m.cod, m.dom});
  o.ids_ = ids_;
  const int n = morphism_count();
  o.comp_.assign(n, std::vector<int>(n, -1));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) o.comp_[g][f] = comp_[f][g];
  return o;
}

Report FinCat::validate() const {
  Report r{"category " + name_, {}};
  const int no = object_count(), nm = morphism_count();
  {
    bool ok = true;
    std::string w;
    std::set<std::string> seen;
    for (const auto& o : objects_)
      if (!seen.insert(o).second) {
        ok = false;
        w = o;
        break;
      }
    r.add("object-names-unique", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    std::set<std::string> seen;
    for (const auto& m : mors_)
      if (!seen.insert(m.name).second) {
        ok = false;
        w = m.name;
        break;
      }
    r.add("morphism-names-unique", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& m : mors_)
      if (m.dom < 0 || m.dom >= no || m.cod < 0 || m.cod >= no) {
        ok = false;
        w = m.name;
        break;
      }
    r.add("endpoints-in-range", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = static_cast<int>(ids_.size()) == no;
    std::string w = ok ? "" : "identity table size";
    if (ok)
      for (int o = 0; o < no; ++o) {
        int m = ids_[o];
        if (m < 0 || m >= nm || mors_[m].dom != o || mors_[m].cod != o) {
          ok = false;
          w = objects_[o];
          break;
        }
      }
    r.add("identity-table-valid", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = static_cast<int>(comp_.size()) == nm;
    if (ok)
      for (const auto& row : comp_)
        if (static_cast<int>(row.size()) != nm) {
          ok = false;
          break;
        }
    r.add("composition-table-shape", ok, ok ? "" : "dimensions");
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int g = 0; g < nm && ok; ++g)
      for (int f = 0; f < nm && ok; ++f) {
        int c = comp_[g][f];
        if (!composable(g, f)) {
          if (c != -1) {
            ok = false;
            w = mors_[g].name + " after " + mors_[f].name + " should be empty";
          }
          continue;
        }
        if (c < 0 || c >= nm) {
          ok = false;
          w = mors_[g].name + " after " + mors_[f].name + " undefined";
        } else if (mors_[c].dom != mors_[f].dom || mors_[c].cod != mors_[g].cod) {
          ok = false;
          w = mors_[c].name + " has wrong endpoints for " + mors_[g].name +
              " after " + mors_[f].name;
        }
      }
    r.add("composites-well-typed", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < nm; ++m) {
      if (comp_[ids_[mors_[m].cod]][m] != m || comp_[m][ids_[mors_[m].dom]] != m) {
        ok = false;
        w = mors_[m].name;
        break;
      }
    }
    r.add("identity-laws", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    std::vector<std::vector<int>> outgoing(no);
    for (int m = 0; m < nm; ++m) outgoing[mors_[m].dom].push_back(m);
    for (int f = 0; f < nm && ok; ++f)
      for (int g : outgoing[mors_[f].cod]) {
        int gf = comp_[g][f];
        for (int h : outgoing[mors_[g].cod])
          if (comp_[h][gf] != comp_[comp_[h][g]][f]) {
            ok = false;
            w = mors_[h].name + " after " + mors_[g].name + " after " +
                mors_[f].name;
            break;
          }
        if (!ok) break;
      }
    r.add("associative", ok, w);
  }
  return r;
}

bool FinCat::same_structure(const FinCat& o) const {
  return objects_ == o.objects_ && mors_ == o.mors_ && comp_ == o.comp_ &&
         ids_ == o.ids_;
}

int Subcategory::obj_in(int ambient_obj) const {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i] == ambient_obj) return static_cast<int>(i);
  return -1;
}

int Subcategory::mor_in(int ambient_mor) const {
  for (std::size_t i = 0; i < mors.size(); ++i)
    if (mors[i] == ambient_mor) return static_cast<int>(i);
  return -1;
}

Subcategory full_subcategory(const FinCat& y, const std::vector<int>& yobjs,
                             std::string name) {
  Subcategory s;
  {
    std::set<int> seen;
    for (int o : yobjs) {
      if (o < 0 || o >= y.object_count())
        throw ValidationError("object index out of range");
      if (!seen.insert(o).second)
        throw ValidationError("duplicate object " + y.object_name(o));
    }
  }
  s.objs = yobjs;
  for (int m = 0; m < y.morphism_count(); ++m)
    if (s.obj_in(y.dom(m)) >= 0 && s.obj_in(y.cod(m)) >= 0) s.mors.push_back(m);
  std::vector<std::string> onames;
  for (int o : s.objs) onames.push_back(y.object_name(o));
  std::vector<FinCat::Mor> mors;
  for (int m : s.mors)
    mors.push_back({y.morphism_name(m), s.obj_in(y.dom(m)), s.obj_in(y.cod(m))});
  const int nm = static_cast<int>(s.mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (y.composable(s.mors[g], s.mors[f]))
        comp[g][f] = s.mor_in(y.compose(s.mors[g], s.mors[f]));
  std::vector<int> ids;
  for (int o : s.objs) ids.push_back(s.mor_in(y.identity(o)));
  s.cat = FinCat::from_tables(std::move(name), std::move(onames),
                              std::move(mors), std::move(comp), std::move(ids));
  return s;
}

Report check_functor(const FinCat& dom, const FinCat& cod,
                     const std::vector<int>& obj_map,
                     const std::vector<int>& mor_map) {
  Report r{"functor " + dom.name() + " -> " + cod.name(), {}};
  bool shapes = true;
  {
    bool ok = static_cast<int>(obj_map.size()) == dom.object_count();
    if (ok)
      for (int v : obj_map)
        if (v < 0 || v >= cod.object_count()) {
          ok = false;
          break;
        }
    r.add("object-table-shape", ok);
    shapes = shapes && ok;
  }
  {
    bool ok = static_cast<int>(mor_map.size()) == dom.morphism_count();
    if (ok)
      for (int v : mor_map)
        if (v < 0 || v >= cod.morphism_count()) {
          ok = false;
          break;
        }
    r.add("morphism-table-shape", ok);
    shapes = shapes && ok;
  }
  if (!shapes) return r;
  bool typed = true;
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < dom.morphism_count(); ++m)
      if (cod.dom(mor_map[m]) != obj_map[dom.dom(m)] ||
          cod.cod(mor_map[m]) != obj_map[dom.cod(m)]) {
        ok = false;
        w = dom.morphism_name(m);
        break;
      }
    r.add("preserves-endpoints", ok, w);
    typed = ok;
  }
  {
    bool ok = true;
    std::string w;
    for (int o = 0; o < dom.object_count(); ++o)
      if (mor_map[dom.identity(o)] != cod.identity(obj_map[o])) {
        ok = false;
        w = dom.object_name(o);
        break;
      }
    r.add("preserves-identities", ok, w);
  }
  if (!typed) return r;
  {
    bool ok = true;
    std::string w;
    for (int g = 0; g < dom.morphism_count() && ok; ++g)
      for (int f = 0; f < dom.morphism_count(); ++f) {
        if (!dom.composable(g, f)) continue;
        if (mor_map[dom.compose(g, f)] != cod.compose(mor_map[g], mor_map[f])) {
          ok = false;
          w = dom.morphism_name(g) + " after " + dom.morphism_name(f);
          break;
        }
      }
    r.add("preserves-composition", ok, w);
  }
  return r;
}

Functor::Functor()
    : name_("Id"),
      dom_(std::make_shared<const FinCat>()),
      cod_(dom_) {}

Functor::Functor(std::string name, FinCat dom, FinCat cod,
                 std::vector<int> obj_map, std::vector<int> mor_map)
    : Functor(std::move(name), std::make_shared<const FinCat>(std::move(dom)),
              std::make_shared<const FinCat>(std::move(cod)),
              std::move(obj_map), std::move(mor_map)) {}

Functor::Functor(std::string name, std::shared_ptr<const FinCat> dom,
                 std::shared_ptr<const FinCat> cod, std::vector<int> obj_map,
                 std::vector<int> mor_map)
    : name_(std::move(name)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  Report r = check_functor(*dom_, *cod_, obj_map_, mor_map_);
  if (!r.all_pass())
    throw ValidationError("invalid functor " + name_ + ": " + r.first_failure());
}

Functor Functor::identity(const FinCat& c) {
  std::vector<int> obj(c.object_count()), mor(c.morphism_count());
  for (int o = 0; o < c.object_count(); ++o) obj[o] = o;
  for (int m = 0; m < c.morphism_count(); ++m) mor[m] = m;
  auto p = std::make_shared<const FinCat>(c);
  Functor f;
  f.name_ = "Id_" + c.name();
  f.dom_ = p;
  f.cod_ = p;
  f.obj_map_ = std::move(obj);
  f.mor_map_ = std::move(mor);
  return f;
}

Functor Functor::compose(std::string name, const Functor& g, const Functor& f) {
  if (!f.cod().same_structure(g.dom()))
    throw ValidationError("functor composition mismatch: " + g.name() +
                          " after " + f.name());
  std::vector<int> obj(f.dom().object_count()), mor(f.dom().morphism_count());
  for (int o = 0; o < f.dom().object_count(); ++o) obj[o] = g.obj(f.obj(o));
  for (int m = 0; m < f.dom().morphism_count(); ++m) mor[m] = g.mor(f.mor(m));
  return Functor(std::move(name), f.dom_ptr(), g.cod_ptr(), std::move(obj),
                 std::move(mor));
}

Report check_nat_trans(const Functor& f, const Functor& g,
                       const std::vector<int>& components) {
  Report r{"transformation " + f.name() + " => " + g.name(), {}};
  {
    bool ok = f.dom().same_structure(g.dom()) && f.cod().same_structure(g.cod());
    r.add("parallel-functors", ok);
    if (!ok) return r;
  }
  const FinCat& c = f.cod();
  {
    bool ok = static_cast<int>(components.size()) == f.dom().object_count();
    if (ok)
      for (int v : components)
        if (v < 0 || v >= c.morphism_count()) {
          ok = false;
          break;
        }
    r.add("component-shape", ok);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int o = 0; o < f.dom().object_count(); ++o)
      if (c.dom(components[o]) != f.obj(o) || c.cod(components[o]) != g.obj(o)) {
        ok = false;
        w = f.dom().object_name(o);
        break;
      }
    r.add("component-endpoints", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < f.dom().morphism_count(); ++m) {
      int o = f.dom().dom(m), o2 = f.dom().cod(m);
      if (c.compose(g.mor(m), components[o]) !=
          c.compose(components[o2], f.mor(m))) {
        ok = false;
        w = f.dom().morphism_name(m);
        break;
      }
    }
    r.add("naturality", ok, w);
  }
  return r;
}

NatTrans::NatTrans() = default;

NatTrans::NatTrans(std::string name, Functor f, Functor g,
                   std::vector<int> components)
    : name_(std::move(name)),
      f_(std::move(f)),
      g_(std::move(g)),
      comps_(std::move(components)) {
  Report r = check_nat_trans(f_, g_, comps_);
  if (!r.all_pass())
    throw ValidationError("invalid transformation " + name_ + ": " +
                          r.first_failure());
}

bool NatTrans::is_iso() const {
  for (int c : comps_)
    if (!f_.cod().is_iso(c)) return false;
  return true;
}

DualAdjunction make_dual_adjunction(std::string name, FinCat alg, FinCat sp,
                                    std::vector<int> s_obj,
                                    std::vector<int> s_mor,
                                    std::vector<int> t_obj,
                                    std::vector<int> t_mor,
                                    std::vector<int> eta_comps,
                                    std::vector<int> eps_comps) {
  DualAdjunction d;
  d.name = std::move(name);
  d.alg = std::make_shared<const FinCat>(std::move(alg));
  d.sp = std::make_shared<const FinCat>(std::move(sp));
  auto alg_op = std::make_shared<const FinCat>(d.alg->opposite());
  auto sp_op = std::make_shared<const FinCat>(d.sp->opposite());
  d.s = Functor(d.name + ".S", sp_op, d.alg, std::move(s_obj), std::move(s_mor));
  d.t = Functor(d.name + ".T", alg_op, d.sp, std::move(t_obj), std::move(t_mor));
  {
    std::vector<int> obj(d.sp->object_count()), mor(d.sp->morphism_count());
    for (int o = 0; o < d.sp->object_count(); ++o) obj[o] = d.t.obj(d.s.obj(o));
    for (int m = 0; m < d.sp->morphism_count(); ++m) mor[m] = d.t.mor(d.s.mor(m));
    d.ts = Functor(d.name + ".TS", d.sp, d.sp, std::move(obj), std::move(mor));
  }
  {
    std::vector<int> obj(d.alg->object_count()), mor(d.alg->morphism_count());
    for (int o = 0; o < d.alg->object_count(); ++o) obj[o] = d.s.obj(d.t.obj(o));
    for (int m = 0; m < d.alg->morphism_count(); ++m)
      mor[m] = d.s.mor(d.t.mor(m));
    d.st = Functor(d.name + ".ST", d.alg, d.alg, std::move(obj), std::move(mor));
  }
  d.eta = NatTrans(d.name + ".eta", Functor::identity(*d.sp), d.ts,
                   std::move(eta_comps));
  d.eps = NatTrans(d.name + ".eps", Functor::identity(*d.alg), d.st,
                   std::move(eps_comps));
  Report& r = d.checks;
  r.subject = "dual adjunction " + d.name;
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < d.alg->object_count(); ++a) {
      int ta = d.t.obj(a);
      if (d.sp->compose(d.t.mor(d.eps.at(a)), d.eta.at(ta)) !=
          d.sp->identity(ta)) {
        ok = false;
        w = d.alg->object_name(a);
        break;
      }
    }
    r.add("triangle-point-side", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < d.sp->object_count(); ++x) {
      int sx = d.s.obj(x);
      if (d.alg->compose(d.s.mor(d.eta.at(x)), d.eps.at(sx)) !=
          d.alg->identity(sx)) {
        ok = false;
        w = d.sp->object_name(x);
        break;
      }
    }
    r.add("triangle-algebra-side", ok, w);
  }
  r.add("unit-iso", d.eta.is_iso());
  r.add("counit-iso", d.eps.is_iso());
  return d;
}

Report check_covering_class(const FinCat& y, const Subcategory& x,
                            const std::vector<int>& members) {
  Report r{"covering class in " + y.name(), {}};
  std::set<int> mset;
  {
    bool ok = true;
    std::string w;
    for (int p : members) {
      if (p < 0 || p >= y.morphism_count()) {
        ok = false;
        w = "index out of range";
        break;
      }
      mset.insert(p);
      if (x.obj_in(y.dom(p)) < 0) {
        ok = false;
        w = y.morphism_name(p) + " has domain outside the subcategory";
        break;
      }
    }
    r.add("members-valid", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int xo : x.objs)
      if (!mset.count(y.identity(xo))) {
        ok = false;
        w = y.object_name(xo);
        break;
      }
    r.add("identities-included", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int p : mset) {
      for (int xo : x.objs) {
        for (int f : y.hom(xo, y.cod(p))) {
          bool lifted = false;
          for (int g : y.hom(xo, y.dom(p)))
            if (y.compose(p, g) == f) {
              lifted = true;
              break;
            }
          if (!lifted) {
            ok = false;
            w = "no lift of " + y.morphism_name(f) + " along " +
                y.morphism_name(p);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("subcategory-objects-projective", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < y.object_count(); ++yo) {
      bool covered = false;
      for (int p : mset)
        if (y.cod(p) == yo) {
          covered = true;
          break;
        }
      if (!covered) {
        ok = false;
        w = y.object_name(yo);
        break;
      }
    }
    r.add("every-object-covered", ok, w);
  }
  return r;
}

std::vector<int> bar_closure(const FinCat& y, const Subcategory& x,
                             const std::vector<int>& members) {
  std::set<int> out;
  for (int p : members) {
    for (int i = 0; i < y.morphism_count(); ++i) {
      if (y.cod(i) != y.dom(p)) continue;
      if (x.obj_in(y.dom(i)) < 0) continue;
      if (!y.is_iso(i)) continue;
      out.insert(y.compose(p, i));
    }
  }
  return std::vector<int>(out.begin(), out.end());
}

Coreflection make_coreflection(const FinCat& ycat,
                               const std::vector<int>& xobjs,
                               const std::vector<int>& e_obj,
                               const std::vector<int>& e_mor,
                               const std::vector<int>& pi) {
  Coreflection c;
  c.ycat = ycat;
  c.x = full_subcategory(ycat, xobjs, ycat.name() + ".sub");
  c.e = Functor(ycat.name() + ".E", ycat, c.x.cat, e_obj, e_mor);
  c.pi = pi;
  Report& r = c.checks;
  r.subject = "coreflection in " + ycat.name();
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < c.x.cat.object_count() && ok; ++xo)
      if (c.e.obj(c.x.objs[xo]) != xo) {
        ok = false;
        w = c.x.cat.object_name(xo);
      }
    for (int xm = 0; xm < c.x.cat.morphism_count() && ok; ++xm)
      if (c.e.mor(c.x.mors[xm]) != xm) {
        ok = false;
        w = c.x.cat.morphism_name(xm);
      }
    r.add("retracts-onto-subcategory", ok, w);
  }
  {
    bool ok = static_cast<int>(pi.size()) == ycat.object_count();
    std::string w = ok ? "" : "component count";
    if (ok)
      for (int yo = 0; yo < ycat.object_count(); ++yo) {
        int m = pi[yo];
        if (m < 0 || m >= ycat.morphism_count() ||
            ycat.dom(m) != c.x.objs[c.e.obj(yo)] || ycat.cod(m) != yo) {
          ok = false;
          w = ycat.object_name(yo);
          break;
        }
      }
    r.add("counit-shape", ok, w);
    if (!ok) return c;
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < ycat.morphism_count(); ++m) {
      int yo = ycat.dom(m), yo2 = ycat.cod(m);
      if (ycat.compose(m, pi[yo]) !=
          ycat.compose(pi[yo2], c.x.mors[c.e.mor(m)])) {
        ok = false;
        w = ycat.morphism_name(m);
        break;
      }
    }
    r.add("counit-natural", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int xo : c.x.objs)
      if (pi[xo] != ycat.identity(xo)) {
        ok = false;
        w = ycat.object_name(xo);
        break;
      }
    r.add("counit-identity-on-subcategory", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < ycat.object_count() && ok; ++yo)
      for (int xo = 0; xo < c.x.cat.object_count() && ok; ++xo)
        for (int f : ycat.hom(c.x.objs[xo], yo)) {
          int count = 0;
          for (int g : c.x.cat.hom(xo, c.e.obj(yo)))
            if (ycat.compose(pi[yo], c.x.mors[g]) == f) ++count;
          if (count != 1) {
            ok = false;
            w = ycat.morphism_name(f) + " factors " + std::to_string(count) +
                " ways";
            break;
          }
        }
    r.add("counit-universal", ok, w);
  }
  return c;
}

Reflection make_reflection(const FinCat& ycat, const std::vector<int>& xobjs,
                           const std::vector<int>& e_obj,
                           const std::vector<int>& e_mor,
                           const std::vector<int>& iota) {
  Reflection c;
  c.ycat = ycat;
  c.x = full_subcategory(ycat, xobjs, ycat.name() + ".sub");
  c.e = Functor(ycat.name() + ".E", ycat, c.x.cat, e_obj, e_mor);
  c.iota = iota;
  Report& r = c.checks;
  r.subject = "reflection in " + ycat.name();
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < c.x.cat.object_count() && ok; ++xo)
      if (c.e.obj(c.x.objs[xo]) != xo) {
        ok = false;
        w = c.x.cat.object_name(xo);
      }
    for (int xm = 0; xm < c.x.cat.morphism_count() && ok; ++xm)
      if (c.e.mor(c.x.mors[xm]) != xm) {
        ok = false;
        w = c.x.cat.morphism_name(xm);
      }
    r.add("retracts-onto-subcategory", ok, w);
  }
  {
    bool ok = static_cast<int>(iota.size()) == ycat.object_count();
    std::string w = ok ? "" : "component count";
    if (ok)
      for (int yo = 0; yo < ycat.object_count(); ++yo) {
        int m = iota[yo];
        if (m < 0 || m >= ycat.morphism_count() || ycat.dom(m) != yo ||
            ycat.cod(m) != c.x.objs[c.e.obj(yo)]) {
          ok = false;
          w = ycat.object_name(yo);
          break;
        }
      }
    r.add("unit-shape", ok, w);
    if (!ok) return c;
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < ycat.morphism_count(); ++m) {
      int yo = ycat.dom(m), yo2 = ycat.cod(m);
      if (ycat.compose(iota[yo2], m) !=
          ycat.compose(c.x.mors[c.e.mor(m)], iota[yo])) {
        ok = false;
        w = ycat.morphism_name(m);
        break;
      }
    }
    r.add("unit-natural", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int xo : c.x.objs)
      if (iota[xo] != ycat.identity(xo)) {
        ok = false;
        w = ycat.object_name(xo);
        break;
      }
    r.add("unit-identity-on-subcategory", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < ycat.object_count() && ok; ++yo)
      for (int xo = 0; xo < c.x.cat.object_count() && ok; ++xo)
        for (int f : ycat.hom(yo, c.x.objs[xo])) {
          int count = 0;
          for (int g : c.x.cat.hom(c.e.obj(yo), xo))
            if (ycat.compose(c.x.mors[g], iota[yo]) == f) ++count;
          if (count != 1) {
            ok = false;
            w = ycat.morphism_name(f) + " factors " + std::to_string(count) +
                " ways";
            break;
          }
        }
    r.add("unit-universal", ok, w);
  }
  return c;
}

std::vector<int> coreflection_class(const Coreflection& c) {
  std::vector<int> out;
  const FinCat& y = c.ycat;
  for (int p = 0; p < y.morphism_count(); ++p) {
    if (c.x.obj_in(y.dom(p)) < 0) continue;
    int ey = c.x.objs[c.e.obj(y.cod(p))];
    bool hit = false;
    for (int b : y.hom(ey, y.dom(p)))
      if (y.is_iso(b) && y.compose(p, b) == c.pi[y.cod(p)]) {
        hit = true;
        break;
      }
    if (hit) out.push_back(p);
  }
  return out;
}

std::vector<int> reflection_class(const Reflection& r) {
  std::vector<int> out;
  const FinCat& y = r.ycat;
  for (int j = 0; j < y.morphism_count(); ++j) {
    if (r.x.obj_in(y.cod(j)) < 0) continue;
    int ey = r.x.objs[r.e.obj(y.dom(j))];
    bool hit = false;
    for (int b : y.hom(ey, y.cod(j)))
      if (y.is_iso(b) && y.compose(b, r.iota[y.dom(j)]) == j) {
        hit = true;
        break;
      }
    if (hit) out.push_back(j);
  }
  return out;
}

LiftedDuality lift_right(const DualAdjunction& base, const FinCat& ycat,
                         const Subcategory& x, const std::vector<int>& covering,
                         const std::vector<int>& choice) {
  LiftedDuality out;
  Report& r = out.checks;
  r.subject = "lifted duality over " + ycat.name();
  const FinCat& alg = *base.alg;
  if (!base.sp->same_structure(x.cat))
    throw ValidationError(
        "point side of the base duality must match the subcategory");
  {
    Report cov = check_covering_class(ycat, x, covering);
    if (!cov.all_pass())
      throw ValidationError("covering class fails: " + cov.first_failure());
    r.add("covering-class-valid", true);
  }
  auto ta_ambient = [&](int a) { return x.objs[base.t.obj(a)]; };
  auto tmor_ambient = [&](int phi) { return x.mors[base.t.mor(phi)]; };

  std::set<int> covset(covering.begin(), covering.end());
  const int nyo = ycat.object_count();
  out.cover_choice.assign(nyo, -1);
  if (!choice.empty()) {
    if (static_cast<int>(choice.size()) != nyo)
      throw ValidationError("cover choice must list one morphism per object");
    for (int yo = 0; yo < nyo; ++yo) {
      int p = choice[yo];
      if (!covset.count(p) || ycat.cod(p) != yo)
        throw ValidationError("cover choice invalid at " + ycat.object_name(yo));
    }
    out.cover_choice = choice;
  } else {
    for (int yo = 0; yo < nyo; ++yo) {
      if (x.obj_in(yo) >= 0) {
        out.cover_choice[yo] = ycat.identity(yo);
        continue;
      }
      for (int p : covset)
        if (ycat.cod(p) == yo) {
          out.cover_choice[yo] = p;
          break;
        }
    }
  }
  for (int xo : x.objs)
    if (out.cover_choice[xo] != ycat.identity(xo))
      throw ValidationError(
          "cover choice must pick identities on the subcategory");

  // Per object, the subcategory domain of the chosen cover and the covering
  // leg of its lift, cover after the inverse unit.
  std::vector<int> ey(nyo), ppart(nyo);
  for (int yo = 0; yo < nyo; ++yo) {
    int p = out.cover_choice[yo];
    ey[yo] = x.obj_in(ycat.dom(p));
    int eta_m = base.eta.at(ey[yo]);
    int eta_inv = x.cat.inverse(eta_m);
    if (eta_inv < 0)
      throw TheoremViolation("unit not invertible at " +
                             x.cat.object_name(ey[yo]));
    ppart[yo] = ycat.compose(p, x.mors[eta_inv]);
    if (!covset.count(ppart[yo]))
      throw ValidationError(
          "covering class is not closed under isomorphism precomposition; "
          "apply the closure first");
  }

  std::map<std::pair<int, int>, int> oindex;
  for (int a = 0; a < alg.object_count(); ++a)
    for (int p : covset)
      if (ycat.dom(p) == ta_ambient(a)) {
        oindex[{a, p}] = static_cast<int>(out.objects.size());
        out.objects.push_back({a, p});
      }
  const int nb = static_cast<int>(out.objects.size());

  std::vector<FinCat::Mor> bmors;
  std::map<std::tuple<int, int, int>, int> by_f;
  for (int i = 0; i < nb; ++i) {
    auto [a1, p1] = out.objects[i];
    int y1 = ycat.cod(p1);
    for (int j = 0; j < nb; ++j) {
      auto [a2, p2] = out.objects[j];
      int y2 = ycat.cod(p2);
      for (int f : ycat.hom(y2, y1)) {
        int count = 0, first_phi = -1;
        for (int phi : alg.hom(a1, a2))
          if (ycat.compose(p1, tmor_ambient(phi)) == ycat.compose(f, p2)) {
            if (count == 0) first_phi = phi;
            ++count;
          }
        if (count == 0) continue;
        std::ostringstream nm;
        nm << "[" << alg.morphism_name(first_phi) << ","
           << ycat.morphism_name(f) << "]:" << i << ":" << j;
        by_f[{i, j, f}] = static_cast<int>(bmors.size());
        bmors.push_back({nm.str(), i, j});
        out.reps.push_back({first_phi, f});
        out.class_size.push_back(count);
      }
    }
  }
  const int nbm = static_cast<int>(bmors.size());

  std::vector<int> bids(nb, -1);
  for (int i = 0; i < nb; ++i) {
    auto it = by_f.find({i, i, ycat.identity(ycat.cod(out.objects[i].second))});
    if (it == by_f.end())
      throw TheoremViolation("identity pair missing at pair object " +
                             std::to_string(i));
    bids[i] = it->second;
  }
  std::vector<std::vector<int>> bcomp(nbm, std::vector<int>(nbm, -1));
  for (int m2 = 0; m2 < nbm; ++m2)
    for (int m1 = 0; m1 < nbm; ++m1) {
      if (bmors[m2].dom != bmors[m1].cod) continue;
      int i = bmors[m1].dom, k = bmors[m2].cod;
      int phi = alg.compose(out.reps[m2].first, out.reps[m1].first);
      int f = ycat.compose(out.reps[m1].second, out.reps[m2].second);
      auto [ai, pi] = out.objects[i];
      auto [ak, pk] = out.objects[k];
      if (ycat.compose(pi, tmor_ambient(phi)) != ycat.compose(f, pk))
        throw TheoremViolation("composite pair violates the defining square");
      auto it = by_f.find({i, k, f});
      if (it == by_f.end())
        throw TheoremViolation("composite escaped the pair category");
      bcomp[m2][m1] = it->second;
    }
  std::vector<std::string> onames;
  for (auto [a, p] : out.objects)
    onames.push_back("(" + alg.object_name(a) + "," + ycat.morphism_name(p) +
                     ")");
  out.bcat = FinCat::from_tables("B(" + ycat.name() + ")", std::move(onames),
                                 std::move(bmors), std::move(bcomp),
                                 std::move(bids));

  auto bptr = std::make_shared<const FinCat>(out.bcat);
  auto bop = std::make_shared<const FinCat>(out.bcat.opposite());
  auto yptr = std::make_shared<const FinCat>(ycat);
  auto yop = std::make_shared<const FinCat>(ycat.opposite());

  std::vector<int> tt_obj(nb), tt_mor(nbm);
  for (int b = 0; b < nb; ++b) tt_obj[b] = ycat.cod(out.objects[b].second);
  for (int m = 0; m < nbm; ++m) tt_mor[m] = out.reps[m].second;
  out.ttilde = Functor("Ttilde", bop, yptr, tt_obj, tt_mor);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        std::set<int> seen;
        for (int m : out.bcat.hom(b, b2))
          if (!seen.insert(tt_mor[m]).second) {
            ok = false;
            w = out.bcat.morphism_name(m);
            break;
          }
      }
    r.add("lift-dual-faithful", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        std::set<int> seen;
        for (int m : out.bcat.hom(b, b2)) seen.insert(tt_mor[m]);
        for (int f : ycat.hom(tt_obj[b2], tt_obj[b]))
          if (!seen.count(f)) {
            ok = false;
            w = ycat.morphism_name(f);
            break;
          }
      }
    r.add("lift-dual-full", ok, w);
  }

  std::vector<int> st_obj(nyo), st_mor(ycat.morphism_count());
  for (int yo = 0; yo < nyo; ++yo) {
    auto it = oindex.find({base.s.obj(ey[yo]), ppart[yo]});
    if (it == oindex.end())
      throw TheoremViolation("canonical pair object missing for " +
                             ycat.object_name(yo));
    st_obj[yo] = it->second;
  }
  for (int f = 0; f < ycat.morphism_count(); ++f) {
    auto it = by_f.find({st_obj[ycat.cod(f)], st_obj[ycat.dom(f)], f});
    if (it == by_f.end())
      throw TheoremViolation("no lift of " + ycat.morphism_name(f) +
                             " between canonical pair objects");
    st_mor[f] = it->second;
  }
  out.stilde = Functor("Stilde", yop, bptr, st_obj, st_mor);
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo && ok; ++yo)
      if (tt_obj[st_obj[yo]] != yo) {
        ok = false;
        w = ycat.object_name(yo);
      }
    for (int f = 0; f < ycat.morphism_count() && ok; ++f)
      if (tt_mor[st_mor[f]] != f) {
        ok = false;
        w = ycat.morphism_name(f);
      }
    r.add("round-trip-identity-on-points", ok, w);
  }

  std::vector<int> i_obj(alg.object_count()), i_mor(alg.morphism_count());
  for (int a = 0; a < alg.object_count(); ++a) {
    auto it = oindex.find({a, ycat.identity(ta_ambient(a))});
    if (it == oindex.end())
      throw TheoremViolation("embedded pair object missing for " +
                             alg.object_name(a));
    i_obj[a] = it->second;
  }
  for (int phi = 0; phi < alg.morphism_count(); ++phi) {
    auto it = by_f.find(
        {i_obj[alg.dom(phi)], i_obj[alg.cod(phi)], tmor_ambient(phi)});
    if (it == by_f.end())
      throw TheoremViolation("embedded pair morphism missing for " +
                             alg.morphism_name(phi));
    i_mor[phi] = it->second;
  }
  out.ifun = Functor("Ifun", base.alg, bptr, i_obj, i_mor);
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count() && ok; ++a)
      for (int a2 = 0; a2 < alg.object_count() && ok; ++a2) {
        std::set<int> seen;
        for (int phi : alg.hom(a, a2))
          if (!seen.insert(i_mor[phi]).second) {
            ok = false;
            w = alg.morphism_name(phi);
            break;
          }
        if (!ok) break;
        for (int m : out.bcat.hom(i_obj[a], i_obj[a2]))
          if (!seen.count(m)) {
            ok = false;
            w = out.bcat.morphism_name(m);
            break;
          }
      }
    r.add("embedding-full-and-faithful", ok, w);
  }

  out.etilde.assign(nb, -1);
  for (int b = 0; b < nb; ++b) {
    int yo = ycat.cod(out.objects[b].second);
    auto it = by_f.find({b, st_obj[yo], ycat.identity(yo)});
    if (it == by_f.end())
      throw TheoremViolation("no comparison morphism at pair object " +
                             out.bcat.object_name(b));
    out.etilde[b] = it->second;
  }
  {
    std::vector<int> stt_obj(nb), stt_mor(nbm);
    for (int b = 0; b < nb; ++b) stt_obj[b] = st_obj[tt_obj[b]];
    for (int m = 0; m < nbm; ++m) stt_mor[m] = st_mor[tt_mor[m]];
    Functor stt("StildeTtilde", bptr, bptr, stt_obj, stt_mor);
    Report nat = check_nat_trans(Functor::identity(out.bcat), stt, out.etilde);
    r.add("comparison-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (!out.bcat.is_iso(out.etilde[b])) {
        ok = false;
        w = out.bcat.object_name(b);
        break;
      }
    r.add("comparison-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (tt_mor[out.etilde[b]] != ycat.identity(tt_obj[b])) {
        ok = false;
        w = out.bcat.object_name(b);
        break;
      }
    r.add("comparison-projects-to-identity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo; ++yo)
      if (out.etilde[st_obj[yo]] != out.bcat.identity(st_obj[yo])) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    r.add("comparison-trivial-on-canonical-pairs", ok, w);
  }

  const int nxo = x.cat.object_count();
  out.gamma.assign(nxo, -1);
  for (int xo = 0; xo < nxo; ++xo) {
    int yo = x.objs[xo];
    auto it = by_f.find(
        {i_obj[base.s.obj(xo)], st_obj[yo], x.mors[base.eta.at(xo)]});
    if (it == by_f.end())
      throw TheoremViolation("no canonical comparison at " +
                             x.cat.object_name(xo));
    out.gamma[xo] = it->second;
  }
  {
    auto xop = std::make_shared<const FinCat>(x.cat.opposite());
    std::vector<int> is_obj(nxo), is_mor(x.cat.morphism_count());
    for (int o = 0; o < nxo; ++o) is_obj[o] = i_obj[base.s.obj(o)];
    for (int m = 0; m < x.cat.morphism_count(); ++m)
      is_mor[m] = i_mor[base.s.mor(m)];
    Functor isf("IS", xop, bptr, is_obj, is_mor);
    std::vector<int> sj_obj(nxo), sj_mor(x.cat.morphism_count());
    for (int o = 0; o < nxo; ++o) sj_obj[o] = st_obj[x.objs[o]];
    for (int m = 0; m < x.cat.morphism_count(); ++m)
      sj_mor[m] = st_mor[x.mors[m]];
    Functor sjf("StildeJ", xop, bptr, sj_obj, sj_mor);
    Report nat = check_nat_trans(isf, sjf, out.gamma);
    r.add("unit-comparison-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < nxo; ++xo)
      if (!out.bcat.is_iso(out.gamma[xo])) {
        ok = false;
        w = x.cat.object_name(xo);
        break;
      }
    r.add("unit-comparison-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < nxo; ++xo)
      if (tt_mor[out.gamma[xo]] != x.mors[base.eta.at(xo)]) {
        ok = false;
        w = x.cat.object_name(xo);
        break;
      }
    r.add("unit-comparison-projects-to-unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count(); ++a)
      if (out.bcat.compose(out.gamma[base.t.obj(a)], i_mor[base.eps.at(a)]) !=
          out.etilde[i_obj[a]]) {
        ok = false;
        w = alg.object_name(a);
        break;
      }
    r.add("unit-counit-compatibility", ok, w);
  }
  return out;
}

CoreflectiveLift lift_right_coreflective(const DualAdjunction& base,
                                         const Coreflection& cor) {
  CoreflectiveLift out;
  if (!cor.checks.all_pass())
    throw ValidationError("coreflection data invalid: " +
                          cor.checks.first_failure());
  std::vector<int> covering = coreflection_class(cor);
  out.lift = lift_right(base, cor.ycat, cor.x, covering, cor.pi);
  const FinCat& bcat = out.lift.bcat;
  const FinCat& alg = *base.alg;
  const FinCat& ycat = cor.ycat;
  Report& r = out.checks;
  r.subject = "coreflective lift over " + ycat.name();
  const int nb = bcat.object_count(), nbm = bcat.morphism_count();
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < nbm; ++m)
      if (out.lift.class_size[m] != 1) {
        ok = false;
        w = bcat.morphism_name(m);
        break;
      }
    r.add("pair-classes-singleton", ok, w);
    if (!ok)
      throw TheoremViolation("pair classes not singletons: " + w);
  }
  auto bptr = std::make_shared<const FinCat>(bcat);
  std::vector<int> d_obj(nb), d_mor(nbm);
  for (int b = 0; b < nb; ++b) d_obj[b] = out.lift.objects[b].first;
  for (int m = 0; m < nbm; ++m) d_mor[m] = out.lift.reps[m].first;
  out.d = Functor("Dproj", bptr, base.alg, d_obj, d_mor);
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count() && ok; ++a)
      if (d_obj[out.lift.ifun.obj(a)] != a) {
        ok = false;
        w = alg.object_name(a);
      }
    for (int phi = 0; phi < alg.morphism_count() && ok; ++phi)
      if (d_mor[out.lift.ifun.mor(phi)] != phi) {
        ok = false;
        w = alg.morphism_name(phi);
      }
    r.add("projection-after-embedding-identity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < ycat.object_count() && ok; ++yo)
      if (d_obj[out.lift.stilde.obj(yo)] != base.s.obj(cor.e.obj(yo))) {
        ok = false;
        w = ycat.object_name(yo);
      }
    for (int f = 0; f < ycat.morphism_count() && ok; ++f)
      if (d_mor[out.lift.stilde.mor(f)] != base.s.mor(cor.e.mor(f))) {
        ok = false;
        w = ycat.morphism_name(f);
      }
    r.add("projection-of-canonical-pairs", ok, w);
  }
  out.rho.assign(nb, -1);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, p] = out.lift.objects[b];
      int idb = out.lift.ifun.obj(a);
      for (int m : bcat.hom(b, idb))
        if (out.lift.reps[m].second == p) {
          out.rho[b] = m;
          break;
        }
      if (out.rho[b] < 0)
        throw TheoremViolation("no unit morphism at " + bcat.object_name(b));
      if (out.lift.reps[out.rho[b]].first != alg.identity(a)) {
        ok = false;
        w = bcat.object_name(b);
      }
    }
    r.add("unit-is-trivial-pair", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count(); ++a)
      if (out.rho[out.lift.ifun.obj(a)] !=
          bcat.identity(out.lift.ifun.obj(a))) {
        ok = false;
        w = alg.object_name(a);
        break;
      }
    r.add("unit-identity-on-embedded", ok, w);
  }
  {
    Functor idf = Functor::compose("IDproj", out.lift.ifun, out.d);
    Report nat = check_nat_trans(Functor::identity(bcat), idf, out.rho);
    r.add("unit-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int a2 = 0; a2 < alg.object_count() && ok; ++a2)
        for (int h : bcat.hom(b, out.lift.ifun.obj(a2))) {
          int count = 0;
          for (int psi : alg.hom(d_obj[b], a2))
            if (bcat.compose(out.lift.ifun.mor(psi), out.rho[b]) == h) ++count;
          if (count != 1) {
            ok = false;
            w = bcat.morphism_name(h) + " factors " + std::to_string(count) +
                " ways";
            break;
          }
        }
    r.add("unit-universal", ok, w);
  }
  out.beta.assign(nb, -1);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, p] = out.lift.objects[b];
      int yo = ycat.cod(p);
      int eyamb = cor.x.objs[cor.e.obj(yo)];
      int taamb = cor.x.objs[base.t.obj(a)];
      int count = 0;
      for (int cand : ycat.hom(eyamb, taamb))
        if (ycat.compose(p, cand) == cor.pi[yo]) {
          if (count == 0) out.beta[b] = cand;
          ++count;
        }
      if (out.beta[b] < 0)
        throw TheoremViolation("no factorisation of the counit at " +
                               bcat.object_name(b));
      if (count != 1) {
        ok = false;
        w = bcat.object_name(b);
      }
    }
    r.add("counit-factorisation-unique", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (!ycat.is_iso(out.beta[b])) {
        ok = false;
        w = bcat.object_name(b);
        break;
      }
    r.add("counit-factorisation-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < ycat.object_count(); ++yo)
      if (out.beta[out.lift.stilde.obj(yo)] !=
          cor.x.mors[base.eta.at(cor.e.obj(yo))]) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    r.add("factorisation-at-canonical-pairs-is-unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, p] = out.lift.objects[b];
      int bx = cor.x.mor_in(out.beta[b]);
      if (bx < 0 ||
          alg.compose(base.s.mor(bx), base.eps.at(a)) !=
              out.lift.reps[out.lift.etilde[b]].first) {
        ok = false;
        w = bcat.object_name(b);
        break;
      }
    }
    r.add("factorisation-dual-recovers-comparison", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < ycat.object_count(); ++yo) {
      int exo = cor.e.obj(yo);
      if (bcat.compose(out.lift.gamma[exo], out.rho[out.lift.stilde.obj(yo)]) !=
          out.lift.stilde.mor(cor.pi[yo])) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    }
    r.add("unit-comparison-counit-compatibility", ok, w);
  }
  return out;
}

ReflectiveLift lift_left(const DualAdjunction& base, const Reflection& refl) {
  ReflectiveLift out;
  LiftedDuality& L = out.lift;
  Report& r = L.checks;
  const FinCat& alg = *base.alg;
  const FinCat& ycat = refl.ycat;
  const Subcategory& x = refl.x;
  r.subject = "lifted duality over " + ycat.name();
  if (!refl.checks.all_pass())
    throw ValidationError("reflection data invalid: " +
                          refl.checks.first_failure());
  if (!base.sp->same_structure(x.cat))
    throw ValidationError(
        "point side of the base duality must match the subcategory");
  auto ta_ambient = [&](int a) { return x.objs[base.t.obj(a)]; };
  auto tmor_ambient = [&](int phi) { return x.mors[base.t.mor(phi)]; };

  std::vector<int> members = reflection_class(refl);
  std::set<int> memset(members.begin(), members.end());
  r.add("reflection-class-size", !members.empty(),
        std::to_string(members.size()));
  const int nyo = ycat.object_count();
  L.cover_choice = refl.iota;

  std::vector<int> ey(nyo), jpart(nyo);
  for (int yo = 0; yo < nyo; ++yo) {
    ey[yo] = refl.e.obj(yo);
    jpart[yo] = ycat.compose(x.mors[base.eta.at(ey[yo])], refl.iota[yo]);
    if (!memset.count(jpart[yo]))
      throw TheoremViolation(
          "reflection class not closed under unit postcomposition at " +
          ycat.object_name(yo));
  }

  std::map<std::pair<int, int>, int> oindex;
  for (int a = 0; a < alg.object_count(); ++a)
    for (int j : memset)
      if (ycat.cod(j) == ta_ambient(a)) {
        oindex[{a, j}] = static_cast<int>(L.objects.size());
        L.objects.push_back({a, j});
      }
  const int nb = static_cast<int>(L.objects.size());

  std::vector<FinCat::Mor> bmors;
  std::map<std::tuple<int, int, int>, int> by_f;
  for (int i = 0; i < nb; ++i) {
    auto [a1, j1] = L.objects[i];
    int y1 = ycat.dom(j1);
    for (int k = 0; k < nb; ++k) {
      auto [a2, j2] = L.objects[k];
      int y2 = ycat.dom(j2);
      for (int f : ycat.hom(y2, y1)) {
        int count = 0, the_phi = -1;
        for (int phi : alg.hom(a1, a2))
          if (ycat.compose(tmor_ambient(phi), j2) == ycat.compose(j1, f)) {
            if (count == 0) the_phi = phi;
            ++count;
          }
        if (count == 0) continue;
        if (count > 1)
          throw TheoremViolation(
              "first leg not determined by the second leg between " +
              ycat.object_name(y2) + " and " + ycat.object_name(y1));
        std::ostringstream nm;
        nm << "(" << alg.morphism_name(the_phi) << ","
           << ycat.morphism_name(f) << "):" << i << ":" << k;
        by_f[{i, k, f}] = static_cast<int>(bmors.size());
        bmors.push_back({nm.str(), i, k});
        L.reps.push_back({the_phi, f});
        L.class_size.push_back(1);
      }
    }
  }
  const int nbm = static_cast<int>(bmors.size());

  std::vector<int> bids(nb, -1);
  for (int i = 0; i < nb; ++i) {
    auto it = by_f.find({i, i, ycat.identity(ycat.dom(L.objects[i].second))});
    if (it == by_f.end())
      throw TheoremViolation("identity pair missing at pair object " +
                             std::to_string(i));
    bids[i] = it->second;
  }
  std::vector<std::vector<int>> bcomp(nbm, std::vector<int>(nbm, -1));
  for (int m2 = 0; m2 < nbm; ++m2)
    for (int m1 = 0; m1 < nbm; ++m1) {
      if (bmors[m2].dom != bmors[m1].cod) continue;
      int i = bmors[m1].dom, k = bmors[m2].cod;
      int phi = alg.compose(L.reps[m2].first, L.reps[m1].first);
      int f = ycat.compose(L.reps[m1].second, L.reps[m2].second);
      auto [ai, ji] = L.objects[i];
      auto [ak, jk] = L.objects[k];
      if (ycat.compose(tmor_ambient(phi), jk) != ycat.compose(ji, f))
        throw TheoremViolation("composite pair violates the defining square");
      auto it = by_f.find({i, k, f});
      if (it == by_f.end())
        throw TheoremViolation("composite escaped the pair category");
      if (L.reps[it->second].first != phi)
        throw TheoremViolation("composite first leg mismatch");
      bcomp[m2][m1] = it->second;
    }
  std::vector<std::string> onames;
  for (auto [a, j] : L.objects)
    onames.push_back("(" + alg.object_name(a) + "," + ycat.morphism_name(j) +
                     ")");
  L.bcat = FinCat::from_tables("D(" + ycat.name() + ")", std::move(onames),
                               std::move(bmors), std::move(bcomp),
                               std::move(bids));

  auto bptr = std::make_shared<const FinCat>(L.bcat);
  auto bop = std::make_shared<const FinCat>(L.bcat.opposite());
  auto yptr = std::make_shared<const FinCat>(ycat);
  auto yop = std::make_shared<const FinCat>(ycat.opposite());

  std::vector<int> tt_obj(nb), tt_mor(nbm);
  for (int b = 0; b < nb; ++b) tt_obj[b] = ycat.dom(L.objects[b].second);
  for (int m = 0; m < nbm; ++m) tt_mor[m] = L.reps[m].second;
  L.ttilde = Functor("Ttilde", bop, yptr, tt_obj, tt_mor);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        std::set<int> seen;
        for (int m : L.bcat.hom(b, b2))
          if (!seen.insert(tt_mor[m]).second) {
            ok = false;
            w = L.bcat.morphism_name(m);
            break;
          }
      }
    r.add("lift-dual-faithful", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int b2 = 0; b2 < nb && ok; ++b2) {
        std::set<int> seen;
        for (int m : L.bcat.hom(b, b2)) seen.insert(tt_mor[m]);
        for (int f : ycat.hom(tt_obj[b2], tt_obj[b]))
          if (!seen.count(f)) {
            ok = false;
            w = ycat.morphism_name(f);
            break;
          }
      }
    r.add("lift-dual-full", ok, w);
  }

  std::vector<int> st_obj(nyo), st_mor(ycat.morphism_count());
  for (int yo = 0; yo < nyo; ++yo) {
    auto it = oindex.find({base.s.obj(ey[yo]), jpart[yo]});
    if (it == oindex.end())
      throw TheoremViolation("canonical pair object missing for " +
                             ycat.object_name(yo));
    st_obj[yo] = it->second;
  }
  for (int f = 0; f < ycat.morphism_count(); ++f) {
    auto it = by_f.find({st_obj[ycat.cod(f)], st_obj[ycat.dom(f)], f});
    if (it == by_f.end())
      throw TheoremViolation("no lift of " + ycat.morphism_name(f) +
                             " between canonical pair objects");
    st_mor[f] = it->second;
  }
  L.stilde = Functor("Stilde", yop, bptr, st_obj, st_mor);
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo && ok; ++yo)
      if (tt_obj[st_obj[yo]] != yo) {
        ok = false;
        w = ycat.object_name(yo);
      }
    for (int f = 0; f < ycat.morphism_count() && ok; ++f)
      if (tt_mor[st_mor[f]] != f) {
        ok = false;
        w = ycat.morphism_name(f);
      }
    r.add("round-trip-identity-on-points", ok, w);
  }

  std::vector<int> i_obj(alg.object_count()), i_mor(alg.morphism_count());
  for (int a = 0; a < alg.object_count(); ++a) {
    auto it = oindex.find({a, ycat.identity(ta_ambient(a))});
    if (it == oindex.end())
      throw TheoremViolation("embedded pair object missing for " +
                             alg.object_name(a));
    i_obj[a] = it->second;
  }
  for (int phi = 0; phi < alg.morphism_count(); ++phi) {
    auto it = by_f.find(
        {i_obj[alg.dom(phi)], i_obj[alg.cod(phi)], tmor_ambient(phi)});
    if (it == by_f.end())
      throw TheoremViolation("embedded pair morphism missing for " +
                             alg.morphism_name(phi));
    i_mor[phi] = it->second;
  }
  L.ifun = Functor("Ifun", base.alg, bptr, i_obj, i_mor);
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count() && ok; ++a)
      for (int a2 = 0; a2 < alg.object_count() && ok; ++a2) {
        std::set<int> seen;
        for (int phi : alg.hom(a, a2))
          if (!seen.insert(i_mor[phi]).second) {
            ok = false;
            w = alg.morphism_name(phi);
            break;
          }
        if (!ok) break;
        for (int m : L.bcat.hom(i_obj[a], i_obj[a2]))
          if (!seen.count(m)) {
            ok = false;
            w = L.bcat.morphism_name(m);
            break;
          }
      }
    r.add("embedding-full-and-faithful", ok, w);
  }

  L.etilde.assign(nb, -1);
  for (int b = 0; b < nb; ++b) {
    int yo = ycat.dom(L.objects[b].second);
    auto it = by_f.find({b, st_obj[yo], ycat.identity(yo)});
    if (it == by_f.end())
      throw TheoremViolation("no comparison morphism at pair object " +
                             L.bcat.object_name(b));
    L.etilde[b] = it->second;
  }
  {
    std::vector<int> stt_obj(nb), stt_mor(nbm);
    for (int b = 0; b < nb; ++b) stt_obj[b] = st_obj[tt_obj[b]];
    for (int m = 0; m < nbm; ++m) stt_mor[m] = st_mor[tt_mor[m]];
    Functor stt("StildeTtilde", bptr, bptr, stt_obj, stt_mor);
    Report nat = check_nat_trans(Functor::identity(L.bcat), stt, L.etilde);
    r.add("comparison-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (!L.bcat.is_iso(L.etilde[b])) {
        ok = false;
        w = L.bcat.object_name(b);
        break;
      }
    r.add("comparison-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (tt_mor[L.etilde[b]] != ycat.identity(tt_obj[b])) {
        ok = false;
        w = L.bcat.object_name(b);
        break;
      }
    r.add("comparison-projects-to-identity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo; ++yo)
      if (L.etilde[st_obj[yo]] != L.bcat.identity(st_obj[yo])) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    r.add("comparison-trivial-on-canonical-pairs", ok, w);
  }

  const int nxo = x.cat.object_count();
  L.gamma.assign(nxo, -1);
  for (int xo = 0; xo < nxo; ++xo) {
    int yo = x.objs[xo];
    auto it = by_f.find(
        {i_obj[base.s.obj(xo)], st_obj[yo], x.mors[base.eta.at(xo)]});
    if (it == by_f.end())
      throw TheoremViolation("no canonical comparison at " +
                             x.cat.object_name(xo));
    L.gamma[xo] = it->second;
  }
  {
    auto xop = std::make_shared<const FinCat>(x.cat.opposite());
    std::vector<int> is_obj(nxo), is_mor(x.cat.morphism_count());
    for (int o = 0; o < nxo; ++o) is_obj[o] = i_obj[base.s.obj(o)];
    for (int m = 0; m < x.cat.morphism_count(); ++m)
      is_mor[m] = i_mor[base.s.mor(m)];
    Functor isf("IS", xop, bptr, is_obj, is_mor);
    std::vector<int> sj_obj(nxo), sj_mor(x.cat.morphism_count());
    for (int o = 0; o < nxo; ++o) sj_obj[o] = st_obj[x.objs[o]];
    for (int m = 0; m < x.cat.morphism_count(); ++m)
      sj_mor[m] = st_mor[x.mors[m]];
    Functor sjf("StildeJ", xop, bptr, sj_obj, sj_mor);
    Report nat = check_nat_trans(isf, sjf, L.gamma);
    r.add("unit-comparison-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < nxo; ++xo)
      if (!L.bcat.is_iso(L.gamma[xo])) {
        ok = false;
        w = x.cat.object_name(xo);
        break;
      }
    r.add("unit-comparison-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int xo = 0; xo < nxo; ++xo)
      if (tt_mor[L.gamma[xo]] != x.mors[base.eta.at(xo)]) {
        ok = false;
        w = x.cat.object_name(xo);
        break;
      }
    r.add("unit-comparison-projects-to-unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count(); ++a)
      if (L.bcat.compose(L.gamma[base.t.obj(a)], i_mor[base.eps.at(a)]) !=
          L.etilde[i_obj[a]]) {
        ok = false;
        w = alg.object_name(a);
        break;
      }
    r.add("unit-counit-compatibility", ok, w);
  }

  Report& rr = out.checks;
  rr.subject = "reflective lift over " + ycat.name();
  std::vector<int> d_obj(nb), d_mor(nbm);
  for (int b = 0; b < nb; ++b) d_obj[b] = L.objects[b].first;
  for (int m = 0; m < nbm; ++m) d_mor[m] = L.reps[m].first;
  out.d = Functor("Dproj", bptr, base.alg, d_obj, d_mor);
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count() && ok; ++a)
      if (d_obj[L.ifun.obj(a)] != a) {
        ok = false;
        w = alg.object_name(a);
      }
    for (int phi = 0; phi < alg.morphism_count() && ok; ++phi)
      if (d_mor[L.ifun.mor(phi)] != phi) {
        ok = false;
        w = alg.morphism_name(phi);
      }
    rr.add("projection-after-embedding-identity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo && ok; ++yo)
      if (d_obj[L.stilde.obj(yo)] != base.s.obj(refl.e.obj(yo))) {
        ok = false;
        w = ycat.object_name(yo);
      }
    for (int f = 0; f < ycat.morphism_count() && ok; ++f)
      if (d_mor[L.stilde.mor(f)] != base.s.mor(refl.e.mor(f))) {
        ok = false;
        w = ycat.morphism_name(f);
      }
    rr.add("projection-of-canonical-pairs", ok, w);
  }
  out.rho.assign(nb, -1);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, j] = L.objects[b];
      int idb = L.ifun.obj(a);
      for (int m : L.bcat.hom(idb, b))
        if (L.reps[m].second == j) {
          out.rho[b] = m;
          break;
        }
      if (out.rho[b] < 0)
        throw TheoremViolation("no counit morphism at " +
                               L.bcat.object_name(b));
      if (L.reps[out.rho[b]].first != alg.identity(a)) {
        ok = false;
        w = L.bcat.object_name(b);
      }
    }
    rr.add("counit-is-trivial-pair", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < alg.object_count(); ++a)
      if (out.rho[L.ifun.obj(a)] != L.bcat.identity(L.ifun.obj(a))) {
        ok = false;
        w = alg.object_name(a);
        break;
      }
    rr.add("counit-identity-on-embedded", ok, w);
  }
  {
    Functor idf = Functor::compose("IDproj", L.ifun, out.d);
    Report nat = check_nat_trans(idf, Functor::identity(L.bcat), out.rho);
    rr.add("counit-natural", nat.all_pass(), nat.first_failure());
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb && ok; ++b)
      for (int a2 = 0; a2 < alg.object_count() && ok; ++a2)
        for (int h : L.bcat.hom(L.ifun.obj(a2), b)) {
          int count = 0;
          for (int psi : alg.hom(a2, d_obj[b]))
            if (L.bcat.compose(out.rho[b], L.ifun.mor(psi)) == h) ++count;
          if (count != 1) {
            ok = false;
            w = L.bcat.morphism_name(h) + " factors " + std::to_string(count) +
                " ways";
            break;
          }
        }
    rr.add("counit-universal", ok, w);
  }
  out.beta.assign(nb, -1);
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, j] = L.objects[b];
      int yo = ycat.dom(j);
      int eyamb = x.objs[refl.e.obj(yo)];
      int taamb = ta_ambient(a);
      int count = 0;
      for (int cand : ycat.hom(taamb, eyamb))
        if (ycat.compose(cand, j) == refl.iota[yo]) {
          if (count == 0) out.beta[b] = cand;
          ++count;
        }
      if (out.beta[b] < 0)
        throw TheoremViolation("no factorisation of the unit at " +
                               L.bcat.object_name(b));
      if (count != 1) {
        ok = false;
        w = L.bcat.object_name(b);
      }
    }
    rr.add("unit-factorisation-unique", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b)
      if (!ycat.is_iso(out.beta[b])) {
        ok = false;
        w = L.bcat.object_name(b);
        break;
      }
    rr.add("unit-factorisation-iso", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo; ++yo) {
      int eta_m = base.eta.at(ey[yo]);
      int eta_inv = x.cat.inverse(eta_m);
      if (eta_inv < 0 || out.beta[L.stilde.obj(yo)] != x.mors[eta_inv]) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    }
    rr.add("factorisation-at-canonical-pairs-is-unit-inverse", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int b = 0; b < nb; ++b) {
      auto [a, j] = L.objects[b];
      int binv = ycat.inverse(out.beta[b]);
      int bx = binv >= 0 ? x.mor_in(binv) : -1;
      if (bx < 0 ||
          alg.compose(base.s.mor(bx), base.eps.at(a)) !=
              L.reps[L.etilde[b]].first) {
        ok = false;
        w = L.bcat.object_name(b);
        break;
      }
    }
    rr.add("factorisation-dual-recovers-comparison", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int yo = 0; yo < nyo; ++yo) {
      if (out.rho[L.stilde.obj(yo)] !=
          L.bcat.compose(L.stilde.mor(refl.iota[yo]), L.gamma[ey[yo]])) {
        ok = false;
        w = ycat.object_name(yo);
        break;
      }
    }
    rr.add("unit-comparison-unit-compatibility", ok, w);
  }
  return out;
}

}  // namespace dualkit
