#include "dualkit/fixtures.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "dualkit/combinatorics.hpp"

namespace dualkit {

FinCat split_retraction_category() {
  FinCat::Builder b;
  b.object("X").object("Y");
  b.morphism("1_X", "X", "X").morphism("1_Y", "Y", "Y");
  b.identity("X", "1_X").identity("Y", "1_Y");
  b.morphism("p", "X", "Y").morphism("s", "Y", "X").morphism("e", "X", "X");
  b.compose("p", "s", "1_Y");
  b.compose("s", "p", "e");
  b.compose("p", "e", "p");
  b.compose("e", "s", "s");
  b.compose("e", "e", "e");
  return b.build("split-retraction");
}

namespace {

std::string table_name(const std::string& dom, const std::string& cod,
                       const std::vector<int>& t) {
  std::ostringstream nm;
  nm << dom << ">" << cod << ":";
  for (int v : t) nm << v;
  return nm.str();
}

}  // namespace

int SetSkeleton::object_of_size(int n) const {
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] == n) return static_cast<int>(i);
  return -1;
}

int SetSkeleton::morphism_of(int dom_obj, int cod_obj,
                             const std::vector<int>& table) const {
  for (int m = 0; m < cat.morphism_count(); ++m)
    if (cat.dom(m) == dom_obj && cat.cod(m) == cod_obj && tables[m] == table)
      return m;
  return -1;
}

SetSkeleton make_set_skeleton(int min_size, int max_size) {
  if (min_size < 0 || max_size < min_size || max_size > 9)
    throw ValidationError("set skeleton sizes must satisfy 0 <= min <= max <= 9");
  SetSkeleton sk;
  std::vector<std::string> onames;
  for (int n = min_size; n <= max_size; ++n) {
    sk.sizes.push_back(n);
    onames.push_back("S" + std::to_string(n));
  }
  const int no = static_cast<int>(sk.sizes.size());
  std::vector<FinCat::Mor> mors;
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int d = 0; d < no; ++d)
    for (int c = 0; c < no; ++c)
      for (auto& t : all_functions(sk.sizes[d], sk.sizes[c])) {
        index[{d, c, t}] = static_cast<int>(mors.size());
        mors.push_back({table_name(onames[d], onames[c], t), d, c});
        sk.tables.push_back(t);
      }
  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (mors[g].dom != mors[f].cod) continue;
      std::vector<int> t(sk.tables[f].size());
      for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = sk.tables[g][sk.tables[f][i]];
      comp[g][f] = index.at({mors[f].dom, mors[g].cod, t});
    }
  std::vector<int> ids;
  for (int o = 0; o < no; ++o) {
    std::vector<int> t(sk.sizes[o]);
    for (int i = 0; i < sk.sizes[o]; ++i) t[i] = i;
    ids.push_back(index.at({o, o, t}));
  }
  sk.cat = FinCat::from_tables(
      "Set(" + std::to_string(min_size) + ".." + std::to_string(max_size) + ")",
      std::move(onames), std::move(mors), std::move(comp), std::move(ids));
  return sk;
}

int BoolSkeleton::morphism_of(int dom_obj, int cod_obj,
                              const std::vector<int>& atom_map) const {
  for (int m = 0; m < cat.morphism_count(); ++m)
    if (cat.dom(m) == dom_obj && cat.cod(m) == cod_obj &&
        homs[m].atom_map() == atom_map)
      return m;
  return -1;
}

BoolSkeleton make_bool_skeleton(int max_atoms) {
  if (max_atoms < 1 || max_atoms > 9)
    throw ValidationError("algebra skeleton needs 1 <= max_atoms <= 9");
  BoolSkeleton sk;
  std::vector<std::string> onames;
  for (int k = 1; k <= max_atoms; ++k) {
    onames.push_back("B" + std::to_string(k));
    sk.algebras.push_back(FinBoolAlg(onames.back(), k));
  }
  const int no = max_atoms;
  std::vector<FinCat::Mor> mors;
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int d = 0; d < no; ++d)
    for (int c = 0; c < no; ++c)
      for (auto& am : all_functions(sk.algebras[c].atom_count(),
                                    sk.algebras[d].atom_count())) {
        index[{d, c, am}] = static_cast<int>(mors.size());
        mors.push_back({table_name(onames[d], onames[c], am), d, c});
        sk.homs.push_back(BoolHom(sk.algebras[d], sk.algebras[c], am));
      }
  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (mors[g].dom != mors[f].cod) continue;
      const std::vector<int>& gf_am = sk.homs[g].atom_map();
      const std::vector<int>& f_am = sk.homs[f].atom_map();
      std::vector<int> t(gf_am.size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = f_am[gf_am[i]];
      comp[g][f] = index.at({mors[f].dom, mors[g].cod, t});
    }
  std::vector<int> ids;
  for (int o = 0; o < no; ++o) {
    std::vector<int> t(sk.algebras[o].atom_count());
    for (int i = 0; i < static_cast<int>(t.size()); ++i) t[i] = i;
    ids.push_back(index.at({o, o, t}));
  }
  sk.cat = FinCat::from_tables("Alg(1.." + std::to_string(max_atoms) + ")",
                               std::move(onames), std::move(mors),
                               std::move(comp), std::move(ids));
  return sk;
}

DualAdjunction identity_self_duality(std::string name, const FinCat& sp) {
  FinCat alg = sp.opposite();
  std::vector<int> io(sp.object_count()), im(sp.morphism_count());
  for (int o = 0; o < sp.object_count(); ++o) io[o] = o;
  for (int m = 0; m < sp.morphism_count(); ++m) im[m] = m;
  std::vector<int> eta(sp.object_count()), eps(sp.object_count());
  for (int o = 0; o < sp.object_count(); ++o) {
    eta[o] = sp.identity(o);
    eps[o] = sp.identity(o);
  }
  return make_dual_adjunction(std::move(name), std::move(alg), sp, io, im, io,
                              im, std::move(eta), std::move(eps));
}

DualAdjunction power_set_duality(int max_atoms) {
  SetSkeleton setsk = make_set_skeleton(1, max_atoms);
  BoolSkeleton boosk = make_bool_skeleton(max_atoms);
  const int no = setsk.cat.object_count();
  std::vector<int> s_obj(no), t_obj(no);
  for (int o = 0; o < no; ++o) {
    s_obj[o] = o;
    t_obj[o] = o;
  }
  std::vector<int> s_mor(setsk.cat.morphism_count());
  for (int m = 0; m < setsk.cat.morphism_count(); ++m) {
    int d = setsk.cat.dom(m), c = setsk.cat.cod(m);
    s_mor[m] = boosk.morphism_of(c, d, setsk.tables[m]);
    if (s_mor[m] < 0) throw TheoremViolation("preimage map missing");
  }
  std::vector<int> t_mor(boosk.cat.morphism_count());
  for (int m = 0; m < boosk.cat.morphism_count(); ++m) {
    int d = boosk.cat.dom(m), c = boosk.cat.cod(m);
    t_mor[m] = setsk.morphism_of(c, d, boosk.homs[m].atom_map());
    if (t_mor[m] < 0) throw TheoremViolation("atom map missing");
  }
  std::vector<int> eta(no), eps(no);
  for (int o = 0; o < no; ++o) {
    eta[o] = setsk.cat.identity(o);
    eps[o] = boosk.cat.identity(o);
  }
  return make_dual_adjunction("power-set(" + std::to_string(max_atoms) + ")",
                              boosk.cat, setsk.cat, std::move(s_obj),
                              std::move(s_mor), std::move(t_obj),
                              std::move(t_mor), std::move(eta), std::move(eps));
}

GraphFixture graph_fixture() {
  GraphFixture out;
  // vertex counts and adjacency (reflexive; only the off-diagonal matters)
  const std::vector<std::string> names = {"R0", "R1", "R2", "RK2"};
  const std::vector<int> verts = {0, 1, 2, 2};
  auto has_edge = [&](int g, int u, int v) {
    if (u == v) return true;
    return g == 3;  // only the complete pair has cross edges
  };
  out.vertex_count = verts;
  std::vector<FinCat::Mor> mors;
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int d = 0; d < 4; ++d)
    for (int c = 0; c < 4; ++c)
      for (auto& t : all_functions(verts[d], verts[c])) {
        bool hom = true;
        for (int u = 0; u < verts[d] && hom; ++u)
          for (int v = 0; v < verts[d] && hom; ++v)
            if (has_edge(d, u, v) && !has_edge(c, t[u], t[v])) hom = false;
        if (!hom) continue;
        index[{d, c, t}] = static_cast<int>(mors.size());
        mors.push_back({table_name(names[d], names[c], t), d, c});
        out.tables.push_back(t);
      }
  const int nm = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (mors[g].dom != mors[f].cod) continue;
      std::vector<int> t(out.tables[f].size());
      for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = out.tables[g][out.tables[f][i]];
      comp[g][f] = index.at({mors[f].dom, mors[g].cod, t});
    }
  std::vector<int> ids;
  for (int o = 0; o < 4; ++o) {
    std::vector<int> t(verts[o]);
    for (int i = 0; i < verts[o]; ++i) t[i] = i;
    ids.push_back(index.at({o, o, t}));
  }
  out.ycat = FinCat::from_tables("RGraph", names, std::move(mors),
                                 std::move(comp), std::move(ids));

  auto ambient_of = [&](int d, int c, const std::vector<int>& t) {
    auto it = index.find({d, c, t});
    if (it == index.end()) throw TheoremViolation("graph map missing");
    return it->second;
  };

  {
    std::vector<int> xobjs = {0, 1, 2};
    std::vector<int> target = {0, 1, 2, 2};  // ambient image objects
    Subcategory xx = full_subcategory(out.ycat, xobjs, "loops.pre");
    std::vector<int> e_obj(4), e_mor(out.ycat.morphism_count());
    for (int o = 0; o < 4; ++o) e_obj[o] = xx.obj_in(target[o]);
    for (int m = 0; m < out.ycat.morphism_count(); ++m)
      e_mor[m] = xx.mor_in(ambient_of(target[out.ycat.dom(m)],
                                      target[out.ycat.cod(m)], out.tables[m]));
    std::vector<int> pi(4);
    for (int o = 0; o < 3; ++o) pi[o] = out.ycat.identity(o);
    pi[3] = ambient_of(2, 3, {0, 1});
    out.coreflection = make_coreflection(out.ycat, xobjs, e_obj, e_mor, pi);
    out.corefl_base =
        identity_self_duality("loops-dual", out.coreflection.x.cat);
  }
  {
    std::vector<int> xobjs = {0, 1, 3};
    std::vector<int> target = {0, 1, 3, 3};
    Subcategory xx = full_subcategory(out.ycat, xobjs, "complete.pre");
    std::vector<int> e_obj(4), e_mor(out.ycat.morphism_count());
    for (int o = 0; o < 4; ++o) e_obj[o] = xx.obj_in(target[o]);
    for (int m = 0; m < out.ycat.morphism_count(); ++m)
      e_mor[m] = xx.mor_in(ambient_of(target[out.ycat.dom(m)],
                                      target[out.ycat.cod(m)], out.tables[m]));
    std::vector<int> iota(4);
    iota[0] = out.ycat.identity(0);
    iota[1] = out.ycat.identity(1);
    iota[2] = ambient_of(2, 3, {0, 1});
    iota[3] = out.ycat.identity(3);
    out.reflection = make_reflection(out.ycat, xobjs, e_obj, e_mor, iota);
    out.refl_base = identity_self_duality("complete-dual", out.reflection.x.cat);
  }
  return out;
}

SurjectionFixture surjection_fixture() {
  SurjectionFixture out;
  SetSkeleton sk = make_set_skeleton(1, 2);
  out.ycat = sk.cat;
  out.x = full_subcategory(out.ycat, {0, 1}, out.ycat.name() + ".all");
  for (int m = 0; m < out.ycat.morphism_count(); ++m)
    if (is_surjection(sk.tables[m], sk.sizes[out.ycat.cod(m)]))
      out.covering.push_back(m);
  out.base = identity_self_duality("pair-self-dual", out.x.cat);
  return out;
}

}  // namespace dualkit
