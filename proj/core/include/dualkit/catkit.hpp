#ifndef DUALKIT_CATKIT_HPP
#define DUALKIT_CATKIT_HPP

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dualkit/report.hpp"

namespace dualkit {

// A finite category with an explicit composition table.  Objects and
// morphisms are indexed; names are unique handles for lookup and printing.
// compose(g, f) means g after f.
class FinCat {
 public:
  struct Mor {
    std::string name;
    int dom = -1;
    int cod = -1;
    bool operator==(const Mor&) const = default;
  };

  // Hand-assembly with names; identities not declared are synthesised as
  // "1_<object>" and their composites filled in automatically.
  class Builder {
   public:
    Builder& object(const std::string& name);
    Builder& morphism(const std::string& name, const std::string& dom,
                      const std::string& cod);
    Builder& identity(const std::string& obj, const std::string& mor);
    Builder& compose(const std::string& g, const std::string& f,
                     const std::string& gf);
    FinCat build(std::string cat_name) const;

   private:
    std::vector<std::string> objects_;
    std::vector<Mor> mors_;  // dom/cod as object indices
    std::vector<std::pair<int, int>> ids_;  // (object, morphism)
    std::vector<std::array<int, 3>> comp_;  // (g, f, gf) by morphism index
    friend class FinCat;
  };

  FinCat() = default;  // the empty category

  // Raw assembly for generated categories; identity_of holds one morphism
  // index per object, comp is a full morphism-by-morphism table with -1 on
  // non-composable pairs.  Validates everything.
  static FinCat from_tables(std::string name, std::vector<std::string> objects,
                            std::vector<Mor> morphisms,
                            std::vector<std::vector<int>> comp,
                            std::vector<int> identity_of);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mors_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  const std::string& morphism_name(int m) const { return mors_[m].name; }
  int object_index(const std::string& name) const;    // throws when missing
  int morphism_index(const std::string& name) const;  // throws when missing

  int dom(int m) const { return mors_[m].dom; }
  int cod(int m) const { return mors_[m].cod; }
  int identity(int obj) const { return ids_[obj]; }
  bool is_identity(int m) const;
  bool composable(int g, int f) const { return dom(g) == cod(f); }
  int compose(int g, int f) const;  // throws on non-composable pairs

  std::vector<int> hom(int a, int b) const;  // ascending indices
  int inverse(int m) const;                  // -1 when none
  bool is_iso(int m) const { return inverse(m) >= 0; }

  FinCat opposite() const;  // same names and indices, arrows flipped

  Report validate() const;
  bool operator==(const FinCat&) const = default;
  bool same_structure(const FinCat& o) const;  // everything except the name

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> ids_;
};

// A full subcategory on a chosen object set, with index maps back into the
// ambient category.
struct Subcategory {
  FinCat cat;
  std::vector<int> objs;  // subcategory object -> ambient object
  std::vector<int> mors;  // subcategory morphism -> ambient morphism
  int obj_in(int ambient_obj) const;  // -1 when outside
  int mor_in(int ambient_mor) const;
};
Subcategory full_subcategory(const FinCat& y, const std::vector<int>& yobjs,
                             std::string name);

Report check_functor(const FinCat& dom, const FinCat& cod,
                     const std::vector<int>& obj_map,
                     const std::vector<int>& mor_map);

// A functor stored as index tables; validated at construction.
class Functor {
 public:
  Functor();  // between empty categories
  Functor(std::string name, FinCat dom, FinCat cod, std::vector<int> obj_map,
          std::vector<int> mor_map);
  Functor(std::string name, std::shared_ptr<const FinCat> dom,
          std::shared_ptr<const FinCat> cod, std::vector<int> obj_map,
          std::vector<int> mor_map);

  static Functor identity(const FinCat& c);
  static Functor compose(std::string name, const Functor& g, const Functor& f);

  const std::string& name() const { return name_; }
  const FinCat& dom() const { return *dom_; }
  const FinCat& cod() const { return *cod_; }
  std::shared_ptr<const FinCat> dom_ptr() const { return dom_; }
  std::shared_ptr<const FinCat> cod_ptr() const { return cod_; }
  int obj(int o) const { return obj_map_[o]; }
  int mor(int m) const { return mor_map_[m]; }
  const std::vector<int>& obj_map() const { return obj_map_; }
  const std::vector<int>& mor_map() const { return mor_map_; }

  bool same_tables(const Functor& o) const {
    return obj_map_ == o.obj_map_ && mor_map_ == o.mor_map_;
  }

 private:
  std::string name_;
  std::shared_ptr<const FinCat> dom_, cod_;
  std::vector<int> obj_map_, mor_map_;
};

Report check_nat_trans(const Functor& f, const Functor& g,
                       const std::vector<int>& components);

// A natural transformation, one component morphism per object of the
// common domain; validated at construction.
class NatTrans {
 public:
  NatTrans();
  NatTrans(std::string name, Functor f, Functor g, std::vector<int> components);

  const std::string& name() const { return name_; }
  const Functor& from() const { return f_; }
  const Functor& to() const { return g_; }
  int at(int obj) const { return comps_[obj]; }
  const std::vector<int>& components() const { return comps_; }
  bool is_iso() const;

 private:
  std::string name_;
  Functor f_, g_;
  std::vector<int> comps_;
};

// A dual adjunction (here always an equivalence) presented concretely:
// contravariant legs stored as covariant functors out of opposites, with
// the two units as endo-transformations on each side.
struct DualAdjunction {
  std::string name;
  std::shared_ptr<const FinCat> alg;  // A
  std::shared_ptr<const FinCat> sp;   // X
  Functor s;    // from sp.opposite() to alg
  Functor t;    // from alg.opposite() to sp
  Functor ts;   // endofunctor on sp
  Functor st;   // endofunctor on alg
  NatTrans eta;  // Id_sp => ts
  NatTrans eps;  // Id_alg => st
  Report checks;
};
DualAdjunction make_dual_adjunction(std::string name, FinCat alg, FinCat sp,
                                    std::vector<int> s_obj,
                                    std::vector<int> s_mor,
                                    std::vector<int> t_obj,
                                    std::vector<int> t_mor,
                                    std::vector<int> eta_comps,
                                    std::vector<int> eps_comps);

// Covering-class conditions for a morphism class against a full
// subcategory: identities of subcategory objects belong to the class,
// subcategory objects lift against class members, and every ambient object
// is covered from the subcategory.
Report check_covering_class(const FinCat& y, const Subcategory& x,
                            const std::vector<int>& members);

// Close a class under precomposition with isomorphisms, keeping only
// members whose domain lies in the subcategory.
std::vector<int> bar_closure(const FinCat& y, const Subcategory& x,
                             const std::vector<int>& members);

// A coreflective embedding: e fixes the subcategory and pi is the counit,
// with every map from a subcategory object factoring uniquely through it.
struct Coreflection {
  FinCat ycat;
  Subcategory x;
  Functor e;            // ycat -> x.cat
  std::vector<int> pi;  // per ambient object: J(E(Y)) -> Y
  Report checks;
};
Coreflection make_coreflection(const FinCat& ycat,
                               const std::vector<int>& xobjs,
                               const std::vector<int>& e_obj,
                               const std::vector<int>& e_mor,
                               const std::vector<int>& pi);

// Mirror image: iota is the unit Y -> J(E(Y)).
struct Reflection {
  FinCat ycat;
  Subcategory x;
  Functor e;
  std::vector<int> iota;
  Report checks;
};
Reflection make_reflection(const FinCat& ycat, const std::vector<int>& xobjs,
                           const std::vector<int>& e_obj,
                           const std::vector<int>& e_mor,
                           const std::vector<int>& iota);

// Coreflections precomposed with isomorphisms; the canonical covering class
// of a coreflective embedding.
std::vector<int> coreflection_class(const Coreflection& c);

// Reflections postcomposed with isomorphisms.
std::vector<int> reflection_class(const Reflection& r);

// The pair category over a covering class, its quotient by the base-leg
// relation, and the lifted dual equivalence with its canonical data.
struct LiftedDuality {
  FinCat bcat;
  std::vector<std::pair<int, int>> objects;  // (alg object, ambient morphism)
  std::vector<std::pair<int, int>> reps;     // per morphism: (alg leg, base leg)
  std::vector<int> class_size;               // collapsed raw pairs per morphism
  std::vector<int> cover_choice;             // per ambient object
  Functor ttilde;  // from bcat.opposite() to ycat
  Functor stilde;  // from ycat.opposite() to bcat
  Functor ifun;    // alg -> bcat
  std::vector<int> etilde;  // per bcat object
  std::vector<int> gamma;   // per subcategory object
  Report checks;
};

// Right lifting over an arbitrary covering class.  When choice is nonempty
// it fixes the covering morphism per ambient object (subcategory objects
// must get identities either way).
LiftedDuality lift_right(const DualAdjunction& base, const FinCat& ycat,
                         const Subcategory& x,
                         const std::vector<int>& covering,
                         const std::vector<int>& choice = {});

// Right lifting along a coreflective embedding: quotient is discrete and
// the embedded algebra side acquires a reflector with unit rho, connected
// to the counit pi by the iso beta.
struct CoreflectiveLift {
  LiftedDuality lift;
  Functor d;  // bcat -> alg
  std::vector<int> rho;   // per bcat object: b -> ID b
  std::vector<int> beta;  // per bcat object: ambient E(Y) -> T(A)
  Report checks;
};
CoreflectiveLift lift_right_coreflective(const DualAdjunction& base,
                                         const Coreflection& cor);

// Left lifting along a reflective embedding; objects pair an algebra object
// with a reflection arrow into its dual, and the algebra side acquires a
// coreflector with counit rho.
struct ReflectiveLift {
  LiftedDuality lift;
  Functor d;
  std::vector<int> rho;   // per bcat object: ID b -> b
  std::vector<int> beta;  // per bcat object: ambient T(A) -> E(Y)
  Report checks;
};
ReflectiveLift lift_left(const DualAdjunction& base, const Reflection& refl);

}  // namespace dualkit

#endif
