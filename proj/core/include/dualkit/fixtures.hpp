#ifndef DUALKIT_FIXTURES_HPP
#define DUALKIT_FIXTURES_HPP

#include <string>
#include <vector>

#include "dualkit/catkit.hpp"
#include "dualkit/finboole.hpp"

namespace dualkit {

// Walking split idempotent: p.s = 1 on the small object, e = s.p idempotent.
FinCat split_retraction_category();

// Skeleton of finite sets with sizes in [min_size, max_size]; each morphism
// carries its table of images.
struct SetSkeleton {
  FinCat cat;
  std::vector<int> sizes;                // per object
  std::vector<std::vector<int>> tables;  // per morphism
  int object_of_size(int n) const;       // -1 when absent
  int morphism_of(int dom_obj, int cod_obj,
                  const std::vector<int>& table) const;  // -1 when absent
};
SetSkeleton make_set_skeleton(int min_size, int max_size);

// Skeleton of finite Boolean algebras with 1..max_atoms atoms and all
// structure maps between them; each morphism carries its atom table.
struct BoolSkeleton {
  FinCat cat;
  std::vector<FinBoolAlg> algebras;  // per object
  std::vector<BoolHom> homs;         // per morphism
  int morphism_of(int dom_obj, int cod_obj,
                  const std::vector<int>& atom_map) const;
};
BoolSkeleton make_bool_skeleton(int max_atoms);

// The duality a category trivially carries against its own opposite, with
// identity tables everywhere.
DualAdjunction identity_self_duality(std::string name, const FinCat& sp);

// Finite sets of size 1..max_atoms against Boolean algebras of matching
// size: a set dualises to its power-set algebra via preimage, an algebra to
// its atom set, with identity unit and counit in skeletal indexing.
DualAdjunction power_set_duality(int max_atoms);

// Skeleton of small reflexive graphs: the empty one, a point, two loose
// loops, and the complete pair.  Carries the edge-dropping coreflection onto
// loops-only graphs and the edge-adding reflection onto complete ones,
// together with the self-dualities of both subcategories.
struct GraphFixture {
  FinCat ycat;
  std::vector<int> vertex_count;         // per object
  std::vector<std::vector<int>> tables;  // per morphism: vertex images
  Coreflection coreflection;
  Reflection reflection;
  DualAdjunction corefl_base;
  DualAdjunction refl_base;
};
GraphFixture graph_fixture();

// Sets of size one and two with every surjection as covering class; the
// induced pair category collapses a genuinely non-trivial quotient.
struct SurjectionFixture {
  FinCat ycat;
  Subcategory x;
  std::vector<int> covering;
  DualAdjunction base;
};
SurjectionFixture surjection_fixture();

}  // namespace dualkit

#endif
