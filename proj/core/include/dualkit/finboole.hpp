#ifndef DUALKIT_FINBOOLE_HPP
#define DUALKIT_FINBOOLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dualkit/report.hpp"

namespace dualkit {

// An element of a finite Boolean algebra, stored as the set of atoms below it.
class AtomSet {
 public:
  constexpr AtomSet() = default;
  static constexpr AtomSet from_bits(std::uint32_t bits) { return AtomSet(bits); }
  static constexpr AtomSet single(int atom) { return AtomSet(1u << atom); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int atom) const { return (bits_ >> atom) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const;

  constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  constexpr AtomSet minus(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool meets(AtomSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr bool operator==(const AtomSet&) const = default;
  constexpr bool operator<(AtomSet o) const { return bits_ < o.bits_; }

  std::string to_string() const;  // "{0,2}", "{}" for the empty set

 private:
  explicit constexpr AtomSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Finite Boolean algebra with a fixed atom count; elements are atom sets.
// The degenerate one-element algebra (no atoms) is rejected.
class FinBoolAlg {
 public:
  FinBoolAlg(std::string name, int n_atoms);

  const std::string& name() const { return name_; }
  int atom_count() const { return n_atoms_; }
  int element_count() const { return 1 << n_atoms_; }

  AtomSet bot() const { return AtomSet(); }
  AtomSet top() const { return AtomSet::from_bits((1u << n_atoms_) - 1); }
  bool is_element(AtomSet a) const { return a.subset_of(top()); }

  AtomSet join(AtomSet a, AtomSet b) const { return a | b; }
  AtomSet meet(AtomSet a, AtomSet b) const { return a & b; }
  AtomSet complement(AtomSet a) const { return top().minus(a); }
  bool leq(AtomSet a, AtomSet b) const { return a.subset_of(b); }

  std::vector<AtomSet> elements() const;  // ascending bit order
  std::vector<AtomSet> atoms() const;

  bool same_shape(const FinBoolAlg& o) const { return n_atoms_ == o.n_atoms_; }

 private:
  std::string name_;
  int n_atoms_;
};

// Principal ultrafilter, generated by a single atom.
struct Ultrafilter {
  int atom = 0;
  std::vector<AtomSet> members;  // all elements containing the atom, ascending
  bool contains(AtomSet a) const { return a.contains(atom); }
};

// All ultrafilters, one per atom, in atom order.
std::vector<Ultrafilter> ultrafilters(const FinBoolAlg& a);

// Independent enumeration: scans every subset of the carrier and keeps those
// satisfying the ultrafilter conditions directly (nonempty and proper,
// closed under meets, upward closed, and for each element containing it or
// its complement).  Ordered consistently with ultrafilters() for comparison.
std::vector<std::vector<AtomSet>> brute_force_ultrafilters(const FinBoolAlg& a);

// Stone map on elements: indices of the ultrafilters containing a.
std::vector<int> eps(const FinBoolAlg& a, AtomSet elem);

// Boolean homomorphism dom -> cod, stored by its dual atom map
// (cod atoms -> dom atoms).  The element action is derived from it.
class BoolHom {
 public:
  BoolHom(FinBoolAlg dom, FinBoolAlg cod, std::vector<int> atom_map);

  const FinBoolAlg& dom() const { return dom_; }
  const FinBoolAlg& cod() const { return cod_; }
  const std::vector<int>& atom_map() const { return atom_map_; }

  AtomSet operator()(AtomSet a) const;
  std::vector<AtomSet> table() const;  // indexed by dom element bits

  static BoolHom identity(const FinBoolAlg& a);
  static BoolHom compose(const BoolHom& g, const BoolHom& f);  // g after f

  bool operator==(const BoolHom& o) const {
    return dom_.same_shape(o.dom_) && cod_.same_shape(o.cod_) &&
           atom_map_ == o.atom_map_;
  }

 private:
  FinBoolAlg dom_, cod_;
  std::vector<int> atom_map_;
};

// Checks a raw element table against the five homomorphism laws
// (bottom, top, meet, join, complement) and, on success, recovers the dual
// atom map via the adjunction  y <= phi(a)  iff  At(phi)(y) <= a.
struct HomValidation {
  bool ok = false;
  Report report;
  std::vector<int> atom_map;  // filled when ok
};
HomValidation validate_hom(const FinBoolAlg& dom, const FinBoolAlg& cod,
                           const std::vector<AtomSet>& table);

// Checks phi(sup D) = sup phi(D) over every subset D of the domain carrier.
struct SupCheck {
  bool ok = true;
  std::string witness;  // offending subset when not ok
};
SupCheck is_sup_preserving(const BoolHom& phi);

// The maps of the finite Tarski correspondence for one algebra:
//   theta(a)  = atoms below a (as a subset of the atom set),
//   kappa(x)  = characteristic homomorphism A -> 2 of the atom x.
// The report records bijectivity of both.
struct TarskiMaps {
  FinBoolAlg two;                  // one-atom algebra
  std::vector<AtomSet> theta;      // indexed by element bits
  std::vector<BoolHom> kappa;      // indexed by atom
  Report checks;
};
TarskiMaps tarski_maps(const FinBoolAlg& a);

// chi for a finite set X of the given size: each point x gives the evaluation
// homomorphism P(X) -> 2, M |-> [x in M].  Bijectivity is checked against the
// full homomorphism enumeration.
struct ChiMaps {
  FinBoolAlg powerset;             // P(X)
  std::vector<BoolHom> chi;        // indexed by point
  Report checks;
};
ChiMaps chi_maps(int n_points);

// All Boolean homomorphisms dom -> cod, ordered lexicographically by atom map.
std::vector<BoolHom> all_homs(const FinBoolAlg& dom, const FinBoolAlg& cod);

}  // namespace dualkit

#endif
