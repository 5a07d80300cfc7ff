#ifndef DUALKIT_CONTACT_HPP
#define DUALKIT_CONTACT_HPP

#include <array>
#include <string>
#include <vector>

#include "dualkit/finboole.hpp"
#include "dualkit/fintop.hpp"

namespace dualkit {

// Contact algebra: a finite Boolean algebra together with a reflexive
// symmetric relation on its atoms.  Element contact is derived:
//   a C b  iff  some atom of a is related to some atom of b.
// The order relation is the usual  a << b  iff  not (a C b*).
class ContactAlg {
 public:
  ContactAlg(FinBoolAlg base, const std::vector<std::pair<int, int>>& pairs);

  const FinBoolAlg& base() const { return base_; }
  int atom_count() const { return base_.atom_count(); }

  bool atom_contact(int x, int y) const { return (rel_[x] >> y) & 1; }
  bool contact(AtomSet a, AtomSet b) const;
  bool ll(AtomSet a, AtomSet b) const {  // a << b
    return !contact(a, base_.complement(b));
  }

  // true when the atom relation is transitive, i.e. contact between
  // ultrafilters is an equivalence
  bool uf_equivalence() const;

  std::vector<std::pair<int, int>> off_diagonal_pairs() const;  // sorted
  std::string rel_string() const;  // "0-1 1-2", "-" when discrete

  bool same_structure(const ContactAlg& o) const {
    return base_.same_shape(o.base_) && rel_ == o.rel_;
  }

  static ContactAlg discrete(FinBoolAlg base);
  static ContactAlg total(FinBoolAlg base);
  // atoms related exactly when they lie in the same block
  static ContactAlg from_partition(FinBoolAlg base,
                                   const std::vector<int>& block_of_atom);

 private:
  FinBoolAlg base_;
  std::vector<std::uint32_t> rel_;  // rel_[x] = atoms related to x
};

// Verdicts for the contact axioms C1..C6 and the order axioms I1..I6,
// plus the two list-equivalence cross-checks.
struct AxiomReport {
  std::array<CheckResult, 6> c;
  std::array<CheckResult, 6> i;
  bool c14() const { return c[0].pass && c[1].pass && c[2].pass && c[3].pass; }
  bool i14() const { return i[0].pass && i[1].pass && i[2].pass && i[3].pass; }
  bool c16() const { return c14() && c[4].pass && c[5].pass; }
  bool i16() const { return i14() && i[4].pass && i[5].pass; }
  CheckResult equiv14;  // (C1-4) iff (I1-4) on this instance
  CheckResult equiv16;  // (C1-6) iff (I1-6) on this instance
  Report as_report(const std::string& subject) const;
};
AxiomReport check_axioms(const ContactAlg& alg);

// Pairwise canonical structures on one base, with their comparison data.
struct CanonicalContacts {
  ContactAlg smallest;  // overlap contact: a C b iff a & b != 0
  ContactAlg largest;   // all nonzero elements in contact
  Report checks;        // smallest has << equal to <=, largest/total facts
};
CanonicalContacts canonical_contacts(const FinBoolAlg& base);

// Contact between ultrafilters:  u C v  iff  every pair of members touches.
bool uf_contact(const ContactAlg& alg, const Ultrafilter& u,
                const Ultrafilter& v);

// Checks  a C b  iff  some ultrafilter pair in contact separates them, and
// reports whether ultrafilter contact is an equivalence.
struct UfContactReport {
  Report checks;
  bool equivalence = false;
  std::vector<std::vector<char>> uf_rel;  // matrix over ultrafilter indices
};
UfContactReport contact_via_ufs(const ContactAlg& alg);

// A cluster is stored as the sorted list of its member elements.
struct Cluster {
  std::vector<AtomSet> members;
  bool contains(AtomSet a) const;
  bool operator==(const Cluster&) const = default;
  bool operator<(const Cluster& o) const { return members < o.members; }
  std::string to_string() const;
};

// c_u = { a : a C b for every b in u }.
Cluster cluster_from_uf(const ContactAlg& alg, const Ultrafilter& u);

// The four cluster conditions, each with a witness on failure.
struct ClusterCheck {
  bool ok = false;
  Report report;
};
ClusterCheck is_cluster(const ContactAlg& alg, const std::vector<AtomSet>& s);

// Cluster enumeration by both routes: via ultrafilters (deduplicated c_u)
// and by scanning all element subsets with is_cluster.  When ultrafilter
// contact is an equivalence the two must agree and the count must equal the
// number of contact classes; otherwise both lists are kept and flagged.
struct ClusterEnumeration {
  std::vector<Cluster> via_ufs;
  std::vector<Cluster> brute;
  bool uf_equivalence = false;
  bool discrepancy = false;
  Report checks;
};
ClusterEnumeration clusters(const ContactAlg& alg);

// The cluster space: points are clusters, closed sets generated by
// tau(a) = { clusters containing a }.  Includes the interior identity
// int(tau(a)) = complement of tau(a*), and the quotient comparison
// gamma : Ult/C -> Clust (bijectivity plus homeomorphism against the
// quotient topology).  Requires ultrafilter contact to be an equivalence.
struct ClustSpace {
  std::vector<Cluster> points;
  std::vector<std::uint32_t> tau;  // indexed by element bits; mask over points
  FinTopSpace topology = FinTopSpace("", 1, {});
  std::vector<int> uf_class;        // ultrafilter -> contact class
  std::vector<int> gamma;           // contact class -> cluster index
  Report checks;
};
ClustSpace clust_space(const ContactAlg& alg);

// All reflexive symmetric atom relations on n atoms, by off-diagonal mask.
std::vector<ContactAlg> all_contact_algs(const FinBoolAlg& base);

}  // namespace dualkit

#endif
