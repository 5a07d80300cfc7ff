#ifndef DUALKIT_RC_HPP
#define DUALKIT_RC_HPP

#include <string>
#include <vector>

#include "dualkit/devries.hpp"
#include "dualkit/fintop.hpp"

namespace dualkit {

// The algebra of regular closed sets of a finite space: sets F with
// F = cl(int F), ordered by inclusion, with
//   join  = union
//   meet  = cl int of the intersection
//   compl = closure of the set complement.
// An abstract copy is built on the atomic members; conversions go through
// to_abstract / to_set.  The attached contact relates overlapping sets.
struct RCAlgebra {
  FinTopSpace space = FinTopSpace("", 1, {});
  std::vector<std::uint32_t> members;    // ascending masks; order is inclusion
  std::vector<std::uint32_t> atom_sets;  // minimal nonzero members
  FinBoolAlg algebra = FinBoolAlg("", 1);
  ContactAlg contact = ContactAlg::discrete(FinBoolAlg("", 1));
  Report checks;

  bool is_member(std::uint32_t f) const;
  AtomSet to_abstract(std::uint32_t f) const;  // throws on a non-member
  std::uint32_t to_set(AtomSet a) const;       // union of named atoms
};
RCAlgebra rc_algebra(const FinTopSpace& x);

// Contravariant action on a continuous map f : X -> Y, as the table
//   G  |->  cl( f^{-1}( int G ) )
// between the attached contact algebras (domain side is Y).
DVMap rc_of_map(const RCAlgebra& rx, const RCAlgebra& ry, const ContMap& f,
                std::string name);

// Per-point candidate clusters  sigma(x) = { F : x in F }  against a chosen
// contact on the same algebra.  Cluster-hood can fail and is recorded.
struct SigmaReport {
  std::vector<Cluster> candidates;
  std::vector<char> cluster_flags;
  bool all_clusters = false;
  bool injective = false;
  Report checks;
};
SigmaReport sigma_candidates(const RCAlgebra& rc, const ContactAlg& contact);

// For a closed irreducible surjection p : X -> Y, the image map
// rho(F) = p[F] and the contravariant action must be mutually inverse
// Boolean isomorphisms matching contact both ways.
Report irreducible_calculus(const RCAlgebra& rx, const RCAlgebra& ry,
                            const ContMap& p);

// Restriction to a dense point set: F |-> cl_D( int F  intersect  D ),
// a Boolean isomorphism onto the algebra of the subspace.  Contact is
// reflected but not always preserved; the verdict is kept separately.
struct DenseRestriction {
  RCAlgebra sub;
  std::vector<int> point_map;    // subspace index -> original point
  std::vector<AtomSet> table;    // abstract map, indexed by element bits
  bool contact_preserved = false;
  std::string contact_witness;
  Report checks;
};
DenseRestriction dense_restriction(const RCAlgebra& rc,
                                   std::uint32_t dense_pts);

// Complete separation of two point sets: some continuous three-valued map
// sends one to 0 and the other to 1.  The component characterization and
// the raw map search must agree.
struct SeparationCheck {
  bool separated = false;
  bool oracle = false;
  bool oracle_run = false;
  std::vector<int> component;
  Report checks;
};
SeparationCheck complete_separation(const FinTopSpace& x, std::uint32_t f,
                                    std::uint32_t g);

// Contact by failure of complete separation.
struct BetaContact {
  ContactAlg alg = ContactAlg::discrete(FinBoolAlg("", 1));
  Report checks;
};
BetaContact beta_contact(const RCAlgebra& rc);

// For a commuting square  g . pp = p . f  with p closed irreducible onto a
// normal Hausdorff space and pp a surjection, every G in RC(X) satisfies
//   cl( g^{-1}( int p[G] ) )
//     = cl( union of pp[ f^{-1}[H] ] over H in RC(X) with p[H] inside int p[G] ).
// Precondition verdicts come first; the identity is only scanned when they
// all hold.
Report t4_square_identity(const RCAlgebra& rcx, const ContMap& f,
                          const ContMap& p, const ContMap& pp,
                          const ContMap& g);

}  // namespace dualkit

#endif
