#ifndef DUALKIT_DEVRIES_HPP
#define DUALKIT_DEVRIES_HPP

#include <array>
#include <string>
#include <vector>

#include "dualkit/contact.hpp"

namespace dualkit {

// A map between contact algebras, stored as a full element table.  No laws
// are imposed at construction; check_dv_morphism produces the verdicts.
class DVMap {
 public:
  DVMap(std::string name, ContactAlg dom, ContactAlg cod,
        std::vector<AtomSet> table);

  static DVMap from_hom(std::string name, ContactAlg dom, ContactAlg cod,
                        const BoolHom& h);
  static DVMap identity(const ContactAlg& a);

  const std::string& name() const { return name_; }
  const ContactAlg& dom() const { return dom_; }
  const ContactAlg& cod() const { return cod_; }
  const std::vector<AtomSet>& table() const { return table_; }

  AtomSet operator()(AtomSet a) const { return table_[a.bits()]; }

  bool is_bool_hom() const;   // the table happens to be a Boolean hom
  BoolHom as_bool_hom() const;  // throws when it is not

  bool same_shape(const DVMap& o) const {
    return dom_.same_structure(o.dom_) && cod_.same_structure(o.cod_);
  }
  bool operator==(const DVMap& o) const {
    return same_shape(o) && table_ == o.table_;
  }

 private:
  std::string name_;
  ContactAlg dom_, cod_;
  std::vector<AtomSet> table_;
};

// V1  f(0) = 0
// V2  f(a & b) = f(a) & f(b)
// V3  a << b  implies  f(a*)* << f(b)
// V4  f(a) = join of f(b) over b << a
// unital (f(1) = 1) is recorded separately; it follows from V3 here.
struct DVCheck {
  std::array<CheckResult, 4> v;
  CheckResult unital;
  bool ok() const {
    return v[0].pass && v[1].pass && v[2].pass && v[3].pass;
  }
  Report as_report(const std::string& subject) const;
};
DVCheck check_dv_morphism(const DVMap& f);

// The lower transform  f~(a) = join of f(b) over b << a.
DVMap dv_transform(const DVMap& f);

// Plain table composition g(f(-)).
DVMap plain_compose(const DVMap& g, const DVMap& f);

// Star composition: the transform of the plain composite.
DVMap dv_compose(const DVMap& g, const DVMap& f);

// f and g are identified when their transforms coincide.
bool sim_equal(const DVMap& f, const DVMap& g);

// For Boolean homs between contact algebras, reflecting contact and
// preserving << are the two (equivalent) readings of compatibility.
bool reflects_contact(const ContactAlg& dom, const ContactAlg& cod,
                      const BoolHom& h);
bool preserves_ll(const ContactAlg& dom, const ContactAlg& cod,
                  const BoolHom& h);

std::vector<BoolHom> all_compatible_homs(const ContactAlg& dom,
                                         const ContactAlg& cod);

// All maps satisfying V1..V4, enumerated through their values on coatoms
// (any finite-meet-preserving map is fixed by those plus its top value).
// Throws when the instance is too large to scan.
std::vector<DVMap> all_dv_morphisms(const ContactAlg& dom,
                                    const ContactAlg& cod);

// Cluster of the domain induced by a cluster of the codomain:
//   { a : for all b with b << a*, f(b)* lies in d }.
Cluster cluster_pullback(const DVMap& f, const Cluster& d);

// The two-element contact algebra (one atom, forced structure).
ContactAlg two_contact();

// Correspondence between maps into the two-element algebra and clusters:
//   omega(f) = { a : f(a*) = 0 },   inverse  f_c(a) = 0 iff a* in c.
Cluster omega_of(const DVMap& f);
DVMap omega_inv(std::string name, const ContactAlg& a, const Cluster& c);
Report omega_bijection(const ContactAlg& a);

// A cover of the ultrafilter set: a surjection p onto {0..classes-1} with
// the induced same-fibre contact.
struct Cover {
  std::vector<int> p;
  int classes = 0;
  ContactAlg alg;
};
std::vector<Cover> all_covers(const FinBoolAlg& base);

}  // namespace dualkit

#endif
