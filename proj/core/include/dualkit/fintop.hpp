#ifndef DUALKIT_FINTOP_HPP
#define DUALKIT_FINTOP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dualkit/report.hpp"

namespace dualkit {

// Finite topological space on points 0..n-1.  Point sets are bitmasks.
// The open family handed to the constructor is completed under union and
// intersection (with the empty and full sets added); the report, when
// requested, lists what had to be added.
class FinTopSpace {
 public:
  FinTopSpace(std::string name, int n_points, std::vector<std::uint32_t> opens,
              Report* completion = nullptr);

  const std::string& name() const { return name_; }
  int point_count() const { return n_points_; }
  std::uint32_t full() const { return (n_points_ == 32) ? ~0u : (1u << n_points_) - 1; }

  const std::vector<std::uint32_t>& opens() const { return opens_; }
  std::vector<std::uint32_t> closed_sets() const;
  bool is_open(std::uint32_t s) const;
  bool is_closed(std::uint32_t s) const;

  std::uint32_t closure(std::uint32_t s) const;
  std::uint32_t interior(std::uint32_t s) const;

  bool same_structure(const FinTopSpace& o) const {
    return n_points_ == o.n_points_ && opens_ == o.opens_;
  }

  static FinTopSpace discrete(int n);
  static FinTopSpace indiscrete(int n);
  static FinTopSpace sierpinski();  // opens {}, {1}, {0,1}

 private:
  std::string name_;
  int n_points_;
  std::vector<std::uint32_t> opens_;  // sorted ascending, contains 0 and full
};

// Continuous point map; continuity is checked at construction.
class ContMap {
 public:
  ContMap(std::string name, FinTopSpace dom, FinTopSpace cod,
          std::vector<int> point_map);

  const std::string& name() const { return name_; }
  const FinTopSpace& dom() const { return dom_; }
  const FinTopSpace& cod() const { return cod_; }
  const std::vector<int>& point_map() const { return map_; }

  int operator()(int p) const { return map_[p]; }
  std::uint32_t image(std::uint32_t s) const;
  std::uint32_t preimage(std::uint32_t s) const;

  static bool is_continuous(const FinTopSpace& dom, const FinTopSpace& cod,
                            const std::vector<int>& point_map);

 private:
  std::string name_;
  FinTopSpace dom_, cod_;
  std::vector<int> map_;
};

struct MapFlags {
  bool quasi_open = false;   // nonempty open image has nonempty interior
  bool closed = false;       // image of closed is closed
  bool surjective = false;
  bool irreducible = false;  // closed, surjective, no proper closed set surjects
};
MapFlags classify_map(const ContMap& f);

struct SpaceFlags {
  bool extremally_disconnected = false;  // closure of open is open
  bool normal = false;     // disjoint closed sets have disjoint open splits
  bool hausdorff = false;
  bool discrete = false;
};
SpaceFlags classify_space(const FinTopSpace& x);

// All topologies on n points, generated by filtering candidate families for
// closure under union and intersection.  Deterministic order (by family mask).
std::vector<FinTopSpace> all_spaces(int n_points);

std::string point_set_to_string(std::uint32_t s);

// Set bits of a mask, ascending.
std::vector<int> points_of(std::uint32_t s);

// Subspace on the points of pts, renumbered ascending.
FinTopSpace subspace(const FinTopSpace& x, std::uint32_t pts,
                     std::string name);

bool is_dense(const FinTopSpace& x, std::uint32_t pts);

// Connected components, one label per point, numbered by first occurrence.
// For finite spaces these are the classes of the comparability closure of
// the specialization order.
std::vector<int> components(const FinTopSpace& x);

}  // namespace dualkit

#endif
