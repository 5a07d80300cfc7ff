#include "dualkit/fintop.hpp"

#include <algorithm>
#include <sstream>

namespace dualkit {

std::string point_set_to_string(std::uint32_t s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((s >> i) & 1) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  os << '}';
  return os.str();
}

FinTopSpace::FinTopSpace(std::string name, int n_points,
                         std::vector<std::uint32_t> opens, Report* completion)
    : name_(std::move(name)), n_points_(n_points) {
  if (n_points < 1 || n_points > 20)
    throw ValidationError("space '" + name_ + "': point count out of range");
  const std::uint32_t all = (1u << n_points) - 1;
  for (std::uint32_t s : opens)
    if (s & ~all)
      throw ValidationError("space '" + name_ + "': open set mentions a missing point");
  std::vector<char> open(all + 1, 0);
  open[0] = open[all] = 1;
  for (std::uint32_t s : opens) open[s] = 1;
  // complete under pairwise union and intersection until stable
  bool changed = true;
  std::vector<std::uint32_t> added;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> cur;
    for (std::uint32_t s = 0; s <= all; ++s)
      if (open[s]) cur.push_back(s);
    for (std::uint32_t a : cur)
      for (std::uint32_t b : cur) {
        for (std::uint32_t c : {static_cast<std::uint32_t>(a | b),
                                static_cast<std::uint32_t>(a & b)})
          if (!open[c]) {
            open[c] = 1;
            added.push_back(c);
            changed = true;
          }
      }
  }
  for (std::uint32_t s = 0; s <= all; ++s)
    if (open[s]) opens_.push_back(s);
  if (completion) {
    completion->subject = "space " + name_;
    std::sort(added.begin(), added.end());
    for (std::uint32_t s : added)
      completion->add("completion-added", true, point_set_to_string(s));
  }
}

std::vector<std::uint32_t> FinTopSpace::closed_sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : opens_) out.push_back(full() & ~s);
  std::sort(out.begin(), out.end());
  return out;
}

bool FinTopSpace::is_open(std::uint32_t s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

bool FinTopSpace::is_closed(std::uint32_t s) const {
  return is_open(full() & ~s);
}

std::uint32_t FinTopSpace::closure(std::uint32_t s) const {
  // smallest closed superset: intersect all closed supersets
  std::uint32_t out = full();
  for (std::uint32_t o : opens_) {
    std::uint32_t c = full() & ~o;
    if ((s & ~c) == 0) out &= c;
  }
  return out;
}

std::uint32_t FinTopSpace::interior(std::uint32_t s) const {
  std::uint32_t out = 0;
  for (std::uint32_t o : opens_)
    if ((o & ~s) == 0) out |= o;
  return out;
}

FinTopSpace FinTopSpace::discrete(int n) {
  std::vector<std::uint32_t> opens;
  for (std::uint32_t s = 0; s < (1u << n); ++s) opens.push_back(s);
  return FinTopSpace("discrete" + std::to_string(n), n, opens);
}

FinTopSpace FinTopSpace::indiscrete(int n) {
  return FinTopSpace("indiscrete" + std::to_string(n), n, {});
}

FinTopSpace FinTopSpace::sierpinski() {
  return FinTopSpace("sierpinski", 2, {0b10});
}

ContMap::ContMap(std::string name, FinTopSpace dom, FinTopSpace cod,
                 std::vector<int> point_map)
    : name_(std::move(name)), dom_(std::move(dom)), cod_(std::move(cod)),
      map_(std::move(point_map)) {
  if (static_cast<int>(map_.size()) != dom_.point_count())
    throw ValidationError("map '" + name_ + "': needs one value per point");
  for (int v : map_)
    if (v < 0 || v >= cod_.point_count())
      throw ValidationError("map '" + name_ + "': value out of range");
  if (!is_continuous(dom_, cod_, map_))
    throw ValidationError("map '" + name_ + "': not continuous");
}

std::uint32_t ContMap::image(std::uint32_t s) const {
  std::uint32_t out = 0;
  for (int p = 0; p < dom_.point_count(); ++p)
    if ((s >> p) & 1) out |= 1u << map_[p];
  return out;
}

std::uint32_t ContMap::preimage(std::uint32_t s) const {
  std::uint32_t out = 0;
  for (int p = 0; p < dom_.point_count(); ++p)
    if ((s >> map_[p]) & 1) out |= 1u << p;
  return out;
}

bool ContMap::is_continuous(const FinTopSpace& dom, const FinTopSpace& cod,
                            const std::vector<int>& point_map) {
  for (std::uint32_t o : cod.opens()) {
    std::uint32_t pre = 0;
    for (int p = 0; p < dom.point_count(); ++p)
      if ((o >> point_map[p]) & 1) pre |= 1u << p;
    if (!dom.is_open(pre)) return false;
  }
  return true;
}

MapFlags classify_map(const ContMap& f) {
  MapFlags out;
  out.quasi_open = true;
  for (std::uint32_t o : f.dom().opens()) {
    if (o == 0) continue;
    if (f.cod().interior(f.image(o)) == 0) { out.quasi_open = false; break; }
  }
  out.closed = true;
  for (std::uint32_t c : f.dom().closed_sets())
    if (!f.cod().is_closed(f.image(c))) { out.closed = false; break; }
  out.surjective = f.image(f.dom().full()) == f.cod().full();
  out.irreducible = out.closed && out.surjective;
  if (out.irreducible) {
    const std::uint32_t all = f.dom().full();
    for (std::uint32_t c : f.dom().closed_sets()) {
      if (c == all) continue;
      if (f.image(c) == f.cod().full()) { out.irreducible = false; break; }
    }
  }
  return out;
}

SpaceFlags classify_space(const FinTopSpace& x) {
  SpaceFlags out;
  out.extremally_disconnected = true;
  for (std::uint32_t o : x.opens())
    if (!x.is_open(x.closure(o))) { out.extremally_disconnected = false; break; }
  out.normal = true;
  auto closed = x.closed_sets();
  for (std::uint32_t f : closed)
    for (std::uint32_t g : closed) {
      if (f & g) continue;
      bool split = false;
      for (std::uint32_t u : x.opens()) {
        if (f & ~u) continue;
        std::uint32_t v = x.interior(x.full() & ~u);
        // any open v disjoint from u; the largest candidate is int(X\u)
        if ((g & ~v) == 0) { split = true; break; }
      }
      if (!split) { out.normal = false; }
    }
  out.hausdorff = true;
  for (int p = 0; p < x.point_count() && out.hausdorff; ++p)
    for (int q = p + 1; q < x.point_count(); ++q) {
      bool sep = false;
      for (std::uint32_t u : x.opens()) {
        if (!((u >> p) & 1)) continue;
        std::uint32_t v = x.interior(x.full() & ~u);
        if ((v >> q) & 1) { sep = true; break; }
      }
      if (!sep) { out.hausdorff = false; break; }
    }
  out.discrete =
      x.opens().size() == (1u << x.point_count());
  return out;
}

std::vector<int> points_of(std::uint32_t s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((s >> i) & 1) out.push_back(i);
  return out;
}

FinTopSpace subspace(const FinTopSpace& x, std::uint32_t pts,
                     std::string name) {
  if (pts & ~x.full())
    throw ValidationError("subspace: points outside the space");
  auto idx = points_of(pts);
  std::vector<std::uint32_t> traces;
  for (std::uint32_t o : x.opens()) {
    std::uint32_t t = 0;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if ((o >> idx[j]) & 1) t |= 1u << j;
    traces.push_back(t);
  }
  return FinTopSpace(std::move(name), static_cast<int>(idx.size()), traces);
}

bool is_dense(const FinTopSpace& x, std::uint32_t pts) {
  return x.closure(pts) == x.full();
}

std::vector<int> components(const FinTopSpace& x) {
  const int n = x.point_count();
  std::vector<std::vector<int>> adj(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && (((x.closure(1u << p) >> q) & 1) ||
                     ((x.closure(1u << q) >> p) & 1))) {
        adj[p].push_back(q);
      }
  std::vector<int> label(n, -1);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (label[p] >= 0) continue;
    std::vector<int> stack{p};
    label[p] = next;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int q : adj[cur])
        if (label[q] < 0) {
          label[q] = next;
          stack.push_back(q);
        }
    }
    ++next;
  }
  return label;
}

std::vector<FinTopSpace> all_spaces(int n_points) {
  std::vector<FinTopSpace> out;
  const std::uint32_t all = (1u << n_points) - 1;
  // candidate proper nonempty subsets, indexed 1..all-1
  std::vector<std::uint32_t> proper;
  for (std::uint32_t s = 1; s < all; ++s) proper.push_back(s);
  const int k = static_cast<int>(proper.size());
  for (std::uint32_t fam = 0; fam < (1u << k); ++fam) {
    std::vector<std::uint32_t> opens{0, all};
    for (int i = 0; i < k; ++i)
      if ((fam >> i) & 1) opens.push_back(proper[i]);
    // keep only families already closed under union/intersection
    bool closed_family = true;
    std::vector<char> in(all + 1, 0);
    for (std::uint32_t s : opens) in[s] = 1;
    for (std::uint32_t a : opens) {
      for (std::uint32_t b : opens) {
        if (!in[a | b] || !in[a & b]) { closed_family = false; break; }
      }
      if (!closed_family) break;
    }
    if (!closed_family) continue;
    out.emplace_back("T" + std::to_string(n_points) + "_" +
                         std::to_string(out.size()),
                     n_points, opens);
  }
  return out;
}

}  // namespace dualkit
