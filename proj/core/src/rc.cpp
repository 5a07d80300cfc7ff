#include "dualkit/rc.hpp"

#include <algorithm>

namespace dualkit {

bool RCAlgebra::is_member(std::uint32_t f) const {
  return std::binary_search(members.begin(), members.end(), f);
}

AtomSet RCAlgebra::to_abstract(std::uint32_t f) const {
  if (!is_member(f))
    throw ValidationError("to_abstract: " + point_set_to_string(f) +
                          " is not regular closed in " + space.name());
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < atom_sets.size(); ++i)
    if ((atom_sets[i] & ~f) == 0) bits |= 1u << i;
  return AtomSet::from_bits(bits);
}

std::uint32_t RCAlgebra::to_set(AtomSet a) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < atom_sets.size(); ++i)
    if (a.contains(static_cast<int>(i))) out |= atom_sets[i];
  return out;
}

RCAlgebra rc_algebra(const FinTopSpace& x) {
  RCAlgebra out;
  out.space = x;
  out.checks.subject = "rc " + x.name();

  for (std::uint32_t c : x.closed_sets())
    if (x.closure(x.interior(c)) == c) out.members.push_back(c);
  std::sort(out.members.begin(), out.members.end());

  for (std::uint32_t m : out.members) {
    if (m == 0) continue;
    bool minimal = true;
    for (std::uint32_t o : out.members)
      if (o != 0 && o != m && (o & ~m) == 0) { minimal = false; break; }
    if (minimal) out.atom_sets.push_back(m);
  }

  const int k = static_cast<int>(out.atom_sets.size());
  if (k < 1 || k > 20)
    throw ValidationError("rc_algebra: unsupported atom count for " +
                          x.name());
  if (out.members.size() != (1u << k))
    throw TheoremViolation("rc_algebra: member count is not 2^atoms on " +
                           x.name());
  out.algebra = FinBoolAlg("rc(" + x.name() + ")", k);

  bool decomp = true;
  std::string w;
  for (AtomSet a : out.algebra.elements()) {
    std::uint32_t s = out.to_set(a);
    if (!out.is_member(s) || !(out.to_abstract(s) == a)) {
      decomp = false;
      w = a.to_string();
      break;
    }
  }
  out.checks.add("atomic-decomposition", decomp, w);
  if (!decomp)
    throw TheoremViolation("rc_algebra: decomposition failed on " + x.name());

  bool join_ok = true, meet_ok = true, comp_ok = true;
  std::string wj, wm, wc;
  for (AtomSet a : out.algebra.elements()) {
    std::uint32_t sa = out.to_set(a);
    std::uint32_t scomp = x.closure(x.full() & ~sa);
    if (!out.is_member(scomp) ||
        out.to_set(out.algebra.complement(a)) != scomp) {
      comp_ok = false;
      wc = a.to_string();
    }
    for (AtomSet b : out.algebra.elements()) {
      std::uint32_t sb = out.to_set(b);
      if (out.to_set(out.algebra.join(a, b)) != (sa | sb)) {
        join_ok = false;
        wj = a.to_string() + "," + b.to_string();
      }
      std::uint32_t smeet = x.closure(x.interior(sa & sb));
      if (!out.is_member(smeet) ||
          out.to_set(out.algebra.meet(a, b)) != smeet) {
        meet_ok = false;
        wm = a.to_string() + "," + b.to_string();
      }
    }
  }
  out.checks.add("join-is-union", join_ok, wj);
  out.checks.add("meet-is-cl-int-cap", meet_ok, wm);
  out.checks.add("complement-is-cl-minus", comp_ok, wc);

  // regular open counterpart under F |-> int F
  std::vector<std::uint32_t> ro;
  for (std::uint32_t o : x.opens())
    if (x.interior(x.closure(o)) == o) ro.push_back(o);
  std::sort(ro.begin(), ro.end());
  bool ro_bij = ro.size() == out.members.size();
  if (ro_bij) {
    std::vector<std::uint32_t> image;
    for (std::uint32_t m : out.members) {
      std::uint32_t u = x.interior(m);
      image.push_back(u);
      if (x.closure(u) != m) ro_bij = false;
    }
    std::sort(image.begin(), image.end());
    if (image != ro) ro_bij = false;
  }
  out.checks.add("interior-maps-onto-regular-opens", ro_bij);
  bool ro_ops = true;
  for (AtomSet a : out.algebra.elements()) {
    std::uint32_t sa = out.to_set(a);
    if (x.interior(out.to_set(out.algebra.complement(a))) !=
        x.interior(x.full() & ~x.interior(sa)))
      ro_ops = false;
    for (AtomSet b : out.algebra.elements()) {
      std::uint32_t sb = out.to_set(b);
      if (x.interior(out.to_set(out.algebra.meet(a, b))) !=
          (x.interior(sa) & x.interior(sb)))
        ro_ops = false;
      if (x.interior(out.to_set(out.algebra.join(a, b))) !=
          x.interior(x.closure(x.interior(sa) | x.interior(sb))))
        ro_ops = false;
    }
  }
  out.checks.add("regular-open-operations-match", ro_ops);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (out.atom_sets[i] & out.atom_sets[j]) pairs.emplace_back(i, j);
  out.contact = ContactAlg(out.algebra, pairs);

  bool c_ok = true, ll_ok = true;
  std::string wcc, wll;
  for (AtomSet a : out.algebra.elements()) {
    for (AtomSet b : out.algebra.elements()) {
      bool direct = (out.to_set(a) & out.to_set(b)) != 0;
      if (out.contact.contact(a, b) != direct) {
        c_ok = false;
        wcc = a.to_string() + "," + b.to_string();
      }
      bool inside = (out.to_set(a) & ~x.interior(out.to_set(b))) == 0;
      if (out.contact.ll(a, b) != inside) {
        ll_ok = false;
        wll = a.to_string() + "," + b.to_string();
      }
    }
  }
  out.checks.add("contact-is-overlap", c_ok, wcc);
  out.checks.add("way-below-is-inside-interior", ll_ok, wll);
  return out;
}

DVMap rc_of_map(const RCAlgebra& rx, const RCAlgebra& ry, const ContMap& f,
                std::string name) {
  if (!f.dom().same_structure(rx.space) || !f.cod().same_structure(ry.space))
    throw ValidationError(name + ": map does not match the given spaces");
  std::vector<AtomSet> table;
  for (AtomSet b : ry.algebra.elements()) {
    std::uint32_t g = ry.to_set(b);
    std::uint32_t pre = rx.space.closure(f.preimage(ry.space.interior(g)));
    if (!rx.is_member(pre))
      throw TheoremViolation(name + ": closure of an open preimage escaped");
    table.push_back(rx.to_abstract(pre));
  }
  return DVMap(std::move(name), ry.contact, rx.contact, std::move(table));
}

SigmaReport sigma_candidates(const RCAlgebra& rc, const ContactAlg& contact) {
  if (!contact.base().same_shape(rc.algebra))
    throw ValidationError("sigma_candidates: contact on a different algebra");
  SigmaReport out;
  out.checks.subject = "sigma " + rc.space.name();
  const int n = rc.space.point_count();
  for (int p = 0; p < n; ++p) {
    Cluster c;
    for (AtomSet a : rc.algebra.elements())
      if ((rc.to_set(a) >> p) & 1) c.members.push_back(a);
    out.candidates.push_back(std::move(c));
  }
  out.all_clusters = true;
  for (int p = 0; p < n; ++p) {
    std::vector<AtomSet> elems = out.candidates[p].members;
    bool ok = is_cluster(contact, elems).ok;
    out.cluster_flags.push_back(ok ? 1 : 0);
    if (!ok) out.all_clusters = false;
    out.checks.add("point-" + std::to_string(p) + "-cluster", ok);
  }
  out.injective = true;
  for (int p = 0; p < n && out.injective; ++p)
    for (int q = p + 1; q < n; ++q)
      if (out.candidates[p] == out.candidates[q]) { out.injective = false; break; }
  return out;
}

Report irreducible_calculus(const RCAlgebra& rx, const RCAlgebra& ry,
                            const ContMap& p) {
  if (!p.dom().same_structure(rx.space) || !p.cod().same_structure(ry.space))
    throw ValidationError("irreducible_calculus: spaces do not match");
  MapFlags flags = classify_map(p);
  if (!flags.irreducible)
    throw ValidationError("irreducible_calculus: map is not irreducible");

  Report r;
  r.subject = "irreducible " + p.name();

  std::vector<AtomSet> rho(rx.algebra.elements().size(), AtomSet());
  bool images_rc = true;
  std::string w;
  for (AtomSet a : rx.algebra.elements()) {
    std::uint32_t img = p.image(rx.to_set(a));
    if (!ry.is_member(img)) {
      images_rc = false;
      w = a.to_string();
      break;
    }
    rho[a.bits()] = ry.to_abstract(img);
  }
  r.add("images-regular-closed", images_rc, w);
  if (!images_rc) return r;

  DVMap back = rc_of_map(rx, ry, p, "rc(" + p.name() + ")");

  bool left = true, right = true;
  for (AtomSet b : ry.algebra.elements())
    if (!(rho[back(b).bits()] == b)) { left = false; break; }
  for (AtomSet a : rx.algebra.elements())
    if (!(back(rho[a.bits()]) == a)) { right = false; break; }
  r.add("image-after-pullback-is-identity", left);
  r.add("pullback-after-image-is-identity", right);

  bool hom = true;
  for (AtomSet a : rx.algebra.elements()) {
    if (!(rho[rx.algebra.complement(a).bits()] ==
          ry.algebra.complement(rho[a.bits()])))
      hom = false;
    for (AtomSet b : rx.algebra.elements()) {
      if (!(rho[rx.algebra.join(a, b).bits()] ==
            ry.algebra.join(rho[a.bits()], rho[b.bits()])))
        hom = false;
      if (!(rho[rx.algebra.meet(a, b).bits()] ==
            ry.algebra.meet(rho[a.bits()], rho[b.bits()])))
        hom = false;
    }
  }
  r.add("image-map-boolean", hom);

  bool contact_iso = true;
  for (AtomSet a : rx.algebra.elements())
    for (AtomSet b : rx.algebra.elements())
      if (rx.contact.contact(a, b) !=
          ry.contact.contact(rho[a.bits()], rho[b.bits()]))
        contact_iso = false;
  r.add("image-map-contact-iso", contact_iso);
  return r;
}

DenseRestriction dense_restriction(const RCAlgebra& rc,
                                   std::uint32_t dense_pts) {
  const FinTopSpace& x = rc.space;
  if (!is_dense(x, dense_pts))
    throw ValidationError("dense_restriction: the point set is not dense");
  DenseRestriction out;
  out.point_map = points_of(dense_pts);
  out.sub = rc_algebra(subspace(x, dense_pts, x.name() + "|D"));
  out.checks.subject = "dense-restriction " + x.name();

  auto shrink = [&](std::uint32_t s) {
    std::uint32_t t = 0;
    for (std::size_t j = 0; j < out.point_map.size(); ++j)
      if ((s >> out.point_map[j]) & 1) t |= 1u << j;
    return t;
  };

  bool landed = true;
  std::string w;
  for (AtomSet a : rc.algebra.elements()) {
    std::uint32_t trace = shrink(x.interior(rc.to_set(a)) & dense_pts);
    std::uint32_t e = out.sub.space.closure(trace);
    if (!out.sub.is_member(e)) {
      landed = false;
      w = a.to_string();
      out.table.push_back(AtomSet());
      continue;
    }
    out.table.push_back(out.sub.to_abstract(e));
  }
  out.checks.add("restriction-lands-in-members", landed, w);
  if (!landed) return out;

  bool bij = rc.members.size() == out.sub.members.size();
  std::vector<char> hit(out.sub.members.size(), 0);
  for (AtomSet v : out.table) {
    std::size_t i = v.bits();
    if (i < hit.size()) {
      if (hit[i]) bij = false;
      hit[i] = 1;
    }
  }
  for (char h : hit)
    if (!h) bij = false;
  out.checks.add("restriction-bijective", bij);

  bool ops = true;
  for (AtomSet a : rc.algebra.elements()) {
    if (!(out.table[rc.algebra.complement(a).bits()] ==
          out.sub.algebra.complement(out.table[a.bits()])))
      ops = false;
    for (AtomSet b : rc.algebra.elements()) {
      if (!(out.table[rc.algebra.join(a, b).bits()] ==
            out.sub.algebra.join(out.table[a.bits()], out.table[b.bits()])))
        ops = false;
      if (!(out.table[rc.algebra.meet(a, b).bits()] ==
            out.sub.algebra.meet(out.table[a.bits()], out.table[b.bits()])))
        ops = false;
    }
  }
  out.checks.add("restriction-boolean", ops);

  bool reflected = true;
  out.contact_preserved = true;
  for (AtomSet a : rc.algebra.elements())
    for (AtomSet b : rc.algebra.elements()) {
      bool before = rc.contact.contact(a, b);
      bool after =
          out.sub.contact.contact(out.table[a.bits()], out.table[b.bits()]);
      if (after && !before) reflected = false;
      if (before && !after && out.contact_preserved) {
        out.contact_preserved = false;
        out.contact_witness = a.to_string() + "," + b.to_string();
      }
    }
  out.checks.add("contact-reflected", reflected);
  return out;
}

SeparationCheck complete_separation(const FinTopSpace& x, std::uint32_t f,
                                    std::uint32_t g) {
  SeparationCheck out;
  out.checks.subject = "separation " + x.name();
  out.component = components(x);
  const int n = x.point_count();

  bool shared = false;
  int classes = 0;
  for (int v : out.component) classes = std::max(classes, v + 1);
  for (int c = 0; c < classes && !shared; ++c) {
    bool meets_f = false, meets_g = false;
    for (int p = 0; p < n; ++p)
      if (out.component[p] == c) {
        if ((f >> p) & 1) meets_f = true;
        if ((g >> p) & 1) meets_g = true;
      }
    if (meets_f && meets_g) shared = true;
  }
  out.separated = !shared;

  if (n <= 10) {
    out.oracle_run = true;
    out.oracle = false;
    FinTopSpace three = FinTopSpace::discrete(3);
    std::vector<int> val(n, 0);
    while (true) {
      bool fits = true;
      for (int p = 0; p < n && fits; ++p) {
        if (((f >> p) & 1) && val[p] != 0) fits = false;
        if (((g >> p) & 1) && val[p] != 2) fits = false;
      }
      if (fits && ContMap::is_continuous(x, three, val)) {
        out.oracle = true;
        break;
      }
      int i = n - 1;
      while (i >= 0 && val[i] == 2) val[i--] = 0;
      if (i < 0) break;
      ++val[i];
    }
    out.checks.add("characterization-matches-search",
                   out.separated == out.oracle);
  }
  return out;
}

BetaContact beta_contact(const RCAlgebra& rc) {
  BetaContact out;
  out.checks.subject = "beta-contact " + rc.space.name();
  const int k = static_cast<int>(rc.atom_sets.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!complete_separation(rc.space, rc.atom_sets[i], rc.atom_sets[j])
               .separated)
        pairs.emplace_back(i, j);
  out.alg = ContactAlg(rc.algebra, pairs);

  bool match = true;
  std::string w;
  for (AtomSet a : rc.algebra.elements()) {
    for (AtomSet b : rc.algebra.elements()) {
      bool direct =
          a.empty() || b.empty()
              ? false
              : !complete_separation(rc.space, rc.to_set(a), rc.to_set(b))
                     .separated;
      if (out.alg.contact(a, b) != direct) {
        match = false;
        w = a.to_string() + "," + b.to_string();
        break;
      }
    }
    if (!match) break;
  }
  out.checks.add("matches-definition", match, w);
  return out;
}

Report t4_square_identity(const RCAlgebra& rcx, const ContMap& f,
                          const ContMap& p, const ContMap& pp,
                          const ContMap& g) {
  if (!f.cod().same_structure(p.dom()) ||
      !f.dom().same_structure(pp.dom()) ||
      !g.dom().same_structure(pp.cod()) ||
      !g.cod().same_structure(p.cod()) ||
      !p.dom().same_structure(rcx.space))
    throw ValidationError("t4_square_identity: spaces do not line up");

  Report r;
  r.subject = "square " + p.name() + "/" + pp.name();

  bool commutes = true;
  for (int xp = 0; xp < f.dom().point_count(); ++xp)
    if (g(pp(xp)) != p(f(xp))) { commutes = false; break; }
  r.add("square-commutes", commutes);

  MapFlags pf = classify_map(p);
  r.add("p-closed-irreducible", pf.closed && pf.irreducible);
  SpaceFlags yf = classify_space(p.cod());
  r.add("base-normal-hausdorff", yf.normal && yf.hausdorff);
  r.add("pp-surjective", classify_map(pp).surjective);
  if (!r.all_pass()) return r;

  const FinTopSpace& yprime = pp.cod();
  const FinTopSpace& y = p.cod();
  bool id_ok = true;
  std::string w;
  for (AtomSet a : rcx.algebra.elements()) {
    std::uint32_t gset = rcx.to_set(a);
    std::uint32_t target = y.interior(p.image(gset));
    std::uint32_t lhs = yprime.closure(g.preimage(target));
    std::uint32_t acc = 0;
    for (std::uint32_t h : rcx.members)
      if ((p.image(h) & ~target) == 0) acc |= pp.image(f.preimage(h));
    std::uint32_t rhs = yprime.closure(acc);
    if (lhs != rhs) {
      id_ok = false;
      w = "G=" + point_set_to_string(gset);
      break;
    }
  }
  r.add("identity", id_ok, w);
  return r;
}

}  // namespace dualkit
