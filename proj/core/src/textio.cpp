#include "dualkit/textio.hpp"

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dualkit/catkit.hpp"
#include "dualkit/finboole.hpp"
#include "dualkit/fixtures.hpp"

namespace dualkit {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_count(const std::string& t, int line, const char* what) {
  std::size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(t, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != t.size() || v < 0)
    fail(line, std::string("expected ") + what + ", got '" + t + "'");
  return v;
}

int parse_index(const std::string& t, int line, const char* what) {
  const int v = parse_count(t, line, what);
  if (v >= 32) fail(line, std::string(what) + " out of range: " + t);
  return v;
}

std::pair<int, int> parse_rel_pair(const std::string& t, int line) {
  const auto dash = t.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == t.size())
    fail(line, "expected a contact pair like 0-1, got '" + t + "'");
  return {parse_index(t.substr(0, dash), line, "atom index"),
          parse_index(t.substr(dash + 1), line, "atom index")};
}

std::uint32_t parse_elem(const std::string& t, int line) {
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    fail(line, "expected an element like {0,2} or {}, got '" + t + "'");
  std::uint32_t bits = 0;
  const std::string body = t.substr(1, t.size() - 2);
  if (body.empty()) return 0;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ','))
    bits |= 1u << parse_index(item, line, "atom index");
  return bits;
}

enum class BlockKind {
  None,
  Algebra,
  Space,
  Map,
  Pair,
  Extension,
  Category,
  Functor,
  Adjunction,
  ContactAnnot
};

const char* kind_word(Document::Kind k) {
  switch (k) {
    case Document::Kind::Algebra: return "algebra";
    case Document::Kind::Space: return "space";
    case Document::Kind::Map: return "map";
    case Document::Kind::Pair: return "pair";
    case Document::Kind::Extension: return "extension";
    case Document::Kind::Category: return "category";
    case Document::Kind::Functor: return "functor";
    case Document::Kind::Adjunction: return "adjunction";
  }
  return "?";
}

// Re-raises builder diagnostics with the block's line number unless they
// already carry one.
template <typename Fn>
void at_line(int line, Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    const std::string w = e.what();
    if (w.rfind("line ", 0) == 0) throw;
    fail(line, w);
  }
}

FinCat category_fixture(const Document::FixtureBlock& blk) {
  const auto& s = blk.args;
  auto want = [&](bool cond, const char* usage) {
    if (!cond)
      throw ValidationError("block '" + blk.name + "': expected " + usage);
  };
  if (s[0] == "split-retraction") {
    want(s.size() == 1, "'split-retraction'");
    return split_retraction_category();
  }
  if (s[0] == "graphs") {
    want(s.size() == 1, "'graphs'");
    return graph_fixture().ycat;
  }
  if (s[0] == "surjections") {
    want(s.size() == 1, "'surjections'");
    return surjection_fixture().ycat;
  }
  if (s[0] == "sets") {
    want(s.size() == 3, "'sets <min-size> <max-size>'");
    const int lo = parse_count(s[1], blk.line, "set size");
    const int hi = parse_count(s[2], blk.line, "set size");
    if (lo > hi || hi > 4)
      throw ValidationError("block '" + blk.name +
                            "': set sizes must satisfy min <= max <= 4");
    return make_set_skeleton(lo, hi).cat;
  }
  if (s[0] == "bools") {
    want(s.size() == 2, "'bools <max-atoms>'");
    const int n = parse_count(s[1], blk.line, "atom bound");
    if (n < 1 || n > 4)
      throw ValidationError("block '" + blk.name +
                            "': atom bound must be 1..4");
    return make_bool_skeleton(n).cat;
  }
  throw ValidationError("block '" + blk.name +
                        "': unknown category reference '" + s[0] + "'");
}

const Document::FixtureBlock* find_fixture(
    const std::vector<Document::FixtureBlock>& v, const std::string& name) {
  for (const auto& f : v)
    if (f.name == name) return &f;
  return nullptr;
}

DualAdjunction adjunction_fixture(const Document& doc,
                                  const Document::FixtureBlock& blk) {
  const auto& s = blk.args;
  if (s[0] == "power-set") {
    if (s.size() != 2)
      throw ValidationError("block '" + blk.name +
                            "': expected 'power-set <max-atoms>'");
    const int n = parse_count(s[1], blk.line, "atom bound");
    if (n < 1 || n > 4)
      throw ValidationError("block '" + blk.name +
                            "': atom bound must be 1..4");
    return power_set_duality(n);
  }
  if (s[0] == "identity") {
    if (s.size() != 2)
      throw ValidationError("block '" + blk.name +
                            "': expected 'identity <category>'");
    const Document::FixtureBlock* cb = find_fixture(doc.categories, s[1]);
    if (!cb)
      throw ValidationError("block '" + blk.name + "': unknown category '" +
                            s[1] + "'");
    return identity_self_duality(blk.name, category_fixture(*cb));
  }
  throw ValidationError("block '" + blk.name +
                        "': unknown adjunction reference '" + s[0] + "'");
}

void validate(const Document& doc) {
  std::set<std::string> names;
  auto claim = [&](const std::string& n, int line) {
    if (!names.insert(n).second) fail(line, "duplicate name '" + n + "'");
  };
  for (const auto& a : doc.algebras) {
    claim(a.name, a.line);
    for (auto [x, y] : a.contact)
      if (x >= a.atoms || y >= a.atoms)
        fail(a.line, "algebra '" + a.name +
                         "': contact pair outside the declared atoms");
  }
  for (const auto& s : doc.spaces) {
    claim(s.name, s.line);
    const std::uint32_t full = (1u << s.points) - 1;
    for (std::uint32_t o : s.opens)
      if (o & ~full)
        fail(s.line,
             "space '" + s.name + "': open set uses points outside the space");
  }
  for (const auto& m : doc.maps) claim(m.name, m.line);
  for (const auto& p : doc.pairs) claim(p.name, p.line);
  for (const auto& e : doc.extensions) claim(e.name, e.line);
  for (const auto& f : doc.categories) claim(f.name, f.line);
  for (const auto& f : doc.functors) claim(f.name, f.line);
  for (const auto& f : doc.adjunctions) claim(f.name, f.line);

  for (const auto& m : doc.maps)
    at_line(m.line, [&] { map_of(doc, m); });
  for (const auto& p : doc.pairs)
    at_line(p.line, [&] { pair_of(doc, p); });
  for (const auto& e : doc.extensions)
    at_line(e.line, [&] { extension_of(doc, e); });
  for (const auto& f : doc.categories)
    at_line(f.line, [&] { fixture_checks(doc, Document::Kind::Category, f); });
  for (const auto& f : doc.adjunctions)
    at_line(f.line,
            [&] { fixture_checks(doc, Document::Kind::Adjunction, f); });
  for (const auto& f : doc.functors)
    at_line(f.line, [&] { fixture_checks(doc, Document::Kind::Functor, f); });
}

}  // namespace

const Document::Algebra* Document::find_algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}

const Document::Space* Document::find_space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return &s;
  return nullptr;
}

const Document::MapBlock* Document::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

Document parse_document(const std::string& text) {
  Document doc;
  struct Annot {
    std::string target;
    std::vector<std::pair<int, int>> pairs;
    int line = 0;
  };
  std::vector<Annot> annots;

  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  BlockKind cur = BlockKind::None;
  bool atoms_seen = false, points_seen = false;
  std::vector<int> open_lines;

  auto end_block = [&] {
    if (cur == BlockKind::Algebra && !atoms_seen) {
      const auto& a = doc.algebras.back();
      fail(a.line, "algebra '" + a.name + "' is missing an atoms line");
    }
    if (cur == BlockKind::Space) {
      const auto& s = doc.spaces.back();
      if (!points_seen)
        fail(s.line, "space '" + s.name + "' is missing a points line");
      const std::uint32_t full = (1u << s.points) - 1;
      for (std::size_t i = 0; i < s.opens.size(); ++i)
        if (s.opens[i] & ~full)
          fail(open_lines[i],
               "open set uses points outside space '" + s.name + "'");
    }
    cur = BlockKind::None;
  };

  while (std::getline(is, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) {
      if (cur != BlockKind::None) end_block();
      continue;
    }

    if (cur == BlockKind::None) {
      const std::string& kind = tok[0];
      if (kind == "algebra") {
        if (tok.size() != 2) fail(line_no, "algebra header wants exactly a name");
        doc.algebras.push_back({tok[1], 0, {}, false, line_no});
        doc.order.push_back({Document::Kind::Algebra,
                             static_cast<int>(doc.algebras.size()) - 1});
        atoms_seen = false;
        cur = BlockKind::Algebra;
      } else if (kind == "space") {
        if (tok.size() != 2) fail(line_no, "space header wants exactly a name");
        doc.spaces.push_back({tok[1], 0, {}, line_no});
        doc.order.push_back(
            {Document::Kind::Space, static_cast<int>(doc.spaces.size()) - 1});
        points_seen = false;
        open_lines.clear();
        cur = BlockKind::Space;
      } else if (kind == "contact") {
        if (tok.size() < 2)
          fail(line_no, "contact header wants the algebra name");
        Annot an{tok[1], {}, line_no};
        for (std::size_t i = 2; i < tok.size(); ++i)
          an.pairs.push_back(parse_rel_pair(tok[i], line_no));
        annots.push_back(std::move(an));
        cur = BlockKind::ContactAnnot;
      } else if (kind == "map") {
        if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
          fail(line_no, "map header wants 'map <name> : <dom> -> <cod>'");
        doc.maps.push_back({tok[1], tok[3], tok[5], {}, {}, line_no});
        doc.order.push_back(
            {Document::Kind::Map, static_cast<int>(doc.maps.size()) - 1});
        cur = BlockKind::Map;
      } else if (kind == "pair") {
        if (tok.size() < 5 || tok[2] != ":")
          fail(line_no, "pair header wants 'pair <name> : <algebra> <map>...'");
        Document::PairBlock pb{tok[1], tok[3], {}, line_no};
        for (std::size_t i = 4; i < tok.size(); ++i)
          pb.members.push_back(tok[i]);
        doc.pairs.push_back(std::move(pb));
        doc.order.push_back(
            {Document::Kind::Pair, static_cast<int>(doc.pairs.size()) - 1});
        cur = BlockKind::Pair;
      } else if (kind == "extension") {
        if (tok.size() != 4 || tok[2] != ":")
          fail(line_no, "extension header wants 'extension <name> : <map>'");
        doc.extensions.push_back({tok[1], tok[3], line_no});
        doc.order.push_back({Document::Kind::Extension,
                             static_cast<int>(doc.extensions.size()) - 1});
        cur = BlockKind::Extension;
      } else if (kind == "category" || kind == "functor" ||
                 kind == "adjunction") {
        if (tok.size() < 4 || tok[2] != ":")
          fail(line_no,
               kind + " header wants '" + kind + " <name> : <reference...>'");
        Document::FixtureBlock fb{
            tok[1], {tok.begin() + 3, tok.end()}, line_no};
        if (kind == "category") {
          doc.categories.push_back(std::move(fb));
          doc.order.push_back({Document::Kind::Category,
                               static_cast<int>(doc.categories.size()) - 1});
          cur = BlockKind::Category;
        } else if (kind == "functor") {
          doc.functors.push_back(std::move(fb));
          doc.order.push_back({Document::Kind::Functor,
                               static_cast<int>(doc.functors.size()) - 1});
          cur = BlockKind::Functor;
        } else {
          doc.adjunctions.push_back(std::move(fb));
          doc.order.push_back({Document::Kind::Adjunction,
                               static_cast<int>(doc.adjunctions.size()) - 1});
          cur = BlockKind::Adjunction;
        }
      } else {
        fail(line_no, "unknown block kind '" + kind + "'");
      }
      continue;
    }

    const std::string& key = tok[0];
    switch (cur) {
      case BlockKind::Algebra: {
        Document::Algebra& a = doc.algebras.back();
        if (key == "atoms") {
          if (atoms_seen)
            fail(line_no, "algebra '" + a.name + "' declares atoms twice");
          if (tok.size() != 2) fail(line_no, "atoms wants a single count");
          a.atoms = parse_count(tok[1], line_no, "atom count");
          if (a.atoms < 1 || a.atoms > 16)
            fail(line_no, "atom count must be 1..16");
          atoms_seen = true;
        } else if (key == "contact") {
          a.contact_installed = true;
          for (std::size_t i = 1; i < tok.size(); ++i)
            a.contact.push_back(parse_rel_pair(tok[i], line_no));
        } else {
          fail(line_no, "unknown key '" + key + "' in algebra block");
        }
        break;
      }
      case BlockKind::Space: {
        Document::Space& s = doc.spaces.back();
        if (key == "points") {
          if (points_seen)
            fail(line_no, "space '" + s.name + "' declares points twice");
          if (tok.size() != 2) fail(line_no, "points wants a single count");
          s.points = parse_count(tok[1], line_no, "point count");
          if (s.points < 1 || s.points > 16)
            fail(line_no, "point count must be 1..16");
          points_seen = true;
        } else if (key == "open") {
          std::uint32_t mask = 0;
          for (std::size_t i = 1; i < tok.size(); ++i)
            mask |= 1u << parse_index(tok[i], line_no, "point index");
          s.opens.push_back(mask);
          open_lines.push_back(line_no);
        } else {
          fail(line_no, "unknown key '" + key + "' in space block");
        }
        break;
      }
      case BlockKind::Map: {
        Document::MapBlock& m = doc.maps.back();
        if (key == "elem") {
          if (tok.size() != 4 || tok[2] != "->")
            fail(line_no, "elem wants 'elem {i,j} -> {k}'");
          m.elems.emplace_back(parse_elem(tok[1], line_no),
                               parse_elem(tok[3], line_no));
        } else if (key == "atoms-map") {
          if (tok.size() != 4 || tok[2] != "->")
            fail(line_no, "atoms-map wants 'atoms-map j -> i'");
          m.atom_entries.emplace_back(parse_index(tok[1], line_no, "atom index"),
                                      parse_index(tok[3], line_no, "atom index"));
        } else {
          fail(line_no, "unknown key '" + key + "' in map block");
        }
        break;
      }
      case BlockKind::ContactAnnot: {
        if (key == "contact") {
          for (std::size_t i = 1; i < tok.size(); ++i)
            annots.back().pairs.push_back(parse_rel_pair(tok[i], line_no));
        } else {
          fail(line_no, "unknown key '" + key + "' in contact block");
        }
        break;
      }
      case BlockKind::Pair:
      case BlockKind::Extension:
      case BlockKind::Category:
      case BlockKind::Functor:
      case BlockKind::Adjunction:
        fail(line_no, "unknown key '" + key +
                          "'; this block kind is header-only");
      case BlockKind::None:
        break;
    }
  }
  if (cur != BlockKind::None) end_block();

  for (const Annot& an : annots) {
    Document::Algebra* hit = nullptr;
    for (auto& a : doc.algebras)
      if (a.name == an.target) hit = &a;
    if (!hit)
      fail(an.line, "contact annotation for unknown algebra '" + an.target + "'");
    if (hit->contact_installed)
      fail(an.line,
           "algebra '" + an.target + "' already carries a contact relation");
    hit->contact_installed = true;
    hit->contact = an.pairs;
    for (auto [x, y] : an.pairs)
      if (x >= hit->atoms || y >= hit->atoms)
        fail(an.line, "contact pair outside the atoms of '" + an.target + "'");
  }

  validate(doc);
  return doc;
}

ContactAlg algebra_of(const Document&, const Document::Algebra& blk) {
  return ContactAlg(FinBoolAlg(blk.name, blk.atoms), blk.contact);
}

FinTopSpace space_of(const Document&, const Document::Space& blk) {
  return FinTopSpace(blk.name, blk.points, blk.opens);
}

DVMap map_of(const Document& doc, const Document::MapBlock& blk) {
  const Document::Algebra* da = doc.find_algebra(blk.dom);
  if (!da)
    throw ValidationError("map '" + blk.name + "': unknown domain algebra '" +
                          blk.dom + "'");
  const Document::Algebra* ca = doc.find_algebra(blk.cod);
  if (!ca)
    throw ValidationError("map '" + blk.name + "': unknown codomain algebra '" +
                          blk.cod + "'");
  ContactAlg dom = algebra_of(doc, *da);
  ContactAlg cod = algebra_of(doc, *ca);
  for (auto [l, r] : blk.elems) {
    if (l >= (1u << dom.atom_count()) || r >= (1u << cod.atom_count()))
      throw ValidationError("map '" + blk.name +
                            "': elem entry outside the algebras");
  }
  if (!blk.atom_entries.empty()) {
    std::vector<int> am(cod.atom_count(), -1);
    for (auto [j, i] : blk.atom_entries) {
      if (j >= cod.atom_count() || i >= dom.atom_count())
        throw ValidationError("map '" + blk.name +
                              "': atoms-map entry outside the algebras");
      if (am[j] >= 0)
        throw ValidationError("map '" + blk.name + "': codomain atom " +
                              std::to_string(j) + " mapped twice");
      am[j] = i;
    }
    for (int j = 0; j < cod.atom_count(); ++j)
      if (am[j] < 0)
        throw ValidationError("map '" + blk.name + "': codomain atom " +
                              std::to_string(j) + " has no atoms-map entry");
    DVMap f = DVMap::from_hom(blk.name, std::move(dom), std::move(cod),
                              BoolHom(algebra_of(doc, *da).base(),
                                      algebra_of(doc, *ca).base(), am));
    for (auto [l, r] : blk.elems)
      if (f(AtomSet::from_bits(l)).bits() != r)
        throw ValidationError("map '" + blk.name +
                              "': elem entry disagrees with the atoms-map at " +
                              AtomSet::from_bits(l).to_string());
    return f;
  }
  const std::uint32_t ne = 1u << dom.atom_count();
  std::vector<AtomSet> table(ne);
  std::vector<char> seen(ne, 0);
  for (auto [l, r] : blk.elems) {
    if (seen[l])
      throw ValidationError("map '" + blk.name + "': element " +
                            AtomSet::from_bits(l).to_string() +
                            " mapped twice");
    seen[l] = 1;
    table[l] = AtomSet::from_bits(r);
  }
  for (std::uint32_t e = 0; e < ne; ++e)
    if (!seen[e])
      throw ValidationError("map '" + blk.name + "': no entry for element " +
                            AtomSet::from_bits(e).to_string());
  return DVMap(blk.name, std::move(dom), std::move(cod), std::move(table));
}

DeVriesPair pair_of(const Document& doc, const Document::PairBlock& blk) {
  const Document::Algebra* ab = doc.find_algebra(blk.algebra);
  if (!ab)
    throw ValidationError("pair '" + blk.name + "': unknown algebra '" +
                          blk.algebra + "'");
  ContactAlg alg = algebra_of(doc, *ab);
  std::vector<DVMap> members;
  for (const std::string& mn : blk.members) {
    const Document::MapBlock* mb = doc.find_map(mn);
    if (!mb)
      throw ValidationError("pair '" + blk.name + "': unknown map '" + mn +
                            "'");
    if (mb->dom != blk.algebra)
      throw ValidationError("pair '" + blk.name + "': member '" + mn +
                            "' does not start at '" + blk.algebra + "'");
    members.push_back(map_of(doc, *mb));
  }
  return make_devries_pair(std::move(alg), std::move(members));
}

BooleanDVExtension extension_of(const Document& doc,
                                const Document::ExtensionBlock& blk) {
  const Document::MapBlock* mb = doc.find_map(blk.map);
  if (!mb)
    throw ValidationError("extension '" + blk.name + "': unknown map '" +
                          blk.map + "'");
  return make_extension(map_of(doc, *mb));
}

Report fixture_checks(const Document& doc, Document::Kind kind,
                      const Document::FixtureBlock& blk) {
  if (kind == Document::Kind::Category) {
    Report r = category_fixture(blk).validate();
    r.subject = "category " + blk.name;
    return r;
  }
  if (kind == Document::Kind::Adjunction) {
    Report r = adjunction_fixture(doc, blk).checks;
    r.subject = "adjunction " + blk.name;
    return r;
  }
  const auto& s = blk.args;
  if (s.size() != 2 || (s[0] != "s" && s[0] != "t"))
    throw ValidationError("block '" + blk.name +
                          "': expected 's <adjunction>' or 't <adjunction>'");
  const Document::FixtureBlock* ab = find_fixture(doc.adjunctions, s[1]);
  if (!ab)
    throw ValidationError("block '" + blk.name + "': unknown adjunction '" +
                          s[1] + "'");
  const DualAdjunction adj = adjunction_fixture(doc, *ab);
  const Functor& leg = (s[0] == "s") ? adj.s : adj.t;
  Report r = check_functor(leg.dom(), leg.cod(), leg.obj_map(), leg.mor_map());
  r.subject = "functor " + blk.name;
  return r;
}

std::string serialize_document(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '\n';
    first = false;
  };
  for (const Document::Entry& en : doc.order) {
    switch (en.kind) {
      case Document::Kind::Algebra: {
        const auto& a = doc.algebras[en.index];
        sep();
        os << "algebra " << a.name << "\natoms " << a.atoms << '\n';
        if (a.contact_installed) {
          os << "contact";
          for (auto [x, y] : algebra_of(doc, a).off_diagonal_pairs())
            os << ' ' << x << '-' << y;
          os << '\n';
        }
        break;
      }
      case Document::Kind::Space: {
        const auto& s = doc.spaces[en.index];
        sep();
        const FinTopSpace sp = space_of(doc, s);
        os << "space " << s.name << "\npoints " << s.points << '\n';
        for (std::uint32_t o : sp.opens()) {
          if (o == 0 || o == sp.full()) continue;
          os << "open";
          for (int p : points_of(o)) os << ' ' << p;
          os << '\n';
        }
        break;
      }
      case Document::Kind::Map: {
        const auto& m = doc.maps[en.index];
        sep();
        const DVMap f = map_of(doc, m);
        os << "map " << m.name << " : " << m.dom << " -> " << m.cod << '\n';
        if (f.is_bool_hom()) {
          const BoolHom h = f.as_bool_hom();
          for (int j = 0; j < f.cod().atom_count(); ++j)
            os << "atoms-map " << j << " -> " << h.atom_map()[j] << '\n';
        } else {
          for (AtomSet e : f.dom().base().elements())
            os << "elem " << e.to_string() << " -> " << f(e).to_string()
               << '\n';
        }
        break;
      }
      case Document::Kind::Pair: {
        const auto& p = doc.pairs[en.index];
        sep();
        os << "pair " << p.name << " : " << p.algebra;
        for (const std::string& mn : p.members) os << ' ' << mn;
        os << '\n';
        break;
      }
      case Document::Kind::Extension: {
        const auto& e = doc.extensions[en.index];
        sep();
        os << "extension " << e.name << " : " << e.map << '\n';
        break;
      }
      case Document::Kind::Category:
      case Document::Kind::Functor:
      case Document::Kind::Adjunction: {
        const auto& v = (en.kind == Document::Kind::Category) ? doc.categories
                        : (en.kind == Document::Kind::Functor) ? doc.functors
                                                               : doc.adjunctions;
        const auto& f = v[en.index];
        sep();
        os << kind_word(en.kind) << ' ' << f.name << " :";
        for (const std::string& t : f.args) os << ' ' << t;
        os << '\n';
        break;
      }
    }
  }
  return os.str();
}

}  // namespace dualkit
