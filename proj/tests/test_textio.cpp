#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "dualkit/textio.hpp"

using namespace dualkit;

namespace {
std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}
bool stable(const std::string& text) {
  const std::string once = serialize_document(parse_document(text));
  const std::string twice = serialize_document(parse_document(once));
  return once == twice;
}
}  // namespace

TEST_CASE("algebra blocks parse and annotations fold inline") {
  const Document doc =
      parse_document("algebra A\natoms 2\n\ncontact A 0-1\n");
  REQUIRE(doc.algebras.size() == 1u);
  CHECK(doc.order.size() == 1u);  // the annotation is not a block
  CHECK(doc.algebras[0].atoms == 2);
  CHECK(doc.algebras[0].contact_installed);
  CHECK(doc.algebras[0].contact ==
        std::vector<std::pair<int, int>>{{0, 1}});
  const ContactAlg a = algebra_of(doc, doc.algebras[0]);
  CHECK(a.rel_string() == "0-1");
  const std::string out = serialize_document(doc);
  CHECK(out == "algebra A\natoms 2\ncontact 0-1\n");
  CHECK(stable("algebra A\natoms 2\n\ncontact A 0-1\n"));
}

TEST_CASE("bare contact lines install the overlap relation") {
  const Document doc = parse_document("algebra A\natoms 2\ncontact\n");
  CHECK(doc.algebras[0].contact_installed);
  CHECK(doc.algebras[0].contact.empty());
  CHECK(serialize_document(doc) == "algebra A\natoms 2\ncontact\n");
  // an algebra without any contact line serialises without one
  const Document plain = parse_document("algebra A\natoms 2\n");
  CHECK(!plain.algebras[0].contact_installed);
  CHECK(serialize_document(plain) == "algebra A\natoms 2\n");
}

TEST_CASE("space blocks complete their open families on output") {
  const Document doc =
      parse_document("space S\npoints 3\nopen 0 1\nopen 1 2\n");
  const FinTopSpace x = space_of(doc, doc.spaces[0]);
  CHECK(x.is_open(0b010));  // the intersection appears
  const std::string out = serialize_document(doc);
  CHECK(out.find("open 1\n") != std::string::npos);
  CHECK(stable("space S\npoints 3\nopen 0 1\nopen 1 2\n"));
  // the empty and full sets stay implicit
  CHECK(serialize_document(parse_document("space D\npoints 1\n")) ==
        "space D\npoints 1\n");
}

TEST_CASE("maps round-trip in both styles") {
  const std::string hom =
      "algebra A\natoms 2\n\nmap f : A -> A\natoms-map 0 -> 1\n"
      "atoms-map 1 -> 0\n";
  const Document d1 = parse_document(hom);
  const DVMap f = map_of(d1, d1.maps[0]);
  CHECK(f.is_bool_hom());
  CHECK(f(AtomSet::single(0)) == AtomSet::single(1));
  CHECK(stable(hom));

  // a table that is not a hom keeps its element entries
  const std::string low =
      "algebra T\natoms 2\ncontact 0-1\n\nmap g : T -> T\n"
      "elem {} -> {}\nelem {0} -> {}\nelem {1} -> {}\n"
      "elem {0,1} -> {0,1}\n";
  const Document d2 = parse_document(low);
  const DVMap g = map_of(d2, d2.maps[0]);
  CHECK(!g.is_bool_hom());
  CHECK(serialize_document(d2).find("elem {0,1} -> {0,1}") !=
        std::string::npos);
  CHECK(stable(low));

  // element annotations on a hom map must agree with the atom entries
  CHECK(error_of("algebra A\natoms 1\n\nmap f : A -> A\n"
                 "atoms-map 0 -> 0\nelem {0} -> {}\n")
            .find("disagrees") != std::string::npos);
}

TEST_CASE("forward references resolve after the whole file is read") {
  const std::string text =
      "map f : A -> B\natoms-map 0 -> 0\n\nalgebra A\natoms 1\n\n"
      "algebra B\natoms 1\n";
  const Document doc = parse_document(text);
  CHECK(map_of(doc, doc.maps[0]).dom().atom_count() == 1);
  CHECK(stable(text));
}

TEST_CASE("pairs and extensions are built and validated at parse time") {
  const std::string text =
      "algebra A\natoms 2\n\nalgebra Two\natoms 1\n\n"
      "map f0 : A -> Two\natoms-map 0 -> 0\n\n"
      "map f1 : A -> Two\natoms-map 0 -> 1\n\n"
      "pair P : A f0 f1\n";
  const Document doc = parse_document(text);
  const DeVriesPair p = pair_of(doc, doc.pairs[0]);
  CHECK(p.members.size() == 2u);
  CHECK(stable(text));

  // a pair whose member lives on another algebra is refused
  CHECK(error_of("algebra A\natoms 1\n\nalgebra B\natoms 1\n\n"
                 "map f : B -> B\natoms-map 0 -> 0\n\npair P : A f\n")
            .find("pair") != std::string::npos);

  const std::string ext =
      "algebra A\natoms 2\n\nalgebra PY\natoms 2\n\n"
      "map g : A -> PY\natoms-map 0 -> 0\natoms-map 1 -> 1\n\n"
      "extension E : g\n";
  const Document de = parse_document(ext);
  CHECK(extension_of(de, de.extensions[0]).target().atom_count() == 2);
  CHECK(stable(ext));
}

TEST_CASE("fixture blocks reference built-in constructions") {
  const std::string text =
      "category C : graphs\n\ncategory R : split-retraction\n\n"
      "category S : sets 1 2\n\ncategory B : bools 2\n\n"
      "adjunction W : power-set 2\n\nadjunction I : identity R\n\n"
      "functor F : s W\n\nfunctor G : t W\n";
  const Document doc = parse_document(text);
  CHECK(doc.categories.size() == 4u);
  CHECK(doc.adjunctions.size() == 2u);
  CHECK(doc.functors.size() == 2u);
  for (const auto& c : doc.categories)
    CHECK(fixture_checks(doc, Document::Kind::Category, c).all_pass());
  for (const auto& a : doc.adjunctions)
    CHECK(fixture_checks(doc, Document::Kind::Adjunction, a).all_pass());
  for (const auto& f : doc.functors)
    CHECK(fixture_checks(doc, Document::Kind::Functor, f).all_pass());
  CHECK(stable(text));

  CHECK(error_of("category C : starships\n").find("starships") !=
        std::string::npos);
  CHECK(error_of("category S : sets 1 9\n") != "");
  CHECK(error_of("functor F : s W\n").find("W") != std::string::npos);
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(error_of("algebra A\natoms 2\nfoo bar\n") ==
        "line 3: unknown key 'foo' in algebra block");
  CHECK(error_of("map f : A -> A\natoms-map 0 -> 0\n") ==
        "line 1: map 'f': unknown domain algebra 'A'");
  CHECK(error_of("algebra A\natoms 1\n\nmap f : A -> A\n") ==
        "line 4: map 'f': no entry for element {}");
  CHECK(error_of("algebra A\natoms 2\ncontact 0-1\n\ncontact A 0-1\n") ==
        "line 5: algebra 'A' already carries a contact relation");
  CHECK(error_of("algebra A\natoms 2\n\nalgebra A\natoms 1\n")
            .find("line 4") == 0);
  CHECK(error_of("algebra A\natoms 0\n").find("line 2") == 0);
  CHECK(error_of("algebra A\natoms 2\ncontact 0-5\n") ==
        "line 1: algebra 'A': contact pair outside the declared atoms");
  CHECK(error_of("space S\npoints 2\nopen 7\n").find("line 3") == 0);
  CHECK(error_of("algebra A\n") != "");          // atoms missing
  CHECK(error_of("pair P : \n") != "");          // header too short
  CHECK(error_of("widget W\natoms 1\n").find("widget") !=
        std::string::npos);
}

TEST_CASE("comments and carriage returns are tolerated") {
  const Document doc = parse_document(
      "# leading note\r\nalgebra A # trailing\r\natoms 2\r\n");
  CHECK(doc.algebras[0].atoms == 2);
  CHECK(serialize_document(doc) == "algebra A\natoms 2\n");
}

TEST_CASE("serialisation keeps block order") {
  const std::string text =
      "space S\npoints 1\n\nalgebra A\natoms 1\n\ncategory C : graphs\n";
  const std::string out = serialize_document(parse_document(text));
  CHECK(out.find("space S") < out.find("algebra A"));
  CHECK(out.find("algebra A") < out.find("category C"));
  CHECK(stable(text));
}
