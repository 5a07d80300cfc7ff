#ifndef DUALKIT_TEXTIO_HPP
#define DUALKIT_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dualkit/contact.hpp"
#include "dualkit/devries.hpp"
#include "dualkit/fintop.hpp"
#include "dualkit/pipelines.hpp"

namespace dualkit {

// A parsed file.  Blocks keep their order of appearance; a standalone
// contact block is folded into the algebra it annotates at parse time and
// does not survive as a block of its own.
struct Document {
  enum class Kind {
    Algebra,
    Space,
    Map,
    Pair,
    Extension,
    Category,
    Functor,
    Adjunction
  };

  struct Algebra {
    std::string name;
    int atoms = 1;
    std::vector<std::pair<int, int>> contact;
    bool contact_installed = false;
    int line = 0;
  };
  struct Space {
    std::string name;
    int points = 1;
    std::vector<std::uint32_t> opens;
    int line = 0;
  };
  struct MapBlock {
    std::string name, dom, cod;
    // element entries: domain element bits -> codomain element bits
    std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;
    // atom entries: codomain atom -> domain atom (the dual direction)
    std::vector<std::pair<int, int>> atom_entries;
    int line = 0;
  };
  struct PairBlock {
    std::string name, algebra;
    std::vector<std::string> members;
    int line = 0;
  };
  struct ExtensionBlock {
    std::string name, map;
    int line = 0;
  };
  // category, functor and adjunction blocks: a named reference to a built-in
  // construction, e.g.  "category C : graphs"  or  "adjunction P : power-set 3".
  struct FixtureBlock {
    std::string name;
    std::vector<std::string> args;
    int line = 0;
  };

  struct Entry {
    Kind kind;
    int index;
  };

  std::vector<Entry> order;
  std::vector<Algebra> algebras;
  std::vector<Space> spaces;
  std::vector<MapBlock> maps;
  std::vector<PairBlock> pairs;
  std::vector<ExtensionBlock> extensions;
  std::vector<FixtureBlock> categories, functors, adjunctions;

  const Algebra* find_algebra(const std::string& name) const;
  const Space* find_space(const std::string& name) const;
  const MapBlock* find_map(const std::string& name) const;
};

// Line-oriented format.  A block starts with "<kind> <name>"; body lines are
// "key value...": "atoms n", "contact i-j ...", "points n", "open i j ..."
// (one open set per line), "elem {i,j} -> {k}", "atoms-map j -> i".  Map,
// pair, extension and fixture headers carry their references after a colon,
// as in "map f : A -> B".  Blank lines separate blocks, "#" starts a
// comment, all indices are 0-based and contact pairs are unordered.
//
// Throws ValidationError with a line-numbered message.  Every block and
// cross-reference is built once during parsing, so structural problems
// surface here rather than in a later subcommand.
Document parse_document(const std::string& text);

// Canonical rendering: contact inlined into the algebra block, open families
// completed, Boolean maps written as atom entries and everything else as
// element entries.  parse(serialize(parse(t))) == parse(t).
std::string serialize_document(const Document& doc);

// Builders for the checked objects behind a document.
ContactAlg algebra_of(const Document& doc, const Document::Algebra& blk);
FinTopSpace space_of(const Document& doc, const Document::Space& blk);
DVMap map_of(const Document& doc, const Document::MapBlock& blk);
DeVriesPair pair_of(const Document& doc, const Document::PairBlock& blk);
BooleanDVExtension extension_of(const Document& doc,
                                const Document::ExtensionBlock& blk);

// Builds the referenced fixture and returns its own findings (category
// validation, adjunction checks, functor laws).
Report fixture_checks(const Document& doc, Document::Kind kind,
                      const Document::FixtureBlock& blk);

}  // namespace dualkit

#endif
