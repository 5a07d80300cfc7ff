#include "dualkit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualkit/contact.hpp"
#include "dualkit/devries.hpp"
#include "dualkit/pipelines.hpp"
#include "dualkit/rc.hpp"
#include "dualkit/report.hpp"
#include "dualkit/suites.hpp"
#include "dualkit/textio.hpp"

namespace dualkit {
namespace {

void usage(std::ostream& os) {
  os << "usage: dualkit <subcommand> [args]\n"
        "\n"
        "  check-axioms FILE                 axiom profile of every algebra "
        "block\n"
        "  clusters FILE                     cluster listing per algebra "
        "(atoms <= 4)\n"
        "  dualize FILE                      append the dual of every block\n"
        "  verify SUITE [--max-atoms N] [--max-points N] [--seed S]\n"
        "  survey-normal N                   axiom table over all relations "
        "on N atoms\n"
        "\n"
        "suites:";
  for (const std::string& s : suite_names()) os << ' ' << s;
  os << '\n';
}

Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(what + " wants an integer, got '" + s + "'");
  }
}

int cmd_check_axioms(const std::string& path, std::ostream& out) {
  const Document doc = load(path);
  bool all = true;
  bool seen = false;
  for (const auto& en : doc.order) {
    if (en.kind != Document::Kind::Algebra) continue;
    const auto& blk = doc.algebras[en.index];
    if (seen) out << '\n';
    seen = true;
    const ContactAlg alg = algebra_of(doc, blk);
    out << "algebra " << blk.name << " [" << alg.rel_string() << "]\n";
    const Report r = check_axioms(alg).as_report(blk.name);
    out << render_report(r);
    if (!r.all_pass()) all = false;
  }
  if (!seen) out << "no algebra blocks\n";
  return all ? 0 : 1;
}

int cmd_clusters(const std::string& path, std::ostream& out) {
  const Document doc = load(path);
  bool all = true;
  bool seen = false;
  for (const auto& en : doc.order) {
    if (en.kind != Document::Kind::Algebra) continue;
    const auto& blk = doc.algebras[en.index];
    if (blk.atoms > 4)
      throw ValidationError("clusters: algebra '" + blk.name +
                            "' is too large (atoms > 4)");
    if (seen) out << '\n';
    seen = true;
    const ContactAlg alg = algebra_of(doc, blk);
    out << "algebra " << blk.name << " [" << alg.rel_string() << "]\n";
    const ClusterEnumeration en2 = clusters(alg);
    for (std::size_t i = 0; i < en2.brute.size(); ++i)
      out << "cluster " << i << ' ' << en2.brute[i].to_string() << '\n';
    out << "count " << en2.brute.size() << '\n';
    out << render_report(en2.checks);
    if (!en2.checks.all_pass()) all = false;
  }
  if (!seen) out << "no algebra blocks\n";
  return all ? 0 : 1;
}

void push(Document& doc, Document::Algebra blk) {
  doc.algebras.push_back(std::move(blk));
  doc.order.push_back(
      {Document::Kind::Algebra, static_cast<int>(doc.algebras.size()) - 1});
}
void push(Document& doc, Document::Space blk) {
  doc.spaces.push_back(std::move(blk));
  doc.order.push_back(
      {Document::Kind::Space, static_cast<int>(doc.spaces.size()) - 1});
}
void push(Document& doc, Document::MapBlock blk) {
  doc.maps.push_back(std::move(blk));
  doc.order.push_back(
      {Document::Kind::Map, static_cast<int>(doc.maps.size()) - 1});
}
void push(Document& doc, Document::PairBlock blk) {
  doc.pairs.push_back(std::move(blk));
  doc.order.push_back(
      {Document::Kind::Pair, static_cast<int>(doc.pairs.size()) - 1});
}
void push(Document& doc, Document::ExtensionBlock blk) {
  doc.extensions.push_back(std::move(blk));
  doc.order.push_back(
      {Document::Kind::Extension, static_cast<int>(doc.extensions.size()) - 1});
}

// Emits the input unchanged followed by the dual of every block: algebras
// become their spectra (ultrafilter space, or cluster space once a contact
// relation is installed), spaces become their regular-closed algebras, maps
// their transforms, pairs their induced extensions and extensions their
// trace pairs.  Fixture blocks are carried through without a counterpart.
int cmd_dualize(const std::string& path, std::ostream& out) {
  const Document doc = load(path);
  for (const auto& blk : doc.algebras)
    if (blk.atoms > 6)
      throw ValidationError("dualize: algebra '" + blk.name +
                            "' is too large (atoms > 6)");
  for (const auto& blk : doc.spaces)
    if (blk.points > 6)
      throw ValidationError("dualize: space '" + blk.name +
                            "' is too large (points > 6)");

  Document outdoc = doc;
  for (const auto& en : doc.order) {
    switch (en.kind) {
      case Document::Kind::Algebra: {
        const auto& blk = doc.algebras[en.index];
        if (!blk.contact_installed) {
          Document::Space sp{"Ult(" + blk.name + ")", blk.atoms, {}, 0};
          for (int i = 0; i < blk.atoms; ++i) sp.opens.push_back(1u << i);
          push(outdoc, std::move(sp));
        } else {
          const ClustSpace cs = clust_space(algebra_of(doc, blk));
          push(outdoc,
               Document::Space{"Clust(" + blk.name + ")",
                               cs.topology.point_count(), cs.topology.opens(),
                               0});
        }
        break;
      }
      case Document::Kind::Space: {
        const auto& blk = doc.spaces[en.index];
        const RCAlgebra rc = rc_algebra(space_of(doc, blk));
        push(outdoc, Document::Algebra{"RC(" + blk.name + ")",
                                       rc.algebra.atom_count(),
                                       rc.contact.off_diagonal_pairs(), true,
                                       0});
        break;
      }
      case Document::Kind::Map: {
        const auto& blk = doc.maps[en.index];
        const DVMap tf = dv_transform(map_of(doc, blk));
        Document::MapBlock mb{blk.name + "^", blk.dom, blk.cod, {}, {}, 0};
        for (AtomSet a : tf.dom().base().elements())
          mb.elems.emplace_back(a.bits(), tf(a).bits());
        push(outdoc, std::move(mb));
        break;
      }
      case Document::Kind::Pair: {
        const auto& blk = doc.pairs[en.index];
        const BooleanDVExtension ext = booleanize(pair_of(doc, blk));
        const std::string target = "P(" + blk.name + ")";
        push(outdoc, Document::Algebra{target, ext.target().atom_count(),
                                       {}, false, 0});
        Document::MapBlock mb{"g(" + blk.name + ")", blk.algebra, target,
                              {}, {}, 0};
        for (AtomSet a : ext.source().base().elements())
          mb.elems.emplace_back(a.bits(), ext.gamma(a).bits());
        push(outdoc, std::move(mb));
        push(outdoc,
             Document::ExtensionBlock{"ext(" + blk.name + ")",
                                      "g(" + blk.name + ")", 0});
        break;
      }
      case Document::Kind::Extension: {
        const auto& blk = doc.extensions[en.index];
        const BooleanDVExtension ext = extension_of(doc, blk);
        const std::string dom = doc.find_map(blk.map)->dom;
        const std::string two = "Two(" + blk.name + ")";
        push(outdoc, Document::Algebra{two, 1, {}, false, 0});
        Document::PairBlock pb{"tr(" + blk.name + ")", dom, {}, 0};
        for (int y = 0; y < ext.target().atom_count(); ++y) {
          Document::MapBlock mb{
              "x" + std::to_string(y) + "(" + blk.name + ")", dom, two,
              {}, {}, 0};
          for (AtomSet a : ext.source().base().elements())
            mb.elems.emplace_back(a.bits(),
                                  ext.gamma(a).contains(y) ? 1u : 0u);
          pb.members.push_back(mb.name);
          push(outdoc, std::move(mb));
        }
        push(outdoc, std::move(pb));
        break;
      }
      default:
        break;  // category, functor, adjunction: nothing to dualize
    }
  }

  const std::string text = serialize_document(outdoc);
  parse_document(text);  // revalidates generated names and shapes
  out << text;
  return 0;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
  const std::string& suite = args[1];
  SuiteOptions opt;
  for (std::size_t i = 2; i < args.size(); i += 2) {
    const std::string& flag = args[i];
    if (i + 1 >= args.size())
      throw ValidationError("flag " + flag + " wants a value");
    const int v = parse_int(args[i + 1], flag);
    if (flag == "--max-atoms")
      opt.max_atoms = v;
    else if (flag == "--max-points")
      opt.max_points = v;
    else if (flag == "--seed")
      opt.seed = static_cast<unsigned>(v);
    else
      throw ValidationError("unknown flag " + flag);
  }
  const Report r = run_suite(suite, opt);
  out << render_report(r);
  return r.all_pass() ? 0 : 1;
}

int cmd_survey(const std::string& arg, std::ostream& out) {
  const int n = parse_int(arg, "survey-normal");
  if (n < 1 || n > 4)
    throw ValidationError("survey-normal: atom count must be 1..4");
  const SurveyTable t = collapse_survey(n);
  for (const SurveyRow& row : t.rows) {
    out << row.relation;
    for (int i = 0; i < 6; ++i)
      out << " C" << i + 1 << '=' << (row.axiom[i] ? "yes" : "no");
    out << " normal=" << (row.normal ? "yes" : "no") << '\n';
  }
  out << "normal " << t.normal_count << " of " << t.rows.size() << '\n';
  out << render_report(t.checks);
  return t.checks.all_pass() ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  if (args.empty()) {
    usage(err);
    return 2;
  }
  const std::string& cmd = args[0];
  if (cmd == "help" || cmd == "-h" || cmd == "--help") {
    usage(out);
    return 0;
  }
  if (cmd == "check-axioms" || cmd == "clusters" || cmd == "dualize") {
    if (args.size() != 2) {
      err << "usage: dualkit " << cmd << " FILE\n";
      return 2;
    }
    if (cmd == "check-axioms") return cmd_check_axioms(args[1], out);
    if (cmd == "clusters") return cmd_clusters(args[1], out);
    return cmd_dualize(args[1], out);
  }
  if (cmd == "verify") {
    if (args.size() < 2) {
      err << "usage: dualkit verify SUITE [--max-atoms N] [--max-points N] "
             "[--seed S]\n";
      return 2;
    }
    return cmd_verify(args, out);
  }
  if (cmd == "survey-normal") {
    if (args.size() != 2) {
      err << "usage: dualkit survey-normal N\n";
      return 2;
    }
    return cmd_survey(args[1], out);
  }
  err << "unknown subcommand '" << cmd << "'\n";
  usage(err);
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const TheoremViolation& e) {
    err << "violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dualkit
