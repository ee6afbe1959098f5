#include "hypersym/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>

#include "hypersym/determinant.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/group_analysis.hpp"
#include "hypersym/hypergraph_file.hpp"
#include "hypersym/oracle.hpp"
#include "hypersym/verify.hpp"

namespace hypersym {
namespace {

enum class Method { Initiators, Leibniz, Brute };
enum class Format { TwoRow, Cycles, Map, Count };

struct EngineFlags {
  Method method = Method::Initiators;
  RowOrder order = RowOrder::Greedy;
  std::size_t max_arity = kDefaultMaxArity;
  std::size_t max_expand = kDefaultExpansionCap;
  std::size_t max_leibniz = kDefaultLeibnizDim;
  std::size_t max_ground = 8;

  AutOptions aut_options(bool expand) const {
    AutOptions o;
    o.method = method == Method::Leibniz ? DetMethod::Leibniz : DetMethod::Initiators;
    o.row_order = order;
    o.max_arity = max_arity;
    o.max_expand = max_expand;
    o.max_leibniz_dim = max_leibniz;
    o.expand = expand;
    return o;
  }

  oracle::OracleConfig oracle_config() const {
    oracle::OracleConfig c;
    c.max_ground_size = max_ground;
    return c;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f, bool with_brute) {
  std::map<std::string, Method> methods{{"initiators", Method::Initiators},
                                        {"leibniz", Method::Leibniz}};
  if (with_brute) methods.emplace("brute", Method::Brute);
  cmd->add_option("--method", f.method, "Determinant engine")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  cmd->add_option("--order-heuristic", f.order, "Initiator row order")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RowOrder>{{"greedy", RowOrder::Greedy},
                                          {"given", RowOrder::Given}},
          CLI::ignore_case));
  cmd->add_option("--max-arity", f.max_arity, "Largest edge arity for brackets");
  cmd->add_option("--max-expand", f.max_expand,
                  "Largest number of permutations to expand");
  cmd->add_option("--max-leibniz", f.max_leibniz,
                  "Largest matrix dimension for the Leibniz engine");
  cmd->add_option("--max-ground", f.max_ground,
                  "Largest ground set for the brute-force oracle (<= 10)");
}

std::string format_element(const Permutation& p, Format fmt, const GroundSet& from,
                           const GroundSet& to) {
  switch (fmt) {
    case Format::Cycles: return format_cycles(p, from);
    case Format::Map: return format_map(p, from, to);
    default: return format_two_row(p, from, to);
  }
}

int cmd_aut(const std::string& path, const EngineFlags& f, bool list, Format fmt,
            std::ostream& out) {
  const Hypergraph g = parse_hypergraph_file(path);
  std::optional<PermSet> elements;
  Count order;
  if (f.method == Method::Brute) {
    elements = oracle::brute_aut(g, f.oracle_config());
    order = elements->size();
  } else {
    AutResult r = aut(g, f.aut_options(list && fmt != Format::Count));
    order = r.order;
    elements = std::move(r.elements);
  }
  if (fmt == Format::Count) {
    out << order << '\n';
    return kExitOk;
  }
  out << "order: " << order << '\n';
  if (list) {
    for (const auto& p : *elements) {
      out << format_element(p, fmt, g.ground(), g.ground()) << '\n';
    }
  }
  return kExitOk;
}

int cmd_iso(const std::string& path1, const std::string& path2, const EngineFlags& f,
            bool list, Format fmt, std::ostream& out) {
  const Hypergraph g1 = parse_hypergraph_file(path1);
  const Hypergraph g2 = parse_hypergraph_file(path2);
  std::optional<PermSet> bijections;
  Count count;
  if (f.method == Method::Brute) {
    bijections = oracle::brute_iso(g1, g2, f.oracle_config());
    count = bijections->size();
  } else {
    IsoResult r = iso(g1, g2, f.aut_options(list && fmt != Format::Count));
    count = r.count;
    bijections = std::move(r.bijections);
  }
  if (fmt == Format::Count) {
    out << count << '\n';
  } else {
    out << "isomorphisms: " << count << '\n';
    if (list) {
      for (const auto& p : *bijections) {
        out << format_element(p, fmt, g1.ground(), g2.ground()) << '\n';
      }
    }
  }
  return count == 0 ? kExitNotIsomorphic : kExitOk;
}

int cmd_det(const std::string& path, const EngineFlags& f, std::ostream& out) {
  const Hypergraph g = parse_hypergraph_file(path);
  const AutResult r = aut(g, f.aut_options(false));
  out << "terms: " << r.determinant.term_count() << '\n';
  if (r.determinant.is_zero()) out << "0\n";
  for (const auto& t : r.determinant.terms()) {
    out << format_partial(t, g.ground(), g.ground()) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const EngineFlags& f, std::ostream& out) {
  const Hypergraph g = parse_hypergraph_file(path);
  VerifyOptions vo;
  vo.oracle = f.oracle_config();
  vo.max_arity = f.max_arity;
  vo.max_expand = f.max_expand;
  bool all = true;
  for (const auto& c : verify_instance(g, vo)) {
    all = all && c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return all ? kExitOk : kExitNotIsomorphic;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Automorphism groups and isomorphisms of hypergraphs via "
               "determinants over the Ring of Partials",
               "hypersym"};
  app.require_subcommand(1);

  EngineFlags flags;
  bool list = false;
  std::string file1;
  std::string file2;
  std::map<std::string, Format> aut_formats{
      {"tworow", Format::TwoRow}, {"cycles", Format::Cycles}, {"count", Format::Count}};
  std::map<std::string, Format> iso_formats{
      {"map", Format::Map}, {"tworow", Format::TwoRow}, {"count", Format::Count}};
  Format aut_format = Format::Cycles;
  Format iso_format = Format::Map;

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of a hypergraph");
  aut_cmd->add_option("file", file1, "Hypergraph file")->required();
  aut_cmd->add_flag("--list", list, "Print every automorphism");
  aut_cmd->add_option("--format", aut_format, "tworow, cycles or count")
      ->transform(CLI::CheckedTransformer(aut_formats, CLI::ignore_case));
  add_engine_flags(aut_cmd, flags, true);

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphisms between two hypergraphs");
  iso_cmd->add_option("file1", file1, "Source hypergraph")->required();
  iso_cmd->add_option("file2", file2, "Target hypergraph")->required();
  iso_cmd->add_flag("--list", list, "Print every isomorphism");
  iso_cmd->add_option("--format", iso_format, "map, tworow or count")
      ->transform(CLI::CheckedTransformer(iso_formats, CLI::ignore_case));
  add_engine_flags(iso_cmd, flags, true);

  auto* det_cmd = app.add_subcommand("det", "Print the determinant of the canonical matrix");
  det_cmd->add_option("file", file1, "Hypergraph file")->required();
  add_engine_flags(det_cmd, flags, false);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the determinant and group identities against brute force");
  verify_cmd->add_option("file", file1, "Hypergraph file")->required();
  add_engine_flags(verify_cmd, flags, false);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (aut_cmd->parsed()) return cmd_aut(file1, flags, list, aut_format, out);
    if (iso_cmd->parsed()) return cmd_iso(file1, file2, flags, list, iso_format, out);
    if (det_cmd->parsed()) return cmd_det(file1, flags, out);
    if (verify_cmd->parsed()) return cmd_verify(file1, flags, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return is_cap_error(e.code()) ? kExitCapExceeded : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace hypersym
