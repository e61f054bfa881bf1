#include "distideal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "distideal/classify.hpp"
#include "distideal/families.hpp"
#include "distideal/ideals.hpp"
#include "distideal/snf.hpp"

namespace distideal {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for malformed input; maps to exit code 1.
class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph6;
  std::string edges_file;
  std::string family;
  std::string ring = "Z";
  std::string index;
  std::string format = "text";
  std::string matrix_kind = "distance";
  std::size_t jobs = 0;
  std::size_t nmax = 6;
  bool allow_large = false;
  bool transforms = false;
};

Json record(std::string_view kind) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = kind;
  return j;
}

Graph read_edges_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open edges file '" + path + "'");
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a = 0;
    if (!(fields >> a)) continue;
    if (!n) {
      if (a < 1) throw BadInput("edges file: vertex count must be positive");
      n = static_cast<std::size_t>(a);
      continue;
    }
    long b = 0;
    if (!(fields >> b) || a < 0 || b < 0) throw BadInput("edges file: bad edge line '" + line + "'");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!n) throw BadInput("edges file: missing vertex count");
  return build_graph(*n, edges);
}

std::optional<Graph> graph_source(const Options& o, std::ostream& err) {
  const int given = !o.graph6.empty() + !o.edges_file.empty() + !o.family.empty();
  if (given == 0) return std::nullopt;
  if (given > 1) err << "note: several graph sources given; using --graph6 > --edges-file > --family\n";
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  if (!o.edges_file.empty()) return read_edges_file(o.edges_file);
  return family(o.family);
}

Graph require_graph(const Options& o, std::ostream& err) {
  auto g = graph_source(o, err);
  if (!g) throw BadInput("a graph is required: --graph6, --edges-file or --family");
  return *g;
}

Graph require_connected_graph(const Options& o, std::ostream& err) {
  auto g = require_graph(o, err);
  if (!is_connected(g)) throw BadInput("graph is not connected");
  return g;
}

CoefficientRing parse_ring(const std::string& text) {
  if (text == "Z") return CoefficientRing::integers;
  if (text == "Q" || text == "R") return CoefficientRing::rationals;
  throw BadInput("--ring must be Z, Q or R");
}

// "3", "1..4" or "0,2,3".
std::vector<std::size_t> parse_indices(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  auto number = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw BadInput("bad index '" + std::string(s) + "'");
    if (value > n) throw BadInput("index " + std::to_string(value) + " exceeds graph order");
    return value;
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto piece = rest.substr(0, comma);
    if (const auto dots = piece.find(".."); dots != std::string_view::npos) {
      const auto lo = number(piece.substr(0, dots));
      const auto hi = number(piece.substr(dots + 2));
      for (auto i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      out.push_back(number(piece));
    }
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

bool json_format(const Options& o) {
  if (o.format != "text" && o.format != "json") throw BadInput("--format must be text or json");
  return o.format == "json";
}

template <class T>
std::string join(const std::vector<T>& items, std::string_view separator) {
  std::ostringstream s;
  for (std::size_t k = 0; k < items.size(); ++k) s << (k ? std::string(separator) : "") << items[k];
  return s.str();
}

template <Coefficient C>
std::vector<std::string> rendered(std::span<const Polynomial<C>> polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> matrix_rows(const SymbolicMatrix& m) {
  std::vector<std::string> rows;
  std::istringstream lines(m.render());
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  return rows;
}

int cmd_matrix(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = require_connected_graph(o, err);
  const auto m = generalized_distance_matrix(g);
  const auto d = distance_matrix(g);
  if (json_format(o)) {
    auto j = record("matrix");
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    j["generalized"] = matrix_rows(m);
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).get_ui());
      rows.push_back(row);
    }
    j["distance"] = rows;
    j["transmissions"] = transmissions(g);
    out << j.dump() << '\n';
  } else {
    out << m.render();
  }
  return kSuccess;
}

template <Coefficient C>
int emit_ideals(const Options& o, const Graph& g, std::ostream& out, std::ostream& err) {
  const MinorLimits limits{o.allow_large};
  std::vector<std::size_t> indices;
  if (!o.index.empty()) {
    indices = parse_indices(o.index, g.order());
    for (auto i : indices) {
      if (!o.allow_large && !within_default_limits(g.order(), i)) {
        throw LimitExceeded("minors of size " + std::to_string(i) + " on a " + std::to_string(g.order()) +
                            "x" + std::to_string(g.order()) +
                            " matrix exceed the default bounds");
      }
    }
  } else {
    for (std::size_t i = 0; i <= g.order(); ++i) {
      if (o.allow_large || within_default_limits(g.order(), i)) {
        indices.push_back(i);
      } else {
        err << "note: skipping size " << i << " (beyond default bounds; pass --allow-large)\n";
      }
    }
  }
  const bool json = json_format(o);
  const auto m = generalized_distance_matrix(g);
  Json j = record("ideals");
  j["graph6"] = to_graph6(g);
  j["ring"] = o.ring;
  j["matrix"] = matrix_rows(m);
  j["ideals"] = Json::array();
  if (!json) out << "distance matrix:\n" << m.render();
  bool verified = true;
  for (auto i : indices) {
    const auto result = distance_ideal<C>(g, i, limits);
    const auto& basis = result.ideal.basis();
    const auto check = verify_basis<C>(basis, result.ideal.generators());
    verified &= check.ok();
    const auto gens = rendered<C>(result.ideal.generators());
    const auto elements = rendered<C>(basis.elements);
    if (json) {
      Json entry;
      entry["i"] = i;
      entry["generators"] = gens;
      entry["groebner_basis"] = elements;
      entry["trivial"] = result.trivial;
      entry["verified"] = check.ok();
      j["ideals"].push_back(entry);
    } else {
      out << "distance ideal of size " << i << " over " << o.ring << ": "
          << (result.trivial ? "trivial" : "nontrivial") << '\n';
      out << "  generators (" << gens.size() << "): " << join(gens, ", ") << '\n';
      out << "  groebner basis: [" << join(elements, ", ") << "]\n";
      if (!check.ok()) out << "  basis verification FAILED\n";
    }
  }
  std::optional<std::size_t> phi;
  try {
    phi = trivial_count_phi<C>(g, std::nullopt, limits);
  } catch (const LimitExceeded&) {
    err << "note: Phi not computed (beyond default bounds; pass --allow-large)\n";
  }
  if (json) {
    j["phi"] = phi ? Json(*phi) : Json(nullptr);
    out << j.dump() << '\n';
  } else if (phi) {
    out << "Phi_" << o.ring << " = " << *phi << '\n';
  }
  return verified ? kSuccess : kVerificationFailed;
}

int cmd_ideals(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = require_connected_graph(o, err);
  return parse_ring(o.ring) == CoefficientRing::integers ? emit_ideals<Integer>(o, g, out, err)
                                                         : emit_ideals<Rational>(o, g, out, err);
}

std::vector<std::string> to_strings(const std::vector<Integer>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

int cmd_snf(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = require_connected_graph(o, err);
  IntegerMatrix a;
  if (o.matrix_kind == "distance") {
    a = distance_matrix(g);
  } else if (o.matrix_kind == "laplacian") {
    a = distance_laplacian(g);
  } else {
    throw BadInput("--matrix must be distance or laplacian");
  }
  const auto result = smith_normal_form(a, o.transforms);
  bool verified = true;
  if (o.transforms) {
    IntegerMatrix diagonal(a.rows(), a.cols());
    for (std::size_t k = 0; k < result.invariant_factors.size(); ++k) diagonal(k, k) = result.invariant_factors[k];
    verified = *result.u * a * *result.v == diagonal && abs(determinant(*result.u)) == 1 &&
               abs(determinant(*result.v)) == 1;
  }
  if (json_format(o)) {
    auto j = record("snf");
    j["graph6"] = to_graph6(g);
    j["matrix_kind"] = o.matrix_kind;
    Json factors = Json::array();
    for (const auto& f : result.invariant_factors) factors.push_back(f.get_str());
    j["invariant_factors"] = factors;
    j["unit_count"] = result.unit_count();
    if (o.transforms) j["transforms_verified"] = verified;
    out << j.dump() << '\n';
  } else {
    out << join(to_strings(result.invariant_factors), " ") << '\n';
    if (o.transforms) out << "transforms " << (verified ? "verified" : "FAILED") << '\n';
  }
  return verified ? kSuccess : kVerificationFailed;
}

int cmd_charpoly(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = require_connected_graph(o, err);
  const auto cp = char_poly_distance(g);
  if (json_format(o)) {
    auto j = record("charpoly");
    j["graph6"] = to_graph6(g);
    j["polynomial"] = cp.polynomial.to_string();
    Json roots = Json::array();
    for (const auto& r : cp.integer_roots) {
      roots.push_back(Json{{"value", r.value.get_str()}, {"multiplicity", r.multiplicity}});
    }
    j["integer_roots"] = roots;
    out << j.dump() << '\n';
  } else {
    out << cp.polynomial.to_string() << '\n';
    out << "integer roots:";
    for (const auto& r : cp.integer_roots) {
      out << ' ' << r.value;
      if (r.multiplicity > 1) out << " (x" << r.multiplicity << ')';
    }
    out << '\n';
  }
  return kSuccess;
}

Json classification_json(const ClassificationReport& r, const std::string& ring) {
  auto j = record("classification");
  j["graph6"] = to_graph6(r.graph);
  j["ring"] = ring;
  j["phi_capped"] = r.phi;
  j["ideal_based"] = r.ideal_based;
  j["forbidden_based"] = r.forbidden_based;
  j["structural"] = r.structural;
  j["agree"] = r.agree();
  return j;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ring = parse_ring(o.ring);
  const bool json = json_format(o);
  if (auto g = graph_source(o, err)) {
    if (!is_connected(*g)) throw BadInput("graph is not connected");
    const auto r = classify(*g, ring);
    if (json) {
      out << classification_json(r, o.ring).dump() << '\n';
    } else {
      out << to_graph6(r.graph) << ": ideal " << r.ideal_based << ", forbidden " << r.forbidden_based
          << ", structural " << r.structural << (r.agree() ? "" : "  DISAGREE") << '\n';
    }
    return r.agree() ? kSuccess : kVerificationFailed;
  }
  if (o.nmax < 1 || o.nmax > 7) throw BadInput("--nmax must be in 1..7");
  const auto report = corpus_report(o.nmax, ring, o.jobs);
  if (json) {
    for (const auto& r : report.reports) out << classification_json(r, o.ring).dump() << '\n';
    auto j = record("classification_summary");
    j["ring"] = o.ring;
    j["n_max"] = o.nmax;
    j["graphs"] = report.graphs();
    j["passing"] = report.passing();
    j["disagreements"] = report.disagreements();
    Json sizes = Json::array();
    for (const auto& s : report.sizes) {
      sizes.push_back(Json{{"order", s.order}, {"graphs", s.graphs}, {"passing", s.passing},
                           {"disagreements", s.disagreements}});
    }
    j["sizes"] = sizes;
    Json minimality = Json::array();
    for (const auto& m : report.minimality) {
      minimality.push_back(Json{{"pattern", pattern_name(m.pattern)},
                                {"phi", m.phi},
                                {"subgraphs_checked", m.subgraphs_checked},
                                {"supergraphs_checked", m.supergraphs_checked},
                                {"ok", m.ok()}});
    }
    j["minimality"] = minimality;
    j["ok"] = report.ok();
    out << j.dump() << '\n';
  } else {
    for (const auto& r : report.reports) {
      if (!r.agree()) out << "disagreement: " << to_graph6(r.graph) << '\n';
    }
    for (const auto& s : report.sizes) {
      out << "n " << s.order << ": pass " << s.passing << '/' << s.graphs << ", disagreements "
          << s.disagreements << '\n';
    }
    out << "all: pass " << report.passing() << '/' << report.graphs() << ", disagreements "
        << report.disagreements() << '\n';
    for (const auto& m : report.minimality) {
      out << "minimal " << pattern_name(m.pattern) << ": Phi " << m.phi << ", "
          << m.subgraphs_checked << " subgraphs, " << m.supergraphs_checked << " corpus supergraphs, "
          << (m.ok() ? "ok" : "FAILED") << '\n';
    }
  }
  return report.ok() ? kSuccess : kVerificationFailed;
}

std::vector<FamilySpec> default_family_suite() {
  std::vector<FamilySpec> specs;
  for (std::size_t n = 1; n <= 5; ++n) specs.push_back({FamilyKind::complete, n, 0});
  for (std::size_t m = 1; m <= 4; ++m) specs.push_back({FamilyKind::star, 0, m});
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) specs.push_back({FamilyKind::mdiag, n, m});
  }
  return specs;
}

int cmd_families_verify(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<FamilySpec> specs;
  if (o.family.empty()) {
    specs = default_family_suite();
  } else {
    specs.push_back(parse_family_spec(o.family));
  }
  const bool json = json_format(o);
  bool all_ok = true;
  Json rows = Json::array();
  for (const auto& spec : specs) {
    const auto report = verify_family(spec, o.allow_large);
    all_ok &= report.ok();
    for (const auto& c : report.checks) {
      if (json) {
        rows.push_back(Json{{"family", to_string(spec)},
                            {"k", c.k},
                            {"closed_form_generators", c.closed_form_generators},
                            {"minor_generators", c.minor_generators},
                            {"equal", c.equal}});
      } else {
        out << to_string(spec) << " k=" << c.k << " closed " << c.closed_form_generators << " minors "
            << c.minor_generators << ' ' << (c.equal ? "equal" : "DIFFERENT") << '\n';
      }
    }
  }
  if (json) {
    auto j = record("families");
    j["checks"] = rows;
    j["ok"] = all_ok;
    out << j.dump() << '\n';
  } else {
    out << (all_ok ? "all families verified" : "family verification FAILED") << '\n';
  }
  return all_ok ? kSuccess : kVerificationFailed;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream&) {
  if (o.nmax < 1 || o.nmax > 7) throw BadInput("--nmax must be in 1..7");
  const bool json = json_format(o);
  std::vector<std::size_t> counts(o.nmax, 0);
  for (const auto& g : enumerate_connected(o.nmax)) {
    ++counts[g.order() - 1];
    if (json) {
      auto j = record("corpus_graph");
      j["graph6"] = to_graph6(g);
      j["order"] = g.order();
      j["edges"] = g.size();
      j["diameter"] = all_pairs_distances(g).diameter();
      j["phi_unit_count"] = phi_unit_count(g);
      out << j.dump() << '\n';
    } else {
      out << to_graph6(g) << '\n';
    }
  }
  if (json) {
    auto j = record("corpus_summary");
    j["n_max"] = o.nmax;
    j["counts"] = counts;
    out << j.dump() << '\n';
  } else {
    out << "counts: " << join(counts, " ") << '\n';
  }
  return kSuccess;
}

void add_graph_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph6", o.graph6, "graph in graph6 format");
  cmd->add_option("--edges-file", o.edges_file, "file: vertex count, then one 'u v' pair per line");
  cmd->add_option("--family", o.family, "e.g. cycle:4, star:3, complete_bipartite:2:3");
}

void add_format_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const char* env_jobs = std::getenv("DISTIDEAL_JOBS");
  CLI::App app{"Distance ideals of graphs over Z and Q", "distideal"};
  app.require_subcommand(1);

  auto* matrix = app.add_subcommand("matrix", "generalized distance matrix");
  add_graph_options(matrix, o);
  add_format_option(matrix, o);

  auto* ideals = app.add_subcommand("ideals", "distance ideals and their Groebner bases");
  add_graph_options(ideals, o);
  add_format_option(ideals, o);
  ideals->add_option("--ring", o.ring, "Z, Q or R (R is computed over Q)");
  ideals->add_option("--index", o.index, "sizes: 2, 1..3 or 0,2 (default: all within bounds)");
  ideals->add_flag("--allow-large", o.allow_large, "lift the minor enumeration bounds");

  auto* snf = app.add_subcommand("snf", "Smith normal form of the distance matrix");
  add_graph_options(snf, o);
  add_format_option(snf, o);
  snf->add_option("--matrix", o.matrix_kind, "distance or laplacian");
  snf->add_flag("--transforms", o.transforms, "compute and check unimodular transforms");

  auto* charpoly = app.add_subcommand("charpoly", "distance characteristic polynomial");
  add_graph_options(charpoly, o);
  add_format_option(charpoly, o);

  auto* classify_cmd = app.add_subcommand("classify", "at most one trivial distance ideal");
  add_graph_options(classify_cmd, o);
  add_format_option(classify_cmd, o);
  classify_cmd->add_option("--ring", o.ring, "Z, Q or R");
  classify_cmd->add_option("--nmax", o.nmax, "corpus bound, 1..7 (default 6)");
  classify_cmd->add_option("--jobs", o.jobs, "worker threads (default DISTIDEAL_JOBS or all cores)");

  auto* families = app.add_subcommand("families", "closed-form generator families");
  families->require_subcommand(1);
  auto* verify = families->add_subcommand("verify", "compare closed forms with brute-force minors");
  verify->add_option("--family", o.family, "complete:N, mdiag:N:M or star:M (default: full suite)");
  verify->add_flag("--allow-large", o.allow_large, "lift the verification bounds");
  add_format_option(verify, o);

  auto* corpus = app.add_subcommand("corpus", "connected graphs up to isomorphism");
  corpus->add_option("--nmax", o.nmax, "largest order, 1..7 (default 6)");
  add_format_option(corpus, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    app.exit(e, help_out, err);
    return kBadInput;
  }
  if (o.jobs == 0 && env_jobs != nullptr) o.jobs = default_jobs();

  try {
    if (matrix->parsed()) return cmd_matrix(o, out, err);
    if (ideals->parsed()) return cmd_ideals(o, out, err);
    if (snf->parsed()) return cmd_snf(o, out, err);
    if (charpoly->parsed()) return cmd_charpoly(o, out, err);
    if (classify_cmd->parsed()) return cmd_classify(o, out, err);
    if (verify->parsed()) return cmd_families_verify(o, out, err);
    if (corpus->parsed()) return cmd_corpus(o, out, err);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << " (pass --allow-large to override)\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace distideal
