#include "mso_cli/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mso/mso.hpp"

namespace mso::cli {
namespace {

using Json = nlohmann::ordered_json;

struct InputOptions {
  std::string g6;
  std::string json;
  std::string family;
};

struct OutputOptions {
  std::string format = "text";
  int digits = 6;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "Graph in graph6 format");
  auto* json = cmd->add_option("--json", in.json, "Multigraph JSON, inline or a file path");
  auto* family = cmd->add_option("--family", in.family, "Named family, e.g. path:5, kbip:2:3, broom:64:12, fig1");
  g6->excludes(json)->excludes(family);
  json->excludes(family);
}

void add_output_options(CLI::App* cmd, OutputOptions& out, std::vector<std::string> formats) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--digits", out.digits, "Decimal digits in rendered values")->check(CLI::Range(1, 60));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MultiGraph load_input(const InputOptions& in) {
  if (!in.g6.empty()) return parse_graph6(in.g6);
  if (!in.json.empty()) {
    const auto first = in.json.find_first_not_of(" \t\r\n");
    const bool inline_text = first != std::string::npos && in.json[first] == '{';
    return parse_multigraph_json(inline_text ? in.json : read_file(in.json));
  }
  if (!in.family.empty()) return parse_family_spec(in.family);
  throw Error(ErrorKind::InvalidSpec, "one of --g6, --json or --family is required");
}

std::string describe(const MultiGraph& g) { return g.is_simple() && g.order() <= 62 ? to_graph6(g) : to_multigraph_json(g); }

std::string coefficient_list(const IntPolynomial& p) {
  std::string s;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(p.degree(), 0L)); ++k) {
    if (k) s += ' ';
    s += p.coeff(k).get_str();
  }
  return s;
}

void print_row(std::ostream& out, std::string_view label, const std::string& value) {
  out << std::left << std::setw(12) << label << ' ' << value << '\n';
}

void print_rational(std::ostream& out, std::string_view label, const Rational& q, int digits) {
  out << std::left << std::setw(12) << label << ' ' << q.str() << "  " << to_decimal(q, digits) << '\n';
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t arity, std::string_view what) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::size_t value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw Error(ErrorKind::InvalidSpec, std::string(what) + " expects comma-separated integers, got '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  if (out.size() < arity || out.size() > arity + 1) {
    throw Error(ErrorKind::InvalidSpec, std::string(what) + " has the wrong number of fields: '" + text + "'");
  }
  return out;
}

/// Trees go through the rooted DP, which has no order limit.
SubtreeProfile global_profile(const MultiGraph& g) {
  if (g.order() > 0 && is_tree(g)) return tree_subtree_polynomial(g);
  return subtree_polynomial(g);
}

int cmd_compute(const InputOptions& in, const OutputOptions& fmt, std::ostream& out) {
  const MultiGraph g = load_input(in);
  const SubtreeProfile p = global_profile(g);
  if (fmt.format == "json") {
    out << profile_to_json(p, fmt.digits);
    return 0;
  }
  print_row(out, "graph", describe(g));
  print_row(out, "order", std::to_string(p.order));
  print_row(out, "edges", std::to_string(g.size()));
  print_row(out, "S(x)", p.poly.str());
  print_row(out, "coeffs", coefficient_list(p.poly));
  print_row(out, "S(1)", p.total.get_str());
  print_row(out, "S'(1)", p.weight.get_str());
  print_rational(out, "mean", p.mean, fmt.digits);
  print_rational(out, "density", p.density, fmt.digits);
  print_row(out, "spanning", p.spanning_count.get_str());
  print_rational(out, "P(G)", p.spanning_proportion, fmt.digits);
  return 0;
}

int cmd_local(const InputOptions& in, const OutputOptions& fmt, const std::optional<std::size_t>& vertex,
              const std::string& edge, std::ostream& out) {
  const MultiGraph g = load_input(in);
  if (vertex.has_value() == !edge.empty()) throw Error(ErrorKind::InvalidSpec, "give exactly one of --vertex or --edge");
  LocalProfile p;
  if (vertex) {
    p = g.order() > 0 && is_tree(g) ? tree_local_polynomial_vertex(g, *vertex) : local_polynomial_vertex(g, *vertex);
  } else {
    const auto f = parse_index_list(edge, 2, "--edge");
    p = local_polynomial_edge(g, Edge{f[0], f[1], f.size() > 2 ? static_cast<std::uint32_t>(f[2]) : 0u});
  }
  if (fmt.format == "json") {
    out << local_profile_to_json(p, fmt.digits);
    return 0;
  }
  print_row(out, "graph", describe(g));
  if (const auto* v = std::get_if<Vertex>(&p.anchor)) {
    print_row(out, "vertex", std::to_string(*v));
  } else {
    const auto& e = std::get<Edge>(p.anchor);
    print_row(out, "edge", std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.copy));
  }
  print_row(out, "S(x)", p.poly.str());
  print_row(out, "coeffs", coefficient_list(p.poly));
  print_row(out, "S(1)", eval_at_one(p.poly).get_str());
  print_row(out, "S'(1)", deriv_at_one(p.poly).get_str());
  print_rational(out, "mean", p.mean, fmt.digits);
  print_rational(out, "density", p.density, fmt.digits);
  return 0;
}

int cmd_scan(const InputOptions& in, const OutputOptions& fmt, std::ostream& out) {
  const MultiGraph g = load_input(in);
  const EdgeScanResult scan = scan_edge_additions(g);
  if (fmt.format == "json") {
    out << scan_to_json(scan, fmt.digits);
    return 0;
  }
  if (fmt.format == "csv") {
    out << "u,v,new_mean,new_mean_decimal,delta,delta_decimal\n";
    for (const auto& pr : scan.per_pair) {
      out << pr.u << ',' << pr.v << ',' << pr.new_mean.str() << ',' << to_decimal(pr.new_mean, fmt.digits) << ','
          << pr.delta.str() << ',' << to_decimal(pr.delta, fmt.digits) << '\n';
    }
    return 0;
  }
  print_row(out, "graph", scan.graph6);
  print_rational(out, "mean", scan.base_mean, fmt.digits);
  for (const auto& pr : scan.per_pair) {
    out << "add " << pr.u << ' ' << pr.v << "  mean " << pr.new_mean.str() << "  delta " << pr.delta.str() << "  "
        << to_decimal(pr.delta, fmt.digits) << (pr.delta.sign() < 0 ? "  decrease" : "") << '\n';
  }
  std::size_t decreases = 0;
  for (const auto& pr : scan.per_pair) decreases += pr.delta.sign() < 0 ? 1 : 0;
  out << scan.per_pair.size() << " non-edges, " << decreases << (decreases == 1 ? " decrease" : " decreases") << '\n';
  return 0;
}

std::string plural(std::size_t k, std::string_view word) {
  return std::to_string(k) + " " + std::string(word) + (k == 1 ? "" : "s");
}

std::string summary_line(const SearchReport& r, int digits) {
  std::ostringstream s;
  s << "order " << r.order << ' ' << to_string(r.mode) << ": " << r.graphs_scanned << " graphs scanned, ";
  switch (r.mode) {
    case SearchMode::Conjecture1:
      s << plural(r.counterexample_count, "counterexample") << ", max decrease " << r.max_decrease.str() << " ("
        << to_decimal(r.max_decrease, digits) << ")";
      break;
    case SearchMode::Conjecture2:
      s << plural(r.conjecture2_violations.size(), "violation");
      break;
    default:
      s << plural(r.counterexample_count, "failure");
      break;
  }
  return s.str();
}

struct SearchArgs {
  std::size_t order = 0;
  std::string mode;
  std::string out_path;
  std::size_t workers = 0;
  bool deterministic = false;
};

int cmd_search(const SearchArgs& args, const OutputOptions& fmt, std::ostream& out, std::ostream& err) {
  SearchOptions options;
  options.workers = args.workers ? args.workers : std::max(1u, std::thread::hardware_concurrency());
  const SearchMode mode = parse_search_mode(args.mode);
  err << "mso: searching order " << args.order << " (" << to_string(mode) << ") with " << options.workers
      << " workers\n";
  SearchReport report = run_search(mode, args.order, options);
  if (args.deterministic) report.elapsed_ms = 0;
  if (!args.out_path.empty()) {
    persist_report(report, args.out_path);
    err << "mso: wrote " << args.out_path << " and " << witness_file_path(args.out_path) << '\n';
  }
  if (fmt.format == "json") out << report_to_json(report);
  else out << summary_line(report, fmt.digits) << '\n';
  return 0;
}

int cmd_verify(const InputOptions& in, const std::string& mode_text, const OutputOptions& fmt, std::ostream& out) {
  const MultiGraph g = load_input(in);
  const SearchMode mode = parse_search_mode(mode_text);
  Json doc;
  doc["graph"] = describe(g);
  doc["mode"] = std::string(to_string(mode));
  auto put = [&](const char* key, const Rational& q) {
    doc[key] = q.str();
    doc[std::string(key) + "_decimal"] = to_decimal(q, fmt.digits);
  };
  auto edge_text = [](const Edge& e) {
    return std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.copy);
  };
  switch (mode) {
    case SearchMode::Lemma4: {
      const auto w = verify_edge_deletion_lemma(g);
      doc["edge"] = edge_text(w.edge);
      put("local_mean", w.local_mean);
      put("mean", w.mean);
      put("reduced_mean", w.reduced_mean);
      break;
    }
    case SearchMode::Proposition: {
      const auto r = verify_parallel_edge_proposition(g);
      doc["edge"] = edge_text(r.edge);
      doc["augmented"] = to_multigraph_json(r.augmented);
      put("old_mean", r.old_mean);
      put("new_mean", r.new_mean);
      break;
    }
    case SearchMode::TreeTheorem: {
      const auto c = verify_tree_theorem(g);
      doc["u"] = c.construction.u;
      doc["v"] = c.construction.v;
      doc["w"] = c.construction.w;
      doc["p"] = c.construction.p;
      doc["q"] = c.construction.q;
      doc["augmented"] = to_graph6(c.construction.augmented);
      put("tree_mean", c.tree_mean);
      put("augmented_mean", c.augmented_mean);
      put("edge_local_mean", c.edge_local_mean);
      put("vertex_local_mean", c.vertex_local_mean);
      break;
    }
    case SearchMode::Conjecture1:
    case SearchMode::Conjecture2: {
      const auto scan = scan_edge_additions(g);
      put("mean", scan.base_mean);
      doc["any_increase"] = scan.any_increase;
      doc["any_decrease"] = scan.any_decrease;
      if (scan.worst_delta) put("worst_delta", *scan.worst_delta);
      break;
    }
  }
  doc["holds"] = mode == SearchMode::Conjecture1   ? !doc["any_decrease"].get<bool>()
                 : mode == SearchMode::Conjecture2 ? doc["any_increase"].get<bool>() || g.size() * 2 == g.order() * (g.order() - 1)
                                                   : true;
  if (fmt.format == "json") {
    out << doc.dump(2) << '\n';
    return 0;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key.ends_with("_decimal")) continue;
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (const auto dec = doc.find(key + "_decimal"); dec != doc.end()) text += "  " + dec->get<std::string>();
    print_row(out, key, text);
  }
  return 0;
}

int cmd_family(const std::string& spec, const std::string& format, std::ostream& out) {
  const MultiGraph g = parse_family_spec(spec);
  if (format == "json" || !g.is_simple() || g.order() > 62) out << to_multigraph_json(g) << '\n';
  else out << to_graph6(g) << '\n';
  return 0;
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> fields;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto colon = std::min(text.find(':', pos), text.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + colon, value);
    if (ec != std::errc{} || ptr != text.data() + colon) {
      throw Error(ErrorKind::InvalidSpec, "--range expects FIRST:LAST[:STEP], got '" + text + "'");
    }
    fields.push_back(value);
    pos = colon + 1;
  }
  if (fields.size() < 2 || fields.size() > 3 || fields[0] > fields[1] || (fields.size() == 3 && fields[2] == 0)) {
    throw Error(ErrorKind::InvalidSpec, "--range expects FIRST:LAST[:STEP], got '" + text + "'");
  }
  const std::size_t step = fields.size() == 3 ? fields[2] : 1;
  std::vector<std::size_t> ns;
  for (std::size_t n = fields[0]; n <= fields[1]; n += step) ns.push_back(n);
  return ns;
}

struct TrendArgs {
  std::string table;
  std::vector<std::size_t> ns;
  std::string range;
  std::size_t workers = 0;
};

int cmd_trends(const TrendArgs& args, const OutputOptions& fmt, std::ostream& out) {
  std::vector<std::size_t> ns = args.ns;
  if (!args.range.empty()) {
    const auto more = parse_range(args.range);
    ns.insert(ns.end(), more.begin(), more.end());
  }
  if (ns.empty()) {
    if (args.table == "broom-gap") ns = {1024, 2048, 4096};
    else if (args.table == "path-cycle-gap") ns = {3, 10, 50, 100, 200};
    else ns = {8, 9, 10, 11, 12, 13, 14};
  }
  const std::size_t workers = args.workers ? args.workers : std::max(1u, std::thread::hardware_concurrency());
  std::vector<TrendRow> rows;
  if (args.table == "broom-gap") rows = density_gap_table(ns, workers);
  else if (args.table == "path-cycle-gap") rows = path_cycle_gap_table(ns, workers);
  else rows = hn_gap_table(ns, workers);
  out << (fmt.format == "json" ? trend_json(rows, fmt.digits) : trend_csv(rows, fmt.digits));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subtree polynomials and mean subtree order of graphs", "mso"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1, 1);

  InputOptions in;
  OutputOptions fmt;

  auto* compute = app.add_subcommand("compute", "Subtree polynomial, mean, density and spanning proportion");
  add_input_options(compute, in);
  add_output_options(compute, fmt, {"text", "json"});

  auto* local = app.add_subcommand("local", "Local subtree polynomial at a vertex or edge");
  add_input_options(local, in);
  add_output_options(local, fmt, {"text", "json"});
  std::optional<std::size_t> vertex;
  std::string edge;
  local->add_option("--vertex", vertex, "Anchor vertex");
  local->add_option("--edge", edge, "Anchor edge as U,V or U,V,COPY");

  auto* scan = app.add_subcommand("scan", "Change in mean for every single-edge addition");
  add_input_options(scan, in);
  add_output_options(scan, fmt, {"text", "json", "csv"});

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exhaustive census search over one order");
  search->add_option("--order", search_args.order, "Graph order")->required();
  search->add_option("--mode", search_args.mode, "conjecture1, conjecture2, lemma4, proposition or tree-theorem")
      ->required();
  search->add_option("--out", search_args.out_path, "Report JSON path; witnesses go next to it as .g6");
  search->add_option("--workers", search_args.workers, "Worker threads (default: hardware concurrency)");
  search->add_flag("--deterministic", search_args.deterministic, "Write elapsed_ms as 0");
  add_output_options(search, fmt, {"text", "json"});

  std::string verify_mode;
  auto* verify = app.add_subcommand("verify", "Check one statement on a single graph");
  add_input_options(verify, in);
  verify->add_option("--mode", verify_mode, "lemma4, proposition, tree-theorem, conjecture1 or conjecture2")
      ->required();
  add_output_options(verify, fmt, {"text", "json"});

  std::string family_spec;
  std::string family_format = "g6";
  auto* family = app.add_subcommand("family", "Print a named family member");
  family->add_option("--family", family_spec, "Family spec")->required();
  family->add_option("--format", family_format, "Output format")->check(CLI::IsMember({"g6", "json"}));

  TrendArgs trend_args;
  auto* trends = app.add_subcommand("trends", "Exact density trend tables");
  trends->add_option("--table", trend_args.table, "broom-gap, path-cycle-gap or hn-gap")
      ->required()
      ->check(CLI::IsMember({"broom-gap", "path-cycle-gap", "hn-gap"}));
  trends->add_option("--n", trend_args.ns, "Orders to tabulate")->delimiter(',');
  trends->add_option("--range", trend_args.range, "Orders FIRST:LAST[:STEP]");
  trends->add_option("--workers", trend_args.workers, "Worker threads");
  add_output_options(trends, fmt, {"csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*compute) return cmd_compute(in, fmt, out);
    if (*local) return cmd_local(in, fmt, vertex, edge, out);
    if (*scan) return cmd_scan(in, fmt, out);
    if (*search) return cmd_search(search_args, fmt, out, err);
    if (*verify) return cmd_verify(in, verify_mode, fmt, out);
    if (*family) return cmd_family(family_spec, family_format, out);
    if (*trends) {
      if (fmt.format == "text") fmt.format = "csv";
      return cmd_trends(trend_args, fmt, out);
    }
  } catch (const Error& e) {
    err << "mso: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mso: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace mso::cli
