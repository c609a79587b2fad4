// acyclic: command-line front end over the graph, SNF, spectrum and audit
// libraries. See `acyclic --help` for verbs and exit codes.

#include "acyclic/auditor.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/path_cover.hpp"
#include "acyclic/smith.hpp"
#include "acyclic/spectra.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace acyclic;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kPrecondition = 3, kSizeCap = 4, kOther = 5 };

const char* kExitCodes =
    "Exit codes:\n"
    "  0  success, every requested check passed\n"
    "  1  a check or audit reported a violation\n"
    "  2  usage error or unparsable input file\n"
    "  3  precondition failed (disconnected graph, not a tree, matrix not in S(G), ...)\n"
    "  4  brute-force size cap exceeded (raise with ACYCLIC_SPECTRA_MAX_N)\n"
    "  5  any other error\n";

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const std::exception& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

Graph read_graph(const std::string& path) { return parse_file(path, parse_graph); }

std::string join_path(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

Integer ceil_int(const Rational& r) { return ceil_of(r); }

// ---- analyze ----------------------------------------------------------------

int run_analyze(const Globals& g, const std::string& file, bool brute) {
  const Graph graph = read_graph(file);
  if (graph.n() == 0 || !is_connected(graph)) throw std::invalid_argument("graph is disconnected");
  const bool tree = is_tree(graph);
  const int d = diameter(graph);
  Json j = {{"n", graph.n()}, {"is_tree", tree}, {"d", d}};
  std::ostringstream line;
  line << "n=" << graph.n() << " tree=" << (tree ? "yes" : "no");
  std::vector<std::string> extra;

  if (tree) {
    const PathCover pc = path_cover_number(graph);
    if (brute && path_cover_number_bruteforce(graph) != pc.number)
      throw std::logic_error("greedy path cover disagrees with brute force");
    Integer q_lower = d + 1;
    Json witness = Json::array();
    for (const auto& p : pc.witness.paths) witness.push_back(p);
    j["p"] = pc.number;
    j["witness"] = witness;
    j["M_upper"] = pc.number;
    line << " p=" << pc.number << " d=" << d;
    if (const auto w = detect_whirl(graph); w && w->k >= 3 && w->l >= 2) {
      const Rational bound = whirl_q_bound(w->k, w->l, d);
      q_lower = std::max(q_lower, ceil_int(bound));
      j["whirl"] = {{"k", w->k}, {"l", w->l}, {"bound", to_string(bound)}};
      extra.push_back("whirl k=" + std::to_string(w->k) + " l=" + std::to_string(w->l) + " bound=" + to_string(bound));
    } else if (w) {
      j["whirl"] = {{"k", w->k}, {"l", w->l}};
      extra.push_back("whirl k=" + std::to_string(w->k) + " l=" + std::to_string(w->l));
    }
    j["q_lower"] = q_lower.get_si();
    line << " q_lower=" << q_lower << " M_upper=" << pc.number;
    std::string paths;
    for (const auto& p : pc.witness.paths) paths += (paths.empty() ? "" : " | ") + join_path(p);
    extra.insert(extra.begin(), "witness " + paths);
  } else {
    line << " d=" << d;
  }

  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << line.str() << "\n";
    for (const auto& e : extra) std::cout << e << "\n";
  }
  return kOk;
}

// ---- snf --------------------------------------------------------------------

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

int run_snf(const Globals& g, const std::string& file, bool no_witness, bool from_rational) {
  const PolyMatrix m = from_rational ? characteristic_matrix(parse_file(file, parse_rat_matrix))
                                     : parse_file(file, parse_poly_matrix);
  const SnfResult snf = smith_normal_form(m, {!no_witness, !no_witness});
  if (g.json) {
    Json factors = Json::array();
    for (const auto& e : snf.invariant_factors) factors.push_back(to_string(e));
    Json j = {{"rows", m.rows()}, {"cols", m.cols()}, {"rank", snf.rank()}, {"invariant_factors", factors}};
    if (!no_witness) {
      j["P"] = matrix_json(snf.P);
      j["Q"] = matrix_json(snf.Q);
      j["verified"] = true;
    }
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "rank " << snf.rank() << "\n";
  for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i)
    std::cout << "e" << i + 1 << " = " << to_string(snf.invariant_factors[i]) << "\n";
  if (!no_witness) {
    std::cout << "P\n" << format_poly_matrix(snf.P) << "Q\n" << format_poly_matrix(snf.Q);
    std::cout << "verified P*M*Q = S\n";
  }
  return kOk;
}

// ---- eig --------------------------------------------------------------------

int run_eig(const Globals& g, const std::string& file) {
  const RatMatrix a = parse_file(file, parse_rat_matrix);
  if (!a.is_square() || !a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  const EigenStructure e = eigen_structure(a);
  const Poly minpoly = minimal_polynomial(a);
  if (g.json) {
    Json j = Json::parse(eigen_structure_json(e));
    j["minpoly"] = to_string(minpoly);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "charpoly " << to_string(e.charpoly) << "\n";
  std::cout << "minpoly " << to_string(minpoly) << "\n";
  std::cout << "q " << e.q << "\n";
  std::cout << "mults";
  for (int m : e.multiplicities()) std::cout << " " << m;
  std::cout << "\n";
  for (const auto& grp : e.groups) {
    std::cout << "root ";
    if (grp.root.is_exact()) std::cout << to_string(grp.root.lo);
    else std::cout << "(" << to_string(grp.root.lo) << ", " << to_string(grp.root.hi) << ")";
    std::cout << " mult " << grp.multiplicity << " factor " << to_string(grp.factor) << "\n";
  }
  return kOk;
}

// ---- gen --------------------------------------------------------------------

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kParse;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseFailure("expected an integer, got '" + s + "'");
}

void print_graph(const Globals& g, const Graph& graph) {
  if (!g.json) {
    std::cout << format_graph(graph);
    return;
  }
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  std::cout << Json{{"n", graph.n()}, {"edges", edges}}.dump() << "\n";
}

int run_gen(const Globals& g, const std::string& family, const std::vector<std::string>& params, bool symmetric,
            const std::string& pool_text) {
  const auto need = [&](std::size_t count, const char* shape) {
    if (params.size() != count) throw ParseFailure(std::string("usage: gen ") + shape);
  };
  if (family == "path") {
    need(1, "path N");
    print_graph(g, path_tree(to_int(params[0])).graph());
  } else if (family == "star") {
    need(1, "star LEAVES");
    print_graph(g, star_tree(to_int(params[0])).graph());
  } else if (family == "random") {
    need(1, "random N");
    print_graph(g, random_tree(to_int(params[0]), g.seed).graph());
  } else if (family == "whirl") {
    need(2, "whirl K L");
    print_graph(g, whirl(to_int(params[0]), to_int(params[1])).graph);
  } else if (family == "figure2") {
    need(0, "figure2");
    print_graph(g, figure2_tree().graph());
  } else if (family == "figure6") {
    need(0, "figure6");
    print_graph(g, figure6_tree().graph());
  } else if (family == "figure14") {
    need(5, "figure14 H_FILE V1 V2 V3 L");
    const Graph h = read_graph(params[0]);
    print_graph(g, figure14_graph(h, {to_int(params[1]), to_int(params[2]), to_int(params[3])}, to_int(params[4])).graph);
  } else if (family == "sample") {
    need(1, "sample GRAPH_FILE");
    const Graph graph = read_graph(params[0]);
    EntryPool pool;
    try {
      pool = parse_entry_pool(pool_text);
    } catch (const std::exception& e) {
      throw ParseFailure(e.what());
    }
    if (symmetric && !is_tree(graph)) throw std::invalid_argument("--symmetric needs a tree");
    const RatMatrix a = symmetric ? sample_S_symmetric(Tree(graph), g.seed, pool) : sample_S(graph, g.seed, pool);
    if (g.json) {
      Json rows = Json::array();
      for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < a.cols(); ++k) row.push_back(to_string(a(i, k)));
        rows.push_back(row);
      }
      std::cout << Json{{"n", a.rows()}, {"rows", rows}}.dump() << "\n";
    } else {
      std::cout << format_rat_matrix(a);
    }
  } else {
    return usage_error("unknown family '" + family + "' (path, star, random, whirl, figure2, figure6, figure14, sample)");
  }
  return kOk;
}

// ---- audit ------------------------------------------------------------------

void print_report_text(const AuditReport& r) {
  std::cout << r.claim << " checked=" << r.checked << " violations=" << r.violations.size()
            << " passed=" << (r.passed() ? "true" : "false") << "\n";
  for (const auto& v : r.violations)
    std::cout << "  violation " << v.instance << ": expected " << v.expected << ", observed " << v.observed << "\n";
  for (const auto& n : r.notes) std::cout << "  note " << n << "\n";
}

int run_audit(const Globals& g, const std::string& claim, int seeds, const std::string& pool_text, bool parallel,
              int sizes) {
  BatchOptions o;
  o.seeds = seeds;
  o.base_seed = g.seed;
  o.exec = parallel ? Exec::Parallel : Exec::Serial;
  o.max_tree = sizes;
  try {
    o.pool = parse_entry_pool(pool_text);
  } catch (const std::exception& e) {
    throw ParseFailure(e.what());
  }
  if (sizes < 2) throw ParseFailure("--sizes must be at least 2");

  std::vector<std::string> claims;
  if (claim == "all") claims = claim_ids();
  else if (std::find(claim_ids().begin(), claim_ids().end(), claim) != claim_ids().end()) claims = {claim};
  else return usage_error("unknown claim '" + claim + "'");

  bool ok = true;
  Json all = Json::array();
  for (const auto& c : claims) {
    const AuditReport r = run_claim(c, o);
    ok = ok && r.passed();
    if (g.json) all.push_back(Json::parse(report_json(r)));
    else print_report_text(r);
  }
  if (g.json) std::cout << (claims.size() == 1 ? all[0] : all).dump() << "\n";
  return ok ? kOk : kCheckFailed;
}

// ---- screen -----------------------------------------------------------------

std::vector<int> parse_mults(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw ParseFailure("empty multiplicity list");
  return out;
}

int run_screen(const Globals& g, const std::string& file, const std::string& list) {
  const Graph graph = read_graph(file);
  const std::vector<int> mults = parse_mults(list);
  if (!is_tree(graph)) throw std::invalid_argument("screening needs a tree");
  const AuditReport r = screen_multiplicity_list(Tree(graph), mults);
  if (g.json) std::cout << report_json(r) << "\n";
  else if (r.passed()) std::cout << "pass " << list << "\n";
  else std::cout << "fail " << list << ": expected " << r.violations[0].expected << ", got " << r.violations[0].observed << "\n";
  return r.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral tools for acyclic symmetric matrices"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for sampling and audit batches")->capture_default_str();

  std::string file, list, claim = "all", family, pool = "5";
  std::vector<std::string> params;
  bool brute = false, no_witness = false, rational = false, parallel = false, symmetric = false;
  int seeds = 200, sizes = 12;

  auto* analyze = app.add_subcommand("analyze", "Diameter, path cover number and derived bounds of a graph");
  analyze->add_option("graph", file, "Graph file")->required();
  analyze->add_flag("--brute", brute, "Cross-check p(T) by exhaustive enumeration (size capped)");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a polynomial matrix, with witnesses");
  snf->add_option("matrix", file, "Polynomial matrix file")->required();
  snf->add_flag("--no-witness", no_witness, "Skip accumulating and verifying P and Q");
  snf->add_flag("--charmatrix", rational, "Read a rational matrix A and use xI - A");

  auto* eig = app.add_subcommand("eig", "Eigen structure of a rational symmetric matrix");
  eig->add_option("matrix", file, "Rational matrix file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a graph family, or sample a matrix in S(G)");
  gen->add_option("family", family, "path | star | random | whirl | figure2 | figure6 | figure14 | sample")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_flag("--symmetric", symmetric, "sample: copy weights across isomorphic branches");
  gen->add_option("--pool", pool, "sample: entry pool R or R/D")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Run a theorem audit over seeded instances");
  audit->add_option("claim", claim, "Claim id or 'all'")->capture_default_str();
  audit->add_option("--seeds", seeds, "Seeds per claim")->capture_default_str()->check(CLI::NonNegativeNumber);
  audit->add_option("--pool", pool, "Entry pool R or R/D")->capture_default_str();
  audit->add_option("--sizes", sizes, "Largest random tree order")->capture_default_str();
  audit->add_flag("--parallel", parallel, "Fan seeds out over OpenMP threads");

  auto* screen = app.add_subcommand("screen", "Screen a multiplicity list against necessary conditions");
  screen->add_option("graph", file, "Tree file")->required();
  screen->add_option("mults", list, "Comma-separated multiplicities, e.g. 1,2,4,2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze) return run_analyze(g, file, brute);
    if (*snf) return run_snf(g, file, no_witness, rational);
    if (*eig) return run_eig(g, file);
    if (*gen) return run_gen(g, family, params, symmetric, pool);
    if (*audit) return run_audit(g, claim, seeds, pool, parallel, sizes);
    if (*screen) return run_screen(g, file, list);
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
