#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "monoconn/bounds.hpp"
#include "monoconn/constructions.hpp"
#include "monoconn/extractors.hpp"
#include "monoconn/io.hpp"
#include "monoconn/oracle.hpp"
#include "monoconn/search.hpp"
#include "report.hpp"

namespace {

using namespace monoconn;
using cli::Json;

enum Exit { kOk = 0, kParse = 1, kHypothesis = 2, kInternal = 3, kResource = 4 };

struct Common {
  bool json = false;
};

void emit(const Json& report, const Common& common, const std::string& summary = {}) {
  if (common.json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (!summary.empty()) std::cout << summary << "\n";
  std::cout << cli::to_text(report);
}

const ColouredCompleteGraph& need_complete(const ColouringFile& file, const std::string& method) {
  if (!file.complete) throw PreconditionError(method + " needs a complete colouring (ECG file)");
  return *file.complete;
}

const ColouredBipartiteGraph& need_bipartite(const ColouringFile& file, const std::string& method) {
  if (!file.bipartite) throw PreconditionError(method + " needs a bipartite colouring (ECB file)");
  return *file.bipartite;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int n = 0, m = 0, r = 0, k = 0;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  ConstructionReport rep;
  if (a.kind == "bg")
    rep = construct_bg(a.n, a.k);
  else if (a.kind == "affine")
    rep = construct_affine(a.n, a.r, a.k);
  else if (a.kind == "hamzero")
    rep = construct_hamzero(a.n, a.r, a.k);
  else
    rep = construct_bipartite_modular(a.m, a.n, a.r);
  const std::string text = serialise(to_file(rep));
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot write " + a.out);
    f << text;
  }
  return kOk;
}

// --- extract ---------------------------------------------------------------

struct ExtractArgs {
  std::string method;
  std::string file;
  int k = 1;
  int colour = 1;
  int ell = 0;
  int q = 0;
  bool alpha = false;
};

// Re-checks the witness at emit time instead of trusting the extractor.
bool recheck(const ColouringFile& file, const ExtractArgs& a, const SubgraphWitness& w) {
  if (file.complete && !w.colours.empty()) return verify_witness(*file.complete, w);
  SimpleGraph g = file.complete ? file.complete->colour_graph(a.colour) : file.bipartite->colour_graph(a.colour);
  return w.order() >= w.k + 1 && is_k_connected(g.induced_by_labels(w.vertices), w.k).connected;
}

int run_extract(const ExtractArgs& a, const Common& common) {
  const auto file = read_colouring(a.file);
  const auto start = std::chrono::steady_clock::now();
  ExtractionReport rep;
  const std::string& m = a.method;
  if (m == "degs") {
    rep = extract_degs(need_complete(file, m), a.k, a.colour);
  } else if (m == "thm21k") {
    rep = extract_thm21k(need_complete(file, m), a.k, a.alpha);
  } else if (m == "mader") {
    const auto& f = need_complete(file, m);
    detail::require(a.colour >= 1 && a.colour <= f.colours(), "colour outside 1..r");
    rep = extract_mader(f.colour_graph(a.colour), a.k);
  } else if (m == "r11") {
    rep = extract_r11(need_complete(file, m));
  } else if (m == "r1kbip") {
    const auto& b = need_bipartite(file, m);
    detail::require(a.colour >= 1 && a.colour <= b.colours(), "colour outside 1..r");
    std::vector<int> left(b.left()), right(b.right());
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), b.left());
    auto got = extract_r1kbip(b.colour_graph(a.colour), left, right, a.ell, a.q);
    if (!got) throw PreconditionError("refused: " + got.refusal);
    rep = *got.report;
  } else if (m == "31kbip") {
    rep = extract_31kbip(need_bipartite(file, m), a.k);
  } else if (m == "thmr1k") {
    rep = extract_thm_r1k(need_complete(file, m), a.k);
  } else {
    rep = extract_thm31k(need_complete(file, m), a.k);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool verified = recheck(file, a, rep.witness);
  Json report{{"method", m}, {"file", a.file}};
  if (file.complete)
    report["n"] = file.complete->order(), report["r"] = file.complete->colours();
  else
    report["m"] = file.bipartite->left(), report["n"] = file.bipartite->right(), report["r"] = file.bipartite->colours();
  report["k"] = rep.witness.k;
  Json body = cli::to_json(rep);
  report["witness"] = body["witness"];
  report["guarantee"] = body["guarantee"];
  report["verified"] = verified;
  report["stats"] = body["stats"];
  report["trace"] = body["trace"];
  report["wall_time_ms"] = ms;
  emit(report, common);
  if (!verified) throw InvariantError("witness failed verification at emit time");
  return kOk;
}

// --- oracle / bounds / search ------------------------------------------------

struct OracleArgs {
  std::string file;
  int k = 1;
  int s = 1;
  int max_n = 0;
  bool colour_restricted = false;
};

int run_oracle(const OracleArgs& a, const Common& common) {
  const auto file = read_colouring(a.file);
  const auto& f = need_complete(file, "oracle");
  OracleOptions opt;
  if (a.max_n > 0) opt.max_n = a.max_n;
  opt.colour_restricted = a.colour_restricted;
  const auto start = std::chrono::steady_clock::now();
  const OracleResult res = exact_M(f, a.k, a.s, opt);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json report{{"file", a.file}, {"n", f.order()}, {"r", f.colours()}, {"k", a.k}, {"s", a.s}, {"M", res.M}};
  report["witness"] = res.witness ? cli::to_json(*res.witness) : Json(nullptr);
  report["verified"] = res.witness ? verify_witness(f, *res.witness) : true;
  report["wall_time_ms"] = ms;
  emit(report, common, "M = " + std::to_string(res.M));
  return kOk;
}

int run_bounds(int n, int r, int k, const Common& common) {
  detail::require(n >= 1 && r >= 1 && k >= 1, "n, r and k must be positive");
  const auto row = theorem_bounds(n, r, k);
  std::string summary = "lower " + std::to_string(row.lower.value) + " upper " + std::to_string(row.upper.value) + " (" +
                        row.lower.source;
  if (row.upper.source != row.lower.source) summary += "; " + row.upper.source;
  summary += ")";
  emit(cli::to_json(row), common, summary);
  return kOk;
}

struct SearchArgs {
  int n = 0, r = 2, k = 1, s = 1;
  long long iters = 10000;
  std::uint64_t seed = 1;
  std::string start;
  std::string out;
};

int run_search(const SearchArgs& a, const Common& common) {
  SearchOptions opt;
  opt.iterations = a.iters;
  opt.seed = a.seed;
  if (!a.start.empty()) opt.start = need_complete(read_colouring(a.start), "search --start");
  const auto st = adversarial_search(a.n, a.r, a.k, a.s, opt);
  Json report{{"n", a.n}, {"r", a.r}, {"k", a.k}, {"s", a.s}};
  report.update(cli::to_json(st));
  if (!a.out.empty()) {
    ColouringFile file;
    file.comments.push_back(" search seed " + std::to_string(a.seed) + " M " + std::to_string(st.M));
    file.complete = st.colouring;
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot write " + a.out);
    f << serialise(file);
    report["colouring"] = a.out;
  }
  emit(report, common, std::string(st.surrogate ? "surrogate M = " : "M = ") + std::to_string(st.M));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic k-connected subgraphs: constructions, extractors, oracle, bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit structured JSON instead of key-value text");

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "Emit an extremal colouring as an .ecg/.ecb file");
  construct->add_option("kind", cons.kind, "bg | affine | hamzero | bipmod")
      ->required()
      ->check(CLI::IsMember({"bg", "affine", "hamzero", "bipmod"}));
  construct->add_option("--n", cons.n, "Vertices (bipmod: size of the second part)")->required();
  construct->add_option("--m", cons.m, "bipmod: size of the first part");
  construct->add_option("--r", cons.r, "Colours");
  construct->add_option("--k", cons.k, "Connectivity");
  construct->add_option("--out", cons.out, "Write to this file instead of stdout");

  ExtractArgs ext;
  auto* extract = app.add_subcommand("extract", "Run a proof-derived extractor on a colouring file");
  extract->add_option("method", ext.method)
      ->required()
      ->check(CLI::IsMember({"degs", "thm21k", "mader", "r11", "r1kbip", "31kbip", "thmr1k", "thm31k"}));
  extract->add_option("--file", ext.file)->required();
  extract->add_option("--k", ext.k, "Connectivity (r1kbip: ignored, uses --ell)");
  extract->add_option("--colour", ext.colour, "degs: the red colour; mader, r1kbip: colour class to use");
  extract->add_option("--ell", ext.ell, "r1kbip: the cut size ell");
  extract->add_option("--q", ext.q, "r1kbip: target order q");
  extract->add_flag("--alpha", ext.alpha, "thm21k: use the (9+sqrt10)k threshold (k >= 18)");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exact M(f,n,r,s,k) by subset enumeration");
  oracle->add_option("--file", orc.file)->required();
  oracle->add_option("--k", orc.k);
  oracle->add_option("--s", orc.s);
  oracle->add_option("--max-n", orc.max_n, "Enumeration limit (default 16 or MONOCONN_ORACLE_MAX_N)");
  oracle->add_flag("--colour-restricted", orc.colour_restricted, "Enumerate inside k-core components per colour set");

  int bn = 0, br = 0, bk = 1;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds on m(n,r,1,k)");
  bounds->add_option("--n", bn)->required();
  bounds->add_option("--r", br)->required();
  bounds->add_option("--k", bk)->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Annealing search for colourings with small M");
  search->add_option("--n", sa.n)->required();
  search->add_option("--r", sa.r);
  search->add_option("--k", sa.k);
  search->add_option("--s", sa.s);
  search->add_option("--iters", sa.iters);
  search->add_option("--seed", sa.seed);
  search->add_option("--start", sa.start, "Start from the colouring in this .ecg file");
  search->add_option("--out", sa.out, "Write the best colouring here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*construct) return run_construct(cons);
    if (*extract) return run_extract(ext, common);
    if (*oracle) return run_oracle(orc, common);
    if (*bounds) return run_bounds(bn, br, bk, common);
    return run_search(sa, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failed (bug): " << e.what() << "\n";
    return kInternal;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
}
