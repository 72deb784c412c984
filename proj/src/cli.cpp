#include "treebound/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "treebound/bounds.hpp"
#include "treebound/enumerate.hpp"
#include "treebound/invariants.hpp"
#include "treebound/metric_dimension.hpp"
#include "treebound/tree.hpp"
#include "treebound/verify.hpp"

namespace treebound {

namespace {

constexpr const char* kErratumNote =
    "Note: the path-graph closed form used for M2 is 4n-8; the 2n-8 sometimes "
    "quoted for it fails direct computation at every n >= 3 (P_3 gives 4).";

constexpr const char* kEdgeListHelp =
    "Edge-list input: one edge per line as \"u v\" with 0-based contiguous "
    "vertex ids; '#' starts a comment line; blank lines are ignored.";

Tree load_tree(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_edge_list(text);
}

EpsMethod parse_method(const std::string& name) {
  if (name == "brute") return EpsMethod::BruteForce;
  if (name == "tree") return EpsMethod::TreeFormula;
  return EpsMethod::Both;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

int run_enum(int n, const std::string& format, std::ostream& out) {
  TreeEnumerator gen(n);
  if (format == "levels") {
    for (const CanonicalCode& code : gen.codes()) {
      out << code.to_string(',') << '\n';
    }
  } else {
    bool first = true;
    while (auto t = gen.next()) {
      if (!first) out << '\n';
      first = false;
      for (const auto& [u, v] : t->edges()) out << u << ' ' << v << '\n';
    }
  }
  return 0;
}

int run_indices(const std::string& input, std::istream& in,
                std::ostream& out) {
  const Tree t = load_tree(input, in);
  out << "n=" << t.order() << " m1=" << first_zagreb(t)
      << " m2=" << second_zagreb(t) << " abc=" << format_double(abc_index(t))
      << '\n';
  return 0;
}

int run_metric_dim(const std::string& input, const std::string& method,
                   bool no_leaf_prune, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  const Tree t = load_tree(input, in);
  const EpsMethod m = parse_method(method);
  BruteForceOptions opts;
  opts.leaves_only = !no_leaf_prune;

  ResolvingResult result;
  if (m == EpsMethod::TreeFormula) {
    result = metric_dimension_tree(t);
  } else if (m == EpsMethod::BruteForce) {
    result = metric_dimension_bruteforce(t, opts);
  } else {
    const ResolvingResult brute = metric_dimension_bruteforce(t, opts);
    const ResolvingResult formula = metric_dimension_tree(t);
    if (brute.eps != formula.eps) {
      err << "method disagreement: brute=" << brute.eps
          << " tree=" << formula.eps << '\n';
      return 2;
    }
    result = brute;
    result.method = EpsMethod::Both;
  }
  out << "eps=" << result.eps << " witness=" << join_ints(result.witness)
      << " method=" << to_string(result.method) << '\n';
  return 0;
}

int run_bounds(const std::string& input, const std::string& method,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const Tree t = load_tree(input, in);
  const EpsMethod m = parse_method(method);
  int eps = 0;
  if (m == EpsMethod::TreeFormula) {
    eps = metric_dimension_tree(t).eps;
  } else if (m == EpsMethod::BruteForce) {
    eps = metric_dimension_bruteforce(t).eps;
  } else {
    const int brute = metric_dimension_bruteforce(t).eps;
    const int formula = metric_dimension_tree(t).eps;
    if (brute != formula) {
      err << "method disagreement: brute=" << brute << " tree=" << formula
          << '\n';
      return 2;
    }
    eps = brute;
  }
  const InvariantRecord rec{t.order(), eps, first_zagreb(t), second_zagreb(t),
                            abc_index(t)};
  out << "n=" << rec.n << " eps=" << rec.eps << " m1=" << rec.m1
      << " m2=" << rec.m2 << " abc=" << format_double(rec.abc) << '\n';
  bool violated = false;
  for (const BoundEvaluation& e : evaluate_bounds(rec)) {
    out << "theorem=" << to_string(e.theorem)
        << " bound=" << format_double(e.bound_value)
        << " observed=" << format_double(e.observed)
        << " slack=" << format_double(e.slack)
        << " equality=" << (e.equality ? 1 : 0)
        << " violation=" << (e.violation ? 1 : 0) << '\n';
    violated = violated || e.violation;
  }
  return violated ? 2 : 0;
}

int run_lemma_scan(int lemma, double x_max, double y_max, double step,
                   int jobs, std::ostream& out) {
  const LemmaGrid grid{x_max, y_max, step};
  const LemmaScanReport rep =
      lemma_scan(static_cast<Lemma>(lemma), grid, jobs);
  out << "lemma=" << lemma << '\n';
  out << "points=" << rep.points << '\n';
  out << "violations=" << rep.violations << '\n';
  out << "threshold=" << format_double(rep.threshold) << '\n';
  out << "min=" << format_double(rep.min_value) << '\n';
  out << "min_x=" << format_double(rep.min_x) << '\n';
  out << "min_y=" << format_double(rep.min_y) << '\n';
  out << "max=" << format_double(rep.max_value) << '\n';
  out << "max_x=" << format_double(rep.max_x) << '\n';
  out << "max_y=" << format_double(rep.max_y) << '\n';
  if (rep.has_violation) {
    out << "first_violation_x=" << format_double(rep.violation_x) << '\n';
    out << "first_violation_y=" << format_double(rep.violation_y) << '\n';
    out << "first_violation_value=" << format_double(rep.violation_value)
        << '\n';
  }
  return 0;
}

int run_verify(int min_n, int max_n, const std::string& method,
               const std::string& out_path, int jobs, std::ostream& out) {
  const SweepResult result =
      sweep(min_n, max_n, parse_method(method), out_path, jobs);
  out << "tool=treebound\n";
  out << "erratum=path M2 closed form is 4n-8, not 2n-8\n";
  long long violations = 0, disagreements = 0;
  for (const VerificationReport& rep : result.reports) {
    write_summary(out, rep);
    for (const TheoremTally& tally : rep.theorems) {
      violations += tally.violations;
    }
    disagreements += rep.eps_disagreements;
  }
  out << "total_violations=" << violations << '\n';
  out << "total_eps_disagreements=" << disagreements << '\n';
  out << "csv=" << out_path << '\n';
  return result.clean() ? 0 : 2;
}

int run_extremal(int n, const std::string& index, std::ostream& out) {
  TopoIndex idx = TopoIndex::M1;
  if (index == "M2") idx = TopoIndex::M2;
  if (index == "ABC") idx = TopoIndex::Abc;
  const Extremal ex = extremal_search(n, idx, /*jobs=*/1);
  out << "index=" << index << '\n';
  out << "n=" << n << '\n';
  out << "min=" << format_double(ex.min_value) << '\n';
  std::string codes;
  for (std::size_t i = 0; i < ex.min_codes.size(); ++i) {
    if (i) codes.push_back(';');
    codes += ex.min_codes[i];
  }
  out << "min_codes=" << codes << '\n';
  out << "max=" << format_double(ex.max_value) << '\n';
  codes.clear();
  for (std::size_t i = 0; i < ex.max_codes.size(); ++i) {
    if (i) codes.push_back(';');
    codes += ex.max_codes[i];
  }
  out << "max_codes=" << codes << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "treebound: degree-based topological indices, metric dimension, and "
      "exhaustive inequality verification over free trees"};
  app.name("treebound");
  app.footer(std::string(kErratumNote) + "\n" + kEdgeListHelp);
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand(
      "enum", "Enumerate one representative per isomorphism class");
  int enum_n = 0;
  std::string enum_format = "levels";
  cmd_enum->add_option("--n", enum_n, "tree order, 1..18")->required();
  cmd_enum->add_option("--format", enum_format,
                       "levels: canonical level sequence per line; edges: "
                       "edge-list blocks separated by blank lines")
      ->check(CLI::IsMember({"levels", "edges"}));
  cmd_enum->footer(kErratumNote);

  auto* cmd_indices = app.add_subcommand(
      "indices", "Compute M1, M2 and ABC for one tree");
  std::string indices_input;
  cmd_indices->add_option("--input", indices_input,
                          "edge-list file, '-' or omitted for stdin");
  cmd_indices->footer(std::string("Output: \"n=<n> m1=<int> m2=<int> "
                                  "abc=<float>\". ") +
                      kEdgeListHelp + "\n" + kErratumNote);

  auto* cmd_metric = app.add_subcommand(
      "metric-dim", "Exact metric dimension of one tree");
  std::string metric_input, metric_method = "both";
  bool metric_no_prune = false;
  cmd_metric->add_option("--input", metric_input,
                         "edge-list file, '-' or omitted for stdin");
  cmd_metric->add_option("--method", metric_method,
                         "brute, tree, or both (both cross-checks agreement)")
      ->check(CLI::IsMember({"brute", "tree", "both"}));
  cmd_metric->add_flag("--no-leaf-prune", metric_no_prune,
                       "search all vertex subsets, not just leaves");
  cmd_metric->footer(std::string("Output: \"eps=<int> witness=<v1,v2,...> "
                                 "method=<name>\". ") +
                     kEdgeListHelp + "\n" + kErratumNote);

  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Evaluate all five order/metric-dimension inequalities on one "
                "tree");
  std::string bounds_input, bounds_method = "both";
  cmd_bounds->add_option("--input", bounds_input,
                         "edge-list file, '-' or omitted for stdin");
  cmd_bounds->add_option("--eps-method", bounds_method,
                         "metric dimension method: brute, tree, or both")
      ->check(CLI::IsMember({"brute", "tree", "both"}));
  cmd_bounds->footer(std::string(kEdgeListHelp) + "\n" + kErratumNote);

  auto* cmd_lemma = app.add_subcommand(
      "lemma-scan", "Grid-scan one of the three inequality audit functions");
  int lemma_id = 0, lemma_jobs = 0;
  double lemma_x_max = 300.0, lemma_y_max = 300.0, lemma_step = 1.0;
  cmd_lemma->add_option("--lemma", lemma_id, "1=upsilon(x), 2=g(x,y), 3=F(x,y)")
      ->required()
      ->check(CLI::Range(1, 3));
  cmd_lemma->add_option("--x-max", lemma_x_max, "x scans [3, x-max]");
  cmd_lemma->add_option("--y-max", lemma_y_max,
                        "y scans [2, y-max] (lemmas 2 and 3)");
  cmd_lemma->add_option("--real-step", lemma_step,
                        "grid step; 1 scans integers only");
  cmd_lemma->add_option("--jobs", lemma_jobs, "worker threads, 0 = all");
  cmd_lemma->footer(std::string("Thresholds: lemma 1 value > 0, lemma 2 value "
                                "<= 0, lemma 3 value > sqrt(5)/(2 sqrt(2)).\n") +
                    kErratumNote);

  auto* cmd_verify = app.add_subcommand(
      "verify", "Exhaustively check the five inequalities over all trees of "
                "each order");
  int verify_min = 0, verify_max = 0, verify_jobs = 0;
  std::string verify_method = "both", verify_out;
  cmd_verify->add_option("--min-n", verify_min, "smallest order, >= 4")
      ->required();
  cmd_verify->add_option("--max-n", verify_max,
                         "largest order (<= 18; <= 16 with brute/both eps)")
      ->required();
  cmd_verify->add_option("--eps-method", verify_method,
                         "brute, tree, or both (both reports disagreements)")
      ->check(CLI::IsMember({"brute", "tree", "both"}));
  cmd_verify->add_option("--out", verify_out, "CSV output path")->required();
  cmd_verify->add_option("--jobs", verify_jobs, "worker threads, 0 = all");
  cmd_verify->footer(
      std::string("CSV columns: n,code,eps,eps_method,m1,m2,abc,abc_max_bound,"
                  "m1_lower,m1_upper,m2_lower,m2_upper,viol_flags,eq_flags. "
                  "Flags are 5 characters in theorem order AbcMax, M1Lower, "
                  "M1Upper, M2Lower, M2Upper.\nExit code 2 signals a violation "
                  "or method disagreement.\n") +
      kErratumNote);

  auto* cmd_extremal = app.add_subcommand(
      "extremal", "Extremal trees for one index at a fixed order");
  int extremal_n = 0;
  std::string extremal_index;
  cmd_extremal->add_option("--n", extremal_n, "tree order, 1..18")->required();
  cmd_extremal->add_option("--index", extremal_index, "M1, M2, or ABC")
      ->required()
      ->check(CLI::IsMember({"M1", "M2", "ABC"}));
  cmd_extremal->footer(kErratumNote);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cmd_enum->parsed()) return run_enum(enum_n, enum_format, out);
    if (cmd_indices->parsed()) return run_indices(indices_input, in, out);
    if (cmd_metric->parsed()) {
      return run_metric_dim(metric_input, metric_method, metric_no_prune, in,
                            out, err);
    }
    if (cmd_bounds->parsed()) {
      return run_bounds(bounds_input, bounds_method, in, out, err);
    }
    if (cmd_lemma->parsed()) {
      return run_lemma_scan(lemma_id, lemma_x_max, lemma_y_max, lemma_step,
                            lemma_jobs, out);
    }
    if (cmd_verify->parsed()) {
      return run_verify(verify_min, verify_max, verify_method, verify_out,
                        verify_jobs, out);
    }
    if (cmd_extremal->parsed()) {
      return run_extremal(extremal_n, extremal_index, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace treebound
