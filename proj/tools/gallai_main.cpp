// Command-line surface: formula evaluation, witness construction,
// certificate checking, partitioning, exhaustive search and point
// verification. Every command prints a human-readable report plus stable
// machine-parsable lines prefixed with "::".

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gallai/certificate.hpp"
#include "gallai/construct.hpp"
#include "gallai/decompose.hpp"
#include "gallai/search.hpp"
#include "gallai/verify.hpp"

namespace {

using namespace gallai;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::ExhaustedBudget: return 2;
  }
  return 3;
}

std::vector<int> parse_i_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int value = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw Error(ErrorCode::SyntaxError, "bad i-vector entry '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::SyntaxError, "empty i-vector");
  return out;
}

TopKind parse_top(const std::string& word) {
  if (word == "cycle") return TopKind::EvenCycle;
  if (word == "oddpath") return TopKind::OddPath;
  throw Error(ErrorCode::SyntaxError, "top must be 'cycle' or 'oddpath'");
}

std::string top_name(TopKind top) { return top == TopKind::EvenCycle ? "cycle" : "oddpath"; }

std::vector<TargetSpec> parse_targets(const std::string& text) {
  std::vector<TargetSpec> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(TargetSpec::parse(item));
  if (out.empty()) throw Error(ErrorCode::SyntaxError, "empty target list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (idx > 0) out += ",";
    out += std::to_string(v[idx]);
  }
  return out;
}

std::string targets_csv(std::span<const TargetSpec> targets) {
  std::string out;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (j > 0) out += ",";
    out += targets[j].to_string();
  }
  return out;
}

std::string triangle_csv(const ColoredComplete& c) {
  std::string out;
  const auto tri = c.triangle();
  for (std::size_t e = 0; e < tri.size(); ++e) {
    if (e > 0) out += ",";
    out += std::to_string(static_cast<int>(tri[e]));
  }
  return out;
}

std::string describe_counterexample(const VerdictReport& report) {
  if (report.rainbow) {
    const auto& t = *report.rainbow;
    return "rainbow:" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]);
  }
  if (report.embedding) {
    return report.embedding->target.to_string() + "@color" +
           std::to_string(report.embedding->color) + ":" + join_ints(report.embedding->vertices);
  }
  if (report.witness && report.verdict == Verdict::Refuted) {
    return "coloring:" + triangle_csv(*report.witness);
  }
  return "none";
}

void print_report(const VerdictReport& report) {
  std::cout << report.claim << "\n";
  std::cout << "  verdict: " << verdict_name(report.verdict) << "  (nodes " << report.stats.nodes
            << ", " << report.stats.millis << " ms)\n";
  if (report.rainbow) {
    const auto& t = *report.rainbow;
    std::cout << "  rainbow triangle: " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  if (report.embedding) {
    std::cout << "  found " << report.embedding->target.to_string() << " in color "
              << report.embedding->color << ":";
    for (int v : report.embedding->vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  if (report.witness && report.verdict == Verdict::Refuted) {
    std::cout << "  witness coloring on " << report.witness->order()
              << " vertices (triangular edge order): " << triangle_csv(*report.witness) << "\n";
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct FormulaArgs {
  int n = 0;
  std::string i_vector;
  std::string top = "cycle";
  std::string family;
  int k = 0;
  bool r2 = false;
  bool path_cycle = false;
  int m = 0;
};

int run_formula(const FormulaArgs& args) {
  if (args.r2) {
    const int value = r2_even_cycle(args.n);
    std::cout << "R_2(C_" << 2 * args.n << ") = " << value << "\n";
    std::cout << "::formula op=r2_even_cycle n=" << args.n << " value=" << value << "\n";
    return 0;
  }
  if (args.path_cycle) {
    const int value = r_path_cycle(args.m, args.n);
    std::cout << "R(P_" << args.m << ", C_" << 2 * args.n << ") = " << value << "\n";
    std::cout << "::formula op=r_path_cycle m=" << args.m << " n=" << args.n
              << " value=" << value << "\n";
    return 0;
  }
  if (!args.family.empty()) {
    Family family;
    if (args.family == "cycle") family = Family::EvenCycle;
    else if (args.family == "evenpath") family = Family::EvenPath;
    else if (args.family == "matching") family = Family::Matching;
    else if (args.family == "oddpath") family = Family::OddPath;
    else throw Error(ErrorCode::SyntaxError, "family must be cycle|evenpath|matching|oddpath");
    if (args.k < 1) throw Error(ErrorCode::InvalidArgument, "--k is required with --family");
    const int value = gr_k_family(args.n, args.k, family);
    const bool proven = family_validated(args.n, family);
    std::cout << "GR_" << args.k << "(" << args.family << ", n=" << args.n << ") = " << value
              << (proven ? "" : "  [conjectural]") << "\n";
    std::cout << "::formula op=gr_k_family family=" << args.family << " n=" << args.n
              << " k=" << args.k << " value=" << value
              << " provenance=" << (proven ? "proven" : "conjectural") << "\n";
    return 0;
  }
  const GRInstance inst = make_instance(args.n, parse_i_vector(args.i_vector), parse_top(args.top));
  const int value = gr_value(inst);
  const bool proven = gr_provenance(inst) == Provenance::Proven;
  std::cout << "GR(" << targets_csv(targets_of(inst)) << ") = " << value
            << (proven ? "" : "  [conjectural]") << "\n";
  std::cout << "::formula op=gr_value n=" << inst.n << " top=" << top_name(inst.top)
            << " i=" << join_ints(inst.i) << " value=" << value
            << " provenance=" << (proven ? "proven" : "conjectural") << "\n";
  return 0;
}

int run_construct(int n, const std::string& i_vector, const std::string& top,
                  const std::string& out_path) {
  const GRInstance inst = make_instance(n, parse_i_vector(i_vector), parse_top(top));
  const ColoredComplete witness = lower_bound_witness(inst);
  const VerdictReport report = check_bad_coloring(witness, targets_of(inst));
  if (report.verdict != Verdict::Verified)
    throw Error(ErrorCode::ConstructionInvalid, "witness failed its own certification");
  const Certificate cert = witness_certificate(inst, witness, report);
  write_text(out_path, serialize(cert));
  // Keep stdout clean when it carries the certificate itself.
  const bool to_stdout = out_path.empty() || out_path == "-";
  std::ostream& rep = to_stdout ? std::cerr : std::cout;
  rep << "certified witness of order " << witness.order() << " for GR = " << gr_value(inst)
      << "\n";
  rep << "::construct n=" << inst.n << " top=" << top_name(inst.top)
      << " i=" << join_ints(inst.i) << " order=" << witness.order() << " gr=" << gr_value(inst)
      << "\n";
  return 0;
}

int run_check(const std::string& path) {
  const Certificate cert = parse_certificate(read_text(path));
  const VerdictReport report = check_certificate(cert);
  print_report(report);
  std::cout << "::check file=" << path << " verdict=" << verdict_name(report.verdict)
            << " counterexample=" << describe_counterexample(report) << "\n";
  return exit_code(report.verdict);
}

int run_partition(const std::string& path) {
  const Certificate cert = parse_certificate(read_text(path));
  const ColoredComplete c = cert.coloring();
  const GallaiPartition g = gallai_partition(c);
  std::cout << "Gallai partition of K_" << c.order() << " into " << g.parts.size()
            << " parts\n";
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    std::cout << "  part " << i << " (size " << g.parts[i].size() << "):";
    for (int v : g.parts[i]) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "  inter-part colors:";
  for (int c2 : g.inter_colors) std::cout << " " << c2;
  std::cout << "\n";
  std::cout << "  reduced coloring:\n";
  for (int i = 0; i < g.reduced.order(); ++i) {
    for (int j = i + 1; j < g.reduced.order(); ++j) {
      std::cout << "    " << i << " " << j << " -> " << static_cast<int>(g.reduced.color(i, j))
                << "\n";
    }
  }
  std::ostringstream parts_repr;
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    if (i > 0) parts_repr << ";";
    parts_repr << join_ints(g.parts[i]);
  }
  std::cout << "::partition file=" << path << " p=" << g.parts.size()
            << " interColors=" << join_ints(g.inter_colors) << " parts=" << parts_repr.str()
            << "\n";
  return 0;
}

int run_search(int N, const std::string& targets_text, bool ramsey2, std::uint64_t budget,
               int threads, const std::string& out_path) {
  const std::vector<TargetSpec> targets = parse_targets(targets_text);
  EngineOptions opt{budget, threads};
  VerdictReport report;
  if (ramsey2) {
    if (targets.size() != 2)
      throw Error(ErrorCode::InvalidArgument, "--ramsey2 needs exactly two targets");
    report = exhaustive_ramsey2(targets[0], targets[1], N, opt);
  } else {
    report = search_bad_gallai(N, targets, opt);
  }
  print_report(report);
  if (report.witness) {
    Certificate cert = coloring_certificate(*report.witness);
    cert.targets = targets;
    Certificate::Claims claims;
    claims.gallai = !find_rainbow_triangle(*report.witness).has_value();
    for (int j = 1; j <= cert.k; ++j) claims.absent.push_back(j);
    cert.claims = std::move(claims);
    cert.verification = Certificate::Verification{"Verified", kToolVersion, 0};
    if (!out_path.empty()) write_text(out_path, serialize(cert));
  }
  std::cout << "::search mode=" << (ramsey2 ? "ramsey2" : "gallai") << " N=" << N
            << " targets=" << targets_csv(targets) << " verdict=" << verdict_name(report.verdict)
            << " counterexample=" << describe_counterexample(report) << "\n";
  return exit_code(report.verdict);
}

int run_verify_point(int n, const std::string& i_vector, const std::string& top,
                     std::uint64_t budget, int threads) {
  const GRInstance inst = make_instance(n, parse_i_vector(i_vector), parse_top(top));
  const GrPointReport report = verify_gr_point(inst, EngineOptions{budget, threads});
  std::cout << "GR point n=" << inst.n << " i=" << join_ints(inst.i) << " top="
            << top_name(inst.top) << ": value " << report.gr << "\n";
  std::cout << "lower side:\n";
  print_report(report.lower);
  std::cout << "upper side:\n";
  print_report(report.upper);
  std::cout << "overall: " << verdict_name(report.overall) << "\n";
  std::cout << "::verify-point n=" << inst.n << " top=" << top_name(inst.top)
            << " i=" << join_ints(inst.i) << " gr=" << report.gr
            << " lower=" << verdict_name(report.lower.verdict)
            << " upper=" << verdict_name(report.upper.verdict)
            << " overall=" << verdict_name(report.overall) << "\n";
  return exit_code(report.overall);
}

int run_random(int n, int k, int depth, std::uint64_t seed, const std::string& out_path) {
  const ColoredComplete c = random_gallai(n, k, depth, seed);
  const Certificate cert = coloring_certificate(c);
  write_text(out_path, serialize(cert));
  const bool to_stdout = out_path.empty() || out_path == "-";
  std::ostream& rep = to_stdout ? std::cerr : std::cout;
  rep << "random Gallai coloring on " << n << " vertices, " << k << " colors\n";
  rep << "::random n=" << n << " k=" << k << " depth=" << depth << " seed=" << seed << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai coloring toolkit: closed-form Gallai-Ramsey values, certified extremal "
               "witnesses, Gallai partitions and exhaustive small-case verification"};
  app.require_subcommand(1);

  FormulaArgs formula;
  auto* cmd_formula = app.add_subcommand("formula", "evaluate closed-form values");
  cmd_formula->add_option("--n", formula.n, "half-length parameter n")->required();
  cmd_formula->add_option("--i-vector", formula.i_vector, "comma list i_1>=...>=i_k");
  cmd_formula->add_option("--top", formula.top, "top target kind: cycle|oddpath");
  cmd_formula->add_option("--family", formula.family,
                          "family value: cycle|evenpath|matching|oddpath");
  cmd_formula->add_option("--k", formula.k, "number of colors (with --family)");
  cmd_formula->add_flag("--r2", formula.r2, "evaluate R_2(C_{2n})");
  cmd_formula->add_flag("--path-cycle", formula.path_cycle, "evaluate R(P_m, C_{2n})");
  cmd_formula->add_option("--m", formula.m, "path order m (with --path-cycle)");

  int c_n = 0;
  std::string c_i, c_top = "cycle", c_out;
  auto* cmd_construct = app.add_subcommand("construct", "emit a certified lower-bound witness");
  cmd_construct->add_option("--n", c_n, "half-length parameter n")->required();
  cmd_construct->add_option("--i-vector", c_i, "comma list i_1>=...>=i_k")->required();
  cmd_construct->add_option("--top", c_top, "top target kind: cycle|oddpath");
  cmd_construct->add_option("--out", c_out, "output file ('-' for stdout)");

  std::string k_file;
  auto* cmd_check = app.add_subcommand("check", "verify a certificate file");
  cmd_check->add_option("file", k_file, "certificate path")->required();

  std::string p_file;
  auto* cmd_partition = app.add_subcommand("partition", "Gallai partition of a certificate");
  cmd_partition->add_option("file", p_file, "certificate path")->required();

  int s_N = 0, s_threads = 1;
  std::string s_targets, s_out;
  std::uint64_t s_budget = 0;
  bool s_ramsey2 = false;
  auto* cmd_search = app.add_subcommand("search", "search colorings avoiding all targets");
  cmd_search->add_option("--N", s_N, "vertex count")->required();
  cmd_search->add_option("--targets", s_targets, "comma list, e.g. C10,C10 or P5,P3")->required();
  cmd_search->add_flag("--ramsey2", s_ramsey2, "full 2-coloring enumeration (exactly 2 targets)");
  cmd_search->add_option("--budget", s_budget, "node budget (default GALLAI_BUDGET or 1e8)");
  cmd_search->add_option("--threads", s_threads, "worker threads");
  cmd_search->add_option("--out", s_out, "write a found witness certificate here");

  int v_n = 0, v_threads = 1;
  std::string v_i, v_top = "cycle";
  std::uint64_t v_budget = 0;
  auto* cmd_point = app.add_subcommand("verify-point", "certify lower bound and exhaust upper");
  cmd_point->add_option("--n", v_n, "half-length parameter n")->required();
  cmd_point->add_option("--i-vector", v_i, "comma list i_1>=...>=i_k")->required();
  cmd_point->add_option("--top", v_top, "top target kind: cycle|oddpath");
  cmd_point->add_option("--budget", v_budget, "node budget (default GALLAI_BUDGET or 1e8)");
  cmd_point->add_option("--threads", v_threads, "worker threads");

  int r_n = 0, r_k = 0, r_depth = 2;
  std::uint64_t r_seed = 0;
  std::string r_out;
  auto* cmd_random = app.add_subcommand("random", "emit a random Gallai coloring");
  cmd_random->add_option("--n", r_n, "vertex count")->required();
  cmd_random->add_option("--k", r_k, "palette size")->required();
  cmd_random->add_option("--depth", r_depth, "substitution depth");
  cmd_random->add_option("--seed", r_seed, "RNG seed");
  cmd_random->add_option("--out", r_out, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (cmd_formula->parsed()) return run_formula(formula);
    if (cmd_construct->parsed()) return run_construct(c_n, c_i, c_top, c_out);
    if (cmd_check->parsed()) return run_check(k_file);
    if (cmd_partition->parsed()) return run_partition(p_file);
    if (cmd_search->parsed())
      return run_search(s_N, s_targets, s_ramsey2,
                        s_budget == 0 ? default_node_budget() : s_budget, s_threads, s_out);
    if (cmd_point->parsed())
      return run_verify_point(v_n, v_i, v_top, v_budget == 0 ? default_node_budget() : v_budget,
                              v_threads);
    if (cmd_random->parsed()) return run_random(r_n, r_k, r_depth, r_seed, r_out);
  } catch (const gallai::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 64;
}
