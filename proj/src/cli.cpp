#include "penthex/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "penthex/solver.hpp"

namespace penthex {

namespace {

struct Options {
  std::string code_text;
  bool conjecture = false;
  int cap = 10;
  int budget = 0;
  int d = 0;  // 0 = default
  std::string format = "text";
  std::string out_path;
  unsigned seed = 1;
  int bench_n = 10;
  int bench_count = 40;
};

BoundaryCode parse_single(const std::string& text) {
  SequenceList l = parse_codes(text);
  if (l.size() != 1)
    throw Error(Err::BadDigit, "expected a single boundary code, got a list");
  return l[0];
}

void emit(const Options& opt, std::ostream& out, std::ostream& err, const std::string& body) {
  if (opt.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) {
    err << "cannot open " << opt.out_path << "\n";
    throw Error(Err::Internal, "output path not writable");
  }
  f << body;
  out << "wrote " << opt.out_path << "\n";
}

std::string decide_record(const BoundaryCode& code, const Answer& ans) {
  std::ostringstream os;
  os << "answer=" << (ans.exists ? "yes" : "no") << "\n";
  os << "f5=" << f5(code) << "\n";
  os << "n=" << code.size() << "\n";
  os << "d=" << ans.stats.d_used << "\n";
  os << "nodes=" << ans.stats.nodes << "\n";
  os << "base_calls=" << ans.stats.base_calls << "\n";
  os << "max_depth=" << ans.stats.max_depth << "\n";
  os << "conditional=" << (ans.stats.conditional ? 1 : 0) << "\n";
  os << "time_ms=" << static_cast<long long>(ans.stats.time_ms + 0.5) << "\n";
  return os.str();
}

std::string trace_text(const OpTrace& tr) {
  std::ostringstream os;
  os << "trace steps=" << tr.steps.size() << " initial=" << format_list(tr.initial) << "\n";
  for (const auto& step : tr.steps) {
    os << "step " << format_op(step.op);
    for (int idx : step.iv_removed) os << " ; " << format_op(SeqOp{OpIV{idx}});
    os << " -> " << (step.after.empty() ? "(empty)" : format_list(step.after)) << "\n";
  }
  return os.str();
}

std::string answer_line(const Answer& ans) {
  if (!ans.exists) return "no\n";
  return ans.stats.conditional ? "yes (conditional)\n" : "yes\n";
}

int cmd_decide(const Options& opt, std::ostream& out, std::ostream& err, bool with_witness) {
  BoundaryCode code = parse_single(opt.code_text);
  SolverConfig cfg;
  cfg.conjecture_mode = opt.conjecture;
  cfg.want_witness = with_witness;
  if (opt.d > 0) cfg.d_override = opt.d;
  Solver solver(cfg);
  Answer ans = solver.decide(code);

  std::ostringstream body;
  if (opt.format == "drawing") {
    if (!ans.exists) {
      out << answer_line(ans);
      return 0;
    }
    if (!ans.witness) throw Error(Err::Internal, "witness missing for drawing");
    emit(opt, out, err, to_svg(*ans.witness));
    return 0;
  }
  if (opt.format == "text") body << answer_line(ans);
  body << decide_record(code, ans);
  if (ans.trace) body << trace_text(*ans.trace);
  if (with_witness && ans.exists) {
    if (!ans.witness) throw Error(Err::Internal, "witness missing");
    body << "witness\n" << to_record(*ans.witness);
  }
  emit(opt, out, err, body.str());
  return 0;
}

int cmd_count(const Options& opt, std::ostream& out, std::ostream& err) {
  BoundaryCode code = parse_single(opt.code_text);
  SolverConfig cfg;
  if (opt.d > 0) cfg.d_override = opt.d;
  Solver solver(cfg);
  int c = solver.count_solutions(code, opt.cap);
  std::ostringstream body;
  if (opt.format == "text") body << c << "\n";
  body << "count=" << c << "\n";
  body << "saturated=" << (c >= opt.cap ? 1 : 0) << "\n";
  body << "cap=" << opt.cap << "\n";
  emit(opt, out, err, body.str());
  return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
  BoundaryCode code = parse_single(opt.code_text);
  SearchConfig cfg;
  cfg.face_budget = opt.budget;
  cfg.witness_cap = opt.cap;
  auto found = fill_search(code, cfg);
  int c = static_cast<int>(found.size());
  std::ostringstream body;
  if (opt.format == "text") body << c << (c == 1 ? " solution" : " solutions") << "\n";
  body << "count=" << c << "\n";
  body << "saturated=" << (c >= opt.cap ? 1 : 0) << "\n";
  body << "cap=" << opt.cap << "\n";
  body << "budget=" << (opt.budget > 0 ? opt.budget : code.size() * code.size()) << "\n";
  if (opt.format == "record" && !found.empty()) body << to_record(PatchSet{found[0]});
  emit(opt, out, err, body.str());
  return 0;
}

std::vector<BoundaryCode> bench_corpus(int n, unsigned seed, int count) {
  std::vector<BoundaryCode> corpus;
  if (n <= 14) {
    // all cyclic strings of length n, deduplicated by rotation
    for (long mask = 0; mask < (1L << n); mask++) {
      std::vector<int> d(n);
      for (int i = 0; i < n; i++) d[i] = (mask >> i) & 1 ? 3 : 2;
      BoundaryCode c(std::move(d));
      if (!(canonical_rotation(c) == c)) continue;
      int k = f5(c);
      if (k < 0 || k > 5) continue;
      corpus.push_back(std::move(c));
    }
  } else {
    std::mt19937 rng(seed);
    std::set<std::string> seen;
    int guard = 0;
    while (static_cast<int>(corpus.size()) < count && guard++ < 200000) {
      std::vector<int> d(n);
      for (int i = 0; i < n; i++) d[i] = (rng() & 1) ? 3 : 2;
      BoundaryCode c(std::move(d));
      int k = f5(c);
      if (k < 0 || k > 5) continue;
      BoundaryCode canon = canonical_rotation(c);
      if (!seen.insert(compact(canon)).second) continue;
      corpus.push_back(std::move(canon));
    }
  }
  return corpus;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  auto corpus = bench_corpus(opt.bench_n, opt.seed, opt.bench_count);
  std::ostringstream body;
  body << "# code n f5 solver_ms solver_nodes oracle_ms oracle_exists agree\n";
  int agreements = 0;
  double solver_total = 0, oracle_total = 0;
  for (const auto& code : corpus) {
    SolverConfig cfg;
    Solver solver(cfg);
    Answer ans = solver.decide(code);
    auto t0 = std::chrono::steady_clock::now();
    SearchConfig scfg;
    bool oracle_yes = fill_exists(code, scfg);
    double oracle_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool agree = ans.exists == oracle_yes;
    agreements += agree;
    solver_total += ans.stats.time_ms;
    oracle_total += oracle_ms;
    body << compact(code) << ' ' << code.size() << ' ' << f5(code) << ' ' << std::fixed
         << std::setprecision(2) << ans.stats.time_ms << ' ' << ans.stats.nodes << ' '
         << oracle_ms << ' ' << (oracle_yes ? 1 : 0) << ' ' << (agree ? 1 : 0) << "\n";
  }
  body << "# codes=" << corpus.size() << " agree=" << agreements << " solver_ms_total="
       << std::fixed << std::setprecision(1) << solver_total
       << " oracle_ms_total=" << oracle_total << "\n";
  emit(opt, out, err, body.str());
  return agreements == static_cast<int>(corpus.size()) ? 0 : 2;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"penthex: decide, construct and count fullerene patches from boundary codes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool takes_code) {
    if (takes_code)
      sub->add_option("code", opt.code_text, "boundary code, e.g. 22232223 or 2,2,3|223")
          ->required();
    sub->add_option("--cap", opt.cap, "saturation cap for counting / witness collection");
    sub->add_option("--budget", opt.budget, "face budget for the exhaustive search");
    sub->add_option("--d", opt.d, "override the operation length bound (expert)");
    sub->add_option("--format", opt.format, "text | record | drawing")
        ->check(CLI::IsMember({"text", "record", "drawing"}));
    sub->add_option("--out", opt.out_path, "write output to this path");
    sub->add_option("--seed", opt.seed, "seed for generated corpora");
    sub->add_flag("--conjecture", opt.conjecture,
                  "allow f5 > 5 under the distance conjecture (answers flagged conditional)");
  };

  auto* c_decide = app.add_subcommand("decide", "does a patch with this boundary code exist?");
  add_common(c_decide, true);
  auto* c_witness = app.add_subcommand("witness", "decide and build an explicit patch");
  add_common(c_witness, true);
  auto* c_count = app.add_subcommand("count", "count distinct solutions up to --cap");
  add_common(c_count, true);
  auto* c_oracle = app.add_subcommand("oracle", "exhaustive ground-truth search");
  add_common(c_oracle, true);
  auto* c_bench = app.add_subcommand("bench", "solver vs oracle over a code corpus");
  c_bench->add_option("n", opt.bench_n, "code length")->required();
  c_bench->add_option("--count", opt.bench_count, "corpus size for random generation");
  add_common(c_bench, false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_decide->parsed()) return cmd_decide(opt, out, err, false);
    if (c_witness->parsed()) return cmd_decide(opt, out, err, true);
    if (c_count->parsed()) return cmd_count(opt, out, err);
    if (c_oracle->parsed()) return cmd_oracle(opt, out, err);
    if (c_bench->parsed()) return cmd_bench(opt, out, err);
    err << "no subcommand\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind) {
      case Err::BadDigit:
      case Err::EmptyCode:
      case Err::Unsupported:
      case Err::Inconsistent:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; i++) args.push_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

CliResult run_cli_captured(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.exit_code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace penthex
