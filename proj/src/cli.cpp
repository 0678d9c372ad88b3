#include "rootgeom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "rootgeom/serialize.hpp"

namespace rootgeom::cli {

namespace {

const char* const kGrammar =
    "commands:\n"
    "  verify-theorem6 [--max-rank R] [--rank-limit L] [--json PATH]\n"
    "  stability TYPE [--json PATH]\n"
    "  diophantine [--n-max N]\n"
    "  counterexample PAIR [--json PATH]\n"
    "  chamber-table\n"
    "  hypothesis-a FACTORS\n"
    "  shells TYPE NORM\n"
    "  g2-example\n"
    "  catalog TYPE [--json PATH]\n"
    "TYPE: family letter + rank (A1.., B2.., C3.., D4.., E6-E8, F4, G2)\n"
    "PAIR: a7-e7 | a8-e8 | d8-e8 | b4-f4 | a2-g2\n"
    "FACTORS: comma-separated TYPEs, e.g. A4,A6,A6\n"
    "global: --approx adds non-canonical decimal renderings\n";

struct UsageError : Error {
  using Error::Error;
};

SimpleType type_arg(const std::string& text) {
  try {
    return parse_type(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

class Printer {
 public:
  Printer(std::ostream& out, bool approx) : out_(out), approx_(approx) {}

  std::string q(const Rational& value) const {
    if (!approx_ || is_integer(value)) return to_string(value);
    std::ostringstream s;
    s << to_string(value) << " [~" << std::setprecision(6) << to_double(value) << "]";
    return s.str();
  }

  std::string v(const QVec& vec) const {
    std::string text = to_string(vec);
    if (!approx_) return text;
    std::ostringstream s;
    s << text << " [~(";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      s << (i ? "," : "") << std::setprecision(4) << to_double(vec[i]);
    }
    s << ")]";
    return s.str();
  }

  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  bool approx_;
};

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << canonical_dump(j);
}

std::string shell_summary(const StabilityReport& report, const Printer& p) {
  std::string s;
  for (const auto& shell : report.shells) {
    if (!s.empty()) s += "  ";
    s += p.q(shell.norm) + ": " + std::to_string(shell.lattice_count) + "/" +
         std::to_string(shell.root_count) + (shell.determining ? "*" : "");
  }
  return s;
}

void print_report(const StabilityReport& report, Printer& p, std::size_t max_witnesses) {
  auto& out = p.out();
  out << to_string(report.type) << ": " << to_string(report.verdict) << "\n";
  for (const auto& shell : report.shells) {
    out << "  norm " << p.q(shell.norm) << ": " << shell.lattice_count
        << " lattice vectors, " << shell.root_count << " roots"
        << (shell.determining ? " (determining)" : "") << "\n";
  }
  if (report.diophantine_unstable) {
    out << "  diophantine criterion: "
        << (*report.diophantine_unstable ? "solvable (non-root vectors predicted)"
                                         : "no solution")
        << "\n";
  }
  if (!report.witnesses.empty()) {
    out << "  witnesses: " << report.witnesses.size() << " (first "
        << std::min(max_witnesses, report.witnesses.size()) << ")\n";
    for (std::size_t i = 0; i < report.witnesses.size() && i < max_witnesses; ++i) {
      out << "    " << p.v(report.witnesses[i]) << "\n";
    }
  }
}

int cmd_verify(int max_rank, int rank_limit, const std::string& json_path,
               const std::string& mutate, Printer& p) {
  if (max_rank < 8) throw UsageError("--max-rank must be at least 8");
  if (max_rank > rank_limit) {
    throw UsageError("--max-rank " + std::to_string(max_rank) +
                     " exceeds the configured rank limit " + std::to_string(rank_limit));
  }
  StabilityOptions options{rank_limit};
  std::optional<RootSystem> mutated;
  if (!mutate.empty()) {
    mutated = build(type_arg(mutate));
    mutated->roots.pop_back();
  }
  auto sweep = theorem6_sweep(max_rank, options, mutated ? &*mutated : nullptr);
  auto& out = p.out();
  out << "type  verdict              shells (norm: lattice/roots, * = determining)\n";
  for (const auto& [type, report] : sweep.reports) {
    std::string name = to_string(type);
    std::string verdict = to_string(report.verdict);
    out << name << std::string(6 - std::min<std::size_t>(name.size(), 5), ' ') << verdict
        << std::string(21 - verdict.size(), ' ') << shell_summary(report, p) << "\n";
  }
  out << "flagged:";
  for (const auto& t : sweep.flagged) out << " " << to_string(t);
  out << "\n";
  out << "expected (A7, A8, B4, D8): " << (sweep.matches_theorem6 ? "MATCH" : "MISMATCH")
      << "\n";
  write_json(json_path, to_json(sweep, max_rank));
  return sweep.matches_theorem6 ? kSuccess : kVerificationFailure;
}

int cmd_stability(const std::string& type_text, const std::string& json_path, Printer& p) {
  auto report = check_stability(type_arg(type_text));
  print_report(report, p, 8);
  write_json(json_path, to_json(report));
  return kSuccess;
}

int cmd_diophantine(long long n_max, Printer& p) {
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  auto solutions = an_diophantine(n_max);
  auto& out = p.out();
  out << "solutions (k, n) of (n-k) + k(n-k) = 2(n+1), 0 <= k <= n <= " << n_max << ":\n";
  if (solutions.empty()) out << "  none\n";
  for (const auto& s : solutions) out << "  (" << s.k << "," << s.n << ")\n";
  return kSuccess;
}

int cmd_counterexample(const std::string& name, const std::string& json_path, Printer& p) {
  const PairSpec spec = [&] {
    try {
      return parse_pair(name);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  auto pair = find_subsystem(spec);
  auto record = chamber_index(pair);
  auto& out = p.out();
  out << to_string(pair.sub) << " in " << to_string(pair.sup) << " (" << pair.sub_roots.size()
      << " of " << pair.sup_system.roots.size() << " roots, adjoint N = " << pair.ambient_n
      << ")\n";
  out << "  simple roots:";
  for (const auto& a : pair.sub_simple_roots) out << " " << p.v(a);
  out << "\n";
  out << "  chamber index |W'|/|W| = " << record.w_sup << "/" << record.w_sub << " = "
      << record.index << " vs Dynkin automorphism order " << record.dynkin_bound << ": "
      << (record.exceeds_bound ? "exceeds" : "does not exceed") << "\n";
  auto cert = try_find_violation(pair);
  const bool expected = spec.name != "a2-g2";
  if (!cert) {
    out << "  no reflection of " << to_string(pair.sup) << " moves the roots of "
        << to_string(pair.sub) << "\n";
    return expected ? kVerificationFailure : kSuccess;
  }
  out << "  alpha = " << p.v(cert->alpha) << "\n"
      << "  r     = " << p.v(cert->r) << "\n"
      << "  s_alpha(r) = " << p.v(cert->image) << " is a root of " << to_string(pair.sup)
      << " but not of " << to_string(pair.sub) << "\n";
  write_json(json_path, to_json(*cert, record));
  return verify_certificate(*cert, pair) ? kSuccess : kVerificationFailure;
}

int cmd_chamber_table(Printer& p) {
  auto& out = p.out();
  out << "pair    |W'|        |W|       index  dynkin  exceeds\n";
  bool ok = true;
  for (const auto& spec : known_pairs()) {
    auto rec = chamber_index(spec.sub, spec.sup);
    out << spec.name << "   " << std::left << std::setw(12) << rec.w_sup << std::setw(10)
        << rec.w_sub << std::setw(7) << rec.index << std::setw(8) << rec.dynkin_bound
        << (rec.exceeds_bound ? "yes" : "no") << std::right << "\n";
    if (rec.exceeds_bound != (spec.name != "a2-g2")) ok = false;
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_hypothesis_a(const std::string& factors_text, Printer& p) {
  FactorList factors;
  std::stringstream s(factors_text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) throw UsageError("empty factor in '" + factors_text + "'");
    factors.push_back(type_arg(item));
  }
  bool holds = hypothesis_a(factors);
  p.out() << "hypothesis A for [" << factors_text << "]: " << (holds ? "true" : "false") << "\n";
  return kSuccess;
}

int cmd_shells(const std::string& type_text, const std::string& norm_text, Printer& p) {
  SimpleType type = type_arg(type_text);
  Rational target;
  try {
    target = parse_rational(norm_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("NORM: ") + e.what());
  }
  if (target <= 0) throw UsageError("NORM must be positive");
  auto system = build(type);
  auto shell = vectors_of_norm(system.weight_lattice, target);
  auto roots = std::count_if(system.roots.begin(), system.roots.end(),
                             [&](const QVec& r) { return norm(r, system.gram) == target; });
  p.out() << to_string(type) << " norm " << p.q(target) << ": " << shell.size()
          << " vectors, " << roots << " roots\n";
  return kSuccess;
}

int cmd_g2_example(Printer& p) {
  auto ex = g2_example();
  auto& out = p.out();
  out << "induced form from the adjoint character of G2: " << to_string(ex.induced(0, 0)) << " "
      << to_string(ex.induced(0, 1)) << " / " << to_string(ex.induced(1, 0)) << " "
      << to_string(ex.induced(1, 1)) << " = " << to_string(ex.killing_multiple)
      << " x catalog form\n";
  out << "R1 = {" << p.v(ex.short_factor[0]) << ", " << p.v(ex.short_factor[1]) << "}\n";
  out << "R2 = {" << p.v(ex.long_factor[0]) << ", " << p.v(ex.long_factor[1]) << "}\n";
  out << "orthogonal components: " << ex.component_count << "\n";
  Rational root;
  bool exact = exact_sqrt(ex.squared_length_ratio, root);
  out << "||e2||^2/||e1||^2 = " << to_string(ex.squared_length_ratio) << ", so ||e2|| = "
      << (exact ? to_string(root) : "sqrt(" + to_string(ex.squared_length_ratio) + ")")
      << " ||e1||\n";
  out << "angles (degrees) between R1 u R2 and the G2 roots:\n";
  std::vector<QVec> rows = ex.short_factor;
  rows.insert(rows.end(), ex.long_factor.begin(), ex.long_factor.end());
  bool all_thirty = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "  " << std::left << std::setw(9) << to_string(rows[i]) << std::right;
    for (int a : ex.angle_table[i]) {
      out << std::setw(5) << a;
      if (a % 30 != 0) all_thirty = false;
    }
    out << "\n";
  }
  out << "all multiples of 30: " << (all_thirty ? "yes" : "no") << "\n";
  return all_thirty ? kSuccess : kVerificationFailure;
}

int cmd_catalog(const std::string& type_text, const std::string& json_path, Printer& p) {
  auto system = build(type_arg(type_text));
  auto& out = p.out();
  out << to_string(system.type) << ": " << system.roots.size() << " roots in dimension "
      << system.ambient_dim << ", |W| = " << weyl_order(system.type)
      << ", [weight lattice : root lattice] = " << weight_lattice_index(system) << "\n";
  out << "  simple roots:";
  for (const auto& a : system.simple_roots) out << " " << p.v(a);
  out << "\n";
  write_json(json_path, to_json(system));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root-system and weight-lattice verification toolkit", "rootgeom"};
  app.require_subcommand(1);
  app.footer(kGrammar);
  bool approx = false;
  app.add_flag("--approx", approx, "Add decimal renderings (non-canonical)");

  int max_rank = 10;
  int rank_limit = StabilityOptions{}.rank_limit;
  std::string json_path, mutate, type_text, pair_text, factors_text, norm_text;
  long long n_max = 100;

  auto* verify = app.add_subcommand("verify-theorem6", "Sweep all simple types");
  verify->add_option("--max-rank", max_rank, "Largest classical rank (>= 8)");
  verify->add_option("--rank-limit", rank_limit, "Configured rank limit");
  verify->add_option("--json", json_path, "Write the sweep as JSON");
  verify->add_option("--mutate-catalog", mutate)->group("");

  auto* stability = app.add_subcommand("stability", "Shell check for one type");
  stability->add_option("TYPE", type_text)->required();
  stability->add_option("--json", json_path);

  auto* diophantine = app.add_subcommand("diophantine", "Solve the A_n criterion");
  diophantine->add_option("--n-max", n_max);

  auto* counter = app.add_subcommand("counterexample", "Equal-rank violation certificate");
  counter->add_option("PAIR", pair_text)->required();
  counter->add_option("--json", json_path);

  auto* chamber = app.add_subcommand("chamber-table", "Chamber indices of the pairs");

  auto* hypo = app.add_subcommand("hypothesis-a", "Evaluate the Lie type conditions");
  hypo->add_option("FACTORS", factors_text)->required();

  auto* shells = app.add_subcommand("shells", "Count weight lattice vectors of a norm");
  shells->add_option("TYPE", type_text)->required();
  shells->add_option("NORM", norm_text)->required();

  auto* g2 = app.add_subcommand("g2-example", "A1 x A1 inside G2");

  auto* catalog = app.add_subcommand("catalog", "Describe a root system");
  catalog->add_option("TYPE", type_text)->required();
  catalog->add_option("--json", json_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kUsageError;
  }

  Printer p(out, approx);
  try {
    if (verify->parsed()) return cmd_verify(max_rank, rank_limit, json_path, mutate, p);
    if (stability->parsed()) return cmd_stability(type_text, json_path, p);
    if (diophantine->parsed()) return cmd_diophantine(n_max, p);
    if (counter->parsed()) return cmd_counterexample(pair_text, json_path, p);
    if (chamber->parsed()) return cmd_chamber_table(p);
    if (hypo->parsed()) return cmd_hypothesis_a(factors_text, p);
    if (shells->parsed()) return cmd_shells(type_text, norm_text, p);
    if (g2->parsed()) return cmd_g2_example(p);
    if (catalog->parsed()) return cmd_catalog(type_text, json_path, p);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kUsageError;
  } catch (const Error& e) {
    err << "verification error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace rootgeom::cli
