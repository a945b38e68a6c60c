#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "trib/closed_forms.hpp"
#include "trib/fast_count.hpp"
#include "trib/word.hpp"

namespace trib::cli {

namespace {

constexpr ExactInt kMaxTableRows = 1'000'000;
constexpr ExactInt kMaxKernelLength = 1'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExactInt parse_arg(const std::string& text, const char* flag) {
  try {
    return parse_exact(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require_length(ExactInt n, const char* flag) {
  if (n < 0 || n > kNCap) {
    throw UsageError(std::string(flag) + " must be in [0, 10^18], got " + to_string(n));
  }
}

template <typename Expected, typename Got>
Check compare_all(const std::string& name, std::size_t max_n, Expected expected, Got got) {
  Check check{name, true, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const ExactInt want = expected(n);
    const ExactInt have = got(n);
    if (want != have) {
      check.pass = false;
      check.detail = "first divergence n=" + std::to_string(n) + " expected=" + to_string(want) +
                     " got=" + to_string(have);
      break;
    }
  }
  return check;
}

Check count_check(const std::string& name, std::size_t violations) {
  Check check{name, violations == 0, {}};
  if (violations != 0) check.detail = std::to_string(violations) + " violations";
  return check;
}

void write_positions(bool cubes, bool repeated, ExactInt n, std::ostream& out) {
  const std::size_t cap = oracle_cap_from_env();
  if (n <= static_cast<ExactInt>(cap)) {
    const Oracle oracle(static_cast<std::size_t>(n));
    const RepetitionSummary summary = oracle.scan_repetitions(static_cast<std::size_t>(n));
    const auto& counts = cubes ? (repeated ? summary.d : summary.c)
                               : (repeated ? summary.b : summary.a);
    for (std::size_t i = 1; i < counts.size(); ++i) {
      for (int k = 0; k < counts[i]; ++k) out << i << '\n';
    }
    return;
  }
  // Beyond the oracle cap: distinct positions from the indicators, repeated
  // ones from the point counts.
  const FastCounter& fast = FastCounter::standard();
  for (ExactInt i = 1; i <= n; ++i) {
    const ExactInt times = repeated ? (cubes ? fast.d_at(i) : fast.b_at(i))
                                    : (cubes ? c_indicator(i) : a_indicator(i));
    for (ExactInt k = 0; k < times; ++k) out << to_string(i) << '\n';
  }
}

}  // namespace

OutputRow evaluate_row(ExactInt n) {
  const FastCounter& fast = FastCounter::standard();
  return {n, distinct_squares(n), fast.algorithm_B(n), distinct_cubes(n), fast.algorithm_D(n)};
}

void write_table(ExactInt from, ExactInt to, TableFormat format, std::ostream& out) {
  if (format == TableFormat::csv) {
    out << "n,A,B,C,D\n";
    for (ExactInt n = from; n <= to; ++n) {
      const OutputRow r = evaluate_row(n);
      out << to_string(r.n) << ',' << to_string(r.A) << ',' << to_string(r.B) << ','
          << to_string(r.C) << ',' << to_string(r.D) << '\n';
    }
    return;
  }
  out << "[\n";
  for (ExactInt n = from; n <= to; ++n) {
    const OutputRow r = evaluate_row(n);
    out << "{\"n\":" << to_string(r.n) << ",\"A\":" << to_string(r.A)
        << ",\"B\":" << to_string(r.B) << ",\"C\":" << to_string(r.C)
        << ",\"D\":" << to_string(r.D) << '}' << (n < to ? ",\n" : "\n");
  }
  out << "]\n";
}

bool VerifyReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport verify(std::size_t max_n, bool exhaustive) {
  VerifyReport report;
  report.max_n = max_n;
  report.exhaustive = exhaustive;

  const Oracle oracle(max_n);
  const RepetitionSummary s = oracle.scan_repetitions(max_n);
  const FastCounter& fast = FastCounter::standard();

  // Cumulative oracle counts.
  std::vector<ExactInt> A(max_n + 1), B(max_n + 1), C(max_n + 1), D(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    A[n] = A[n - 1] + s.a[n];
    B[n] = B[n - 1] + s.b[n];
    C[n] = C[n - 1] + s.c[n];
    D[n] = D[n - 1] + s.d[n];
  }
  const auto at = [](const auto& v) { return [&v](std::size_t n) { return ExactInt{v[n]}; }; };
  const auto as_n = [](auto f) { return [f](std::size_t n) { return ExactInt{f(static_cast<ExactInt>(n))}; }; };

  report.checks.push_back(compare_all("A", max_n, at(A), as_n([](ExactInt n) { return distinct_squares(n); })));
  report.checks.push_back(compare_all("B", max_n, at(B), as_n([&fast](ExactInt n) { return fast.algorithm_B(n); })));
  report.checks.push_back(compare_all("C", max_n, at(C), as_n([](ExactInt n) { return distinct_cubes(n); })));
  report.checks.push_back(compare_all("D", max_n, at(D), as_n([&fast](ExactInt n) { return fast.algorithm_D(n); })));
  report.checks.push_back(compare_all("a", max_n, at(s.a), as_n([](ExactInt n) { return ExactInt{a_indicator(n)}; })));
  report.checks.push_back(compare_all("b", max_n, at(s.b), as_n([&fast](ExactInt n) { return fast.b_at(n); })));
  report.checks.push_back(compare_all("c", max_n, at(s.c), as_n([](ExactInt n) { return ExactInt{c_indicator(n)}; })));
  report.checks.push_back(compare_all("d", max_n, at(s.d), as_n([&fast](ExactInt n) { return fast.d_at(n); })));

  if (exhaustive) {
    const ExhaustiveReport x = oracle.validate_exhaustive(max_n);
    report.checks.push_back(count_check("restricted-lengths", x.restricted_mismatches));
    report.checks.push_back(count_check("square-lengths", x.bad_square_lengths));
    report.checks.push_back(count_check("cube-lengths", x.bad_cube_lengths));
    report.checks.push_back(count_check("fourth-powers", x.fourth_powers));
    report.checks.push_back(count_check("primitive-roots", x.imprimitive_roots));
  }
  return report;
}

void write_report(const VerifyReport& report, std::ostream& out) {
  out << "verify n=1.." << report.max_n << " mode="
      << (report.exhaustive ? "exhaustive" : "restricted") << '\n';
  for (const auto& c : report.checks) {
    out << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
  out << "result: " << (report.pass() ? "pass" : "FAIL") << '\n';
}

std::size_t oracle_cap_from_env() {
  const char* value = std::getenv("TRIB_ORACLE_CAP");
  if (value == nullptr || *value == '\0') return Oracle::kDefaultCap;
  const ExactInt cap = parse_arg(value, "TRIB_ORACLE_CAP");
  if (cap < 1 || cap > static_cast<ExactInt>(kDefaultPrefixCap)) {
    throw UsageError("TRIB_ORACLE_CAP must be in [1, 10^7]");
  }
  return static_cast<std::size_t>(cap);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact square and cube counts in prefixes of the Tribonacci word"};
  app.name(args.empty() ? "tribsq" : args.front());
  app.require_subcommand(1);

  std::string stat, n_text, from_text, to_text, format = "csv", kind = "square";
  std::size_t max_n = 3000;
  bool exhaustive = false, repeated = false;
  int order = 0;

  auto* count = app.add_subcommand("count", "Print A(n), B(n), C(n) or D(n)");
  count->add_option("--stat", stat, "Statistic")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  count->add_option("--n", n_text, "Prefix length")->required();

  auto* table = app.add_subcommand("table", "Emit rows n,A,B,C,D");
  table->add_option("--from", from_text, "First n")->required();
  table->add_option("--to", to_text, "Last n")->required();
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare every formula with the brute-force oracle");
  verify_cmd->add_option("--max", max_n, "Largest n to check");
  verify_cmd->add_flag("--exhaustive", exhaustive, "Scan every root length (max <= 600)");

  auto* positions = app.add_subcommand("positions", "List end positions of squares or cubes");
  positions->add_option("--kind", kind, "square or cube")->check(CLI::IsMember({"square", "cube"}));
  positions->add_option("--n", n_text, "Prefix length")->required();
  positions->add_flag("--repeated", repeated, "List every occurrence instead of distinct ones");

  auto* kernel = app.add_subcommand("kernel", "Print the kernel word K_m");
  kernel->add_option("--m", order, "Order m >= 1")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) {
      const ExactInt n = parse_arg(n_text, "--n");
      require_length(n, "--n");
      const FastCounter& fast = FastCounter::standard();
      ExactInt value = 0;
      switch (stat[0]) {
        case 'A': value = distinct_squares(n); break;
        case 'B': value = fast.algorithm_B(n); break;
        case 'C': value = distinct_cubes(n); break;
        default: value = fast.algorithm_D(n); break;
      }
      out << to_string(value) << '\n';
      return kOk;
    }
    if (*table) {
      const ExactInt from = parse_arg(from_text, "--from");
      const ExactInt to = parse_arg(to_text, "--to");
      require_length(from, "--from");
      require_length(to, "--to");
      if (from > to) throw UsageError("--from must not exceed --to");
      if (to - from > kMaxTableRows) throw UsageError("at most 10^6 + 1 rows per table");
      write_table(from, to, format == "json" ? TableFormat::json : TableFormat::csv, out);
      return kOk;
    }
    if (*verify_cmd) {
      const std::size_t cap = oracle_cap_from_env();
      if (max_n < 1 || max_n > cap) {
        throw UsageError("--max must be in [1, " + std::to_string(cap) + "] (oracle cap)");
      }
      if (exhaustive && max_n > Oracle::kExhaustiveCap) {
        throw UsageError("--exhaustive requires --max <= 600");
      }
      const VerifyReport report = verify(max_n, exhaustive);
      write_report(report, out);
      return report.pass() ? kOk : kVerifyFailed;
    }
    if (*positions) {
      const ExactInt n = parse_arg(n_text, "--n");
      require_length(n, "--n");
      write_positions(kind == "cube", repeated, n, out);
      return kOk;
    }
    if (*kernel) {
      if (order < 1) throw UsageError("--m must be >= 1");
      if (kernel_number(order) > kMaxKernelLength) throw UsageError("k_m exceeds 10^6");
      const KernelWord k = kernel_word(order);
      out << "word: " << k.content << '\n'
          << "length: " << to_string(k.length) << '\n'
          << "first_end: " << to_string(position_kernel(order, 1)) << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace trib::cli
