#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "trib/exact_int.hpp"
#include "trib/oracle.hpp"

namespace trib::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

struct OutputRow {
  ExactInt n = 0;
  ExactInt A = 0;
  ExactInt B = 0;
  ExactInt C = 0;
  ExactInt D = 0;
};

OutputRow evaluate_row(ExactInt n);

enum class TableFormat { csv, json };

/// Rows from..to inclusive. CSV header is `n,A,B,C,D`; JSON is an array of
/// flat objects with the same keys.
void write_table(ExactInt from, ExactInt to, TableFormat format, std::ostream& out);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;  // first divergence or violation count when failing
};

struct VerifyReport {
  std::size_t max_n = 0;
  bool exhaustive = false;
  std::vector<Check> checks;

  bool pass() const;
};

/// Runs one oracle scan up to max_n and compares A, B, C, D (cumulative) and
/// a, b, c, d (pointwise) for every n <= max_n. Exhaustive mode adds the
/// length-restriction, fourth-power and primitivity checks.
VerifyReport verify(std::size_t max_n, bool exhaustive);

void write_report(const VerifyReport& report, std::ostream& out);

/// Oracle cap, overridable through TRIB_ORACLE_CAP.
std::size_t oracle_cap_from_env();

/// Entry point shared by the tribsq binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trib::cli
