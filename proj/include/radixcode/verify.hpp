#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <radixcode/signed_perm.hpp>

namespace radixcode {

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string check;
  std::string parameter;
  std::size_t cases = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Enumeration size cap (default 7), overridable via RADIXCODE_MAX_N.
int enumeration_cap();

/// All 2^n n! elements of the rank-n signed permutation group in a fixed
/// order: outer loop over sign masks 0..2^n-1 (bit b negates position b+1),
/// inner loop over permutations of {1..n} in lexicographic order. Generated
/// directly; deliberately does not use the coding module, so bijection checks
/// against rank/unrank are non-circular. Throws CapExceeded above the cap.
std::vector<SignedPermutation> enumerate_group(int n);
std::vector<SignedPermutation> enumerate_group(int n, int cap);

struct Table1Row {
  int value = 0;
  std::string factorial;
  std::string hyperoctahedral;
};

/// Rows lo..hi computed by encode_integer (compact digit strings).
std::vector<Table1Row> reproduce_table1(int lo, int hi);

/// The conversion table for 0..79 as printed in the reference write-up,
/// transcribed verbatim (including its factorial-column misprints).
const std::array<Table1Row, 80>& table1_printed();

/// Rows where the printed factorial value is a known misprint.
bool table1_factorial_erratum(int row);

struct Table1Comparison {
  Table1Row computed;
  Table1Row printed;
  bool factorial_matches = false;
  bool hyperoctahedral_matches = false;
  bool known_erratum = false;  // printed factorial value is a known misprint
};

/// Diffs computed rows 0..79 against the printed table.
std::vector<Table1Comparison> compare_table1();

struct Table2Row {
  std::array<int, 2> window;
  int inv1 = 0;
  int inv2 = 0;
};

/// The eight rank-2 elements with their position statistics, in the
/// reference row order (ranks 0..7).
const std::array<Table2Row, 8>& table2_rows();

/// Names of the registered checks, in execution order.
std::vector<std::string> registered_checks();

/// Runs the named check ("all" for every check) at its default size, or at
/// size_override where the check is size-parameterized. Throws UnknownCheck.
std::vector<VerificationReport> run_suite(const std::string& selector,
                                          std::optional<int> size_override = {});

}  // namespace radixcode
