#include <radixcode/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <radixcode/coding.hpp>
#include <radixcode/inversion.hpp>
#include <radixcode/number_system.hpp>
#include <radixcode/rational.hpp>

namespace radixcode {

int enumeration_cap() {
  if (const char* env = std::getenv("RADIXCODE_MAX_N")) {
    int cap = std::atoi(env);
    if (cap >= 1) {
      return cap;
    }
  }
  return 7;
}

std::vector<SignedPermutation> enumerate_group(int n) {
  return enumerate_group(n, enumeration_cap());
}

std::vector<SignedPermutation> enumerate_group(int n, int cap) {
  if (n < 1) {
    throw CapExceeded("group rank must be at least 1");
  }
  if (n > cap) {
    throw CapExceeded("rank " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p = base;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<SignedPermutation> out;
  out.reserve((static_cast<std::size_t>(1) << n) * perms.size());
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    for (const auto& p : perms) {
      std::vector<int> window = p;
      for (int b = 0; b < n; ++b) {
        if (mask & (1ul << b)) {
          window[static_cast<std::size_t>(b)] = -window[static_cast<std::size_t>(b)];
        }
      }
      out.push_back(SignedPermutation::from_images(std::move(window)));
    }
  }
  return out;
}

std::vector<Table1Row> reproduce_table1(int lo, int hi) {
  if (lo < 0 || hi < lo) {
    throw Error("bad table range");
  }
  const NumberSystem fact = NumberSystem::factorial();
  const NumberSystem hyp = NumberSystem::hyperoctahedral();
  std::vector<Table1Row> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int v = lo; v <= hi; ++v) {
    Table1Row row;
    row.value = v;
    row.factorial = format_digits(Sign::Plus, encode_integer(fact, v), {}, true);
    row.hyperoctahedral = format_digits(Sign::Plus, encode_integer(hyp, v), {}, true);
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::array<Table1Row, 80>& table1_printed() {
  // Transcribed verbatim from the source table, misprints included.
  static const std::array<Table1Row, 80> rows = {{
      {0, "0", "0"}, {1, "1", "1"},
      {2, "10", "10"}, {3, "11", "11"},
      {4, "20", "20"}, {5, "21", "21"},
      {6, "100", "30"}, {7, "101", "31"},
      {8, "110", "100"}, {9, "111", "101"},
      {10, "120", "110"}, {11, "121", "111"},
      {12, "200", "120"}, {13, "201", "121"},
      {14, "210", "130"}, {15, "211", "131"},
      {16, "220", "200"}, {17, "221", "201"},
      {18, "300", "210"}, {19, "301", "211"},
      {20, "310", "220"}, {21, "311", "221"},
      {22, "320", "230"}, {23, "321", "231"},
      {24, "1000", "300"}, {25, "1001", "301"},
      {26, "1010", "310"}, {27, "1011", "311"},
      {28, "1020", "320"}, {29, "1021", "321"},
      {30, "1100", "330"}, {31, "1101", "331"},
      {32, "1110", "400"}, {33, "1111", "401"},
      {34, "1120", "410"}, {35, "1121", "411"},
      {36, "1200", "420"}, {37, "1201", "421"},
      {38, "1210", "430"}, {39, "1211", "431"},
      {40, "1220", "500"}, {41, "1221", "501"},
      {42, "1300", "510"}, {43, "1301", "511"},
      {44, "1310", "520"}, {45, "1311", "521"},
      {46, "1320", "530"}, {47, "1321", "531"},
      {48, "2000", "1000"}, {49, "2001", "1001"},
      {50, "2010", "1010"}, {51, "2011", "1011"},
      {52, "2020", "1020"}, {53, "2021", "1021"},
      {54, "2100", "1030"}, {55, "2101", "1031"},
      {56, "2110", "1100"}, {57, "2111", "1101"},
      {58, "2120", "1110"}, {59, "2121", "1111"},
      {60, "2300", "1120"}, {61, "2301", "1121"},
      {62, "2310", "1130"}, {63, "2311", "1131"},
      {64, "2320", "1200"}, {65, "2321", "1201"},
      {66, "3000", "1210"}, {67, "3001", "1211"},
      {68, "3010", "1220"}, {69, "3011", "1221"},
      {70, "3020", "1230"}, {71, "3021", "1231"},
      {72, "3100", "1300"}, {73, "3101", "1301"},
      {74, "3110", "1310"}, {75, "3111", "1311"},
      {76, "3120", "1320"}, {77, "3121", "1321"},
      {78, "3200", "1330"}, {79, "3201", "1331"},
  }};
  return rows;
}

bool table1_factorial_erratum(int row) {
  // The printed factorial column drifts from row 60 on (row n shows the
  // encoding of n+6); every row in 60..79 is a misprint.
  return row >= 60 && row <= 79;
}

std::vector<Table1Comparison> compare_table1() {
  std::vector<Table1Row> computed = reproduce_table1(0, 79);
  const auto& printed = table1_printed();
  std::vector<Table1Comparison> out;
  out.reserve(80);
  for (int v = 0; v <= 79; ++v) {
    Table1Comparison cmp;
    cmp.computed = computed[static_cast<std::size_t>(v)];
    cmp.printed = printed[static_cast<std::size_t>(v)];
    cmp.factorial_matches = cmp.computed.factorial == cmp.printed.factorial;
    cmp.hyperoctahedral_matches =
        cmp.computed.hyperoctahedral == cmp.printed.hyperoctahedral;
    cmp.known_erratum = table1_factorial_erratum(v);
    out.push_back(std::move(cmp));
  }
  return out;
}

const std::array<Table2Row, 8>& table2_rows() {
  static const std::array<Table2Row, 8> rows = {{
      {{1, 2}, 0, 0},
      {{1, -2}, 0, 1},
      {{2, 1}, 1, 0},
      {{2, -1}, 1, 1},
      {{-2, 1}, 2, 0},
      {{-2, -1}, 2, 1},
      {{-1, 2}, 3, 0},
      {{-1, -2}, 3, 1},
  }};
  return rows;
}

namespace {

void fail(VerificationReport& report, std::string input, std::string expected,
          std::string got) {
  if (report.failures.size() < 32) {  // keep reports readable
    report.failures.push_back({std::move(input), std::move(expected), std::move(got)});
  } else if (report.failures.size() == 32) {
    report.failures.push_back({"...", "", "further failures suppressed"});
  }
}

std::string str(const std::string& value) { return value; }
std::string str(int value) { return std::to_string(value); }
std::string str(const Integer& value) { return value.get_str(); }
std::string str(const Rational& value) { return value.get_str(); }
std::string str(const DigitSequence& value) {
  return format_digits(Sign::Plus, value);
}
std::string str(const SignedPermutation& value) { return format_window(value); }

std::string str(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string str(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].get_str();
  }
  return out + "]";
}

template <typename A, typename B>
void expect_eq(VerificationReport& report, const std::string& input, const A& expected,
               const B& got) {
  ++report.cases;
  if (!(expected == got)) {
    fail(report, input, str(expected), str(got));
  }
}

void expect_true(VerificationReport& report, const std::string& input, bool condition,
                 const std::string& detail) {
  ++report.cases;
  if (!condition) {
    fail(report, input, "true", detail);
  }
}

std::vector<NumberSystem> named_systems() {
  return {NumberSystem::fixed(2), NumberSystem::fixed(10), NumberSystem::factorial(),
          NumberSystem::hyperoctahedral()};
}

Integer order_of(int n) {
  Integer order = 1;
  for (int k = 1; k <= n; ++k) {
    order *= 2 * k;
  }
  return order;
}

// --- checks -----------------------------------------------------------------

void check_int_roundtrip(int, VerificationReport& report) {
  std::vector<Integer> values;
  values.reserve(10201);
  for (int a = 0; a <= 10000; ++a) {
    values.emplace_back(a);
  }
  std::mt19937_64 rng(0x52414449585F3128ull);
  for (int k = 0; k < 200; ++k) {
    Integer hi(rng()), lo(rng());
    values.push_back((hi << 64) | lo);
  }
  for (const NumberSystem& system : named_systems()) {
    for (const Integer& a : values) {
      Integer back = decode_integer(system, encode_integer(system, a));
      if (back != a) {
        fail(report, system.descriptor() + " " + a.get_str(), a.get_str(),
             back.get_str());
      }
      ++report.cases;
    }
  }
}

void check_digit_uniqueness(int, VerificationReport& report) {
  struct Scope {
    NumberSystem system;
    std::size_t places;
  };
  const std::vector<Scope> scopes = {{NumberSystem::fixed(2), 12},
                                     {NumberSystem::fixed(10), 4},
                                     {NumberSystem::factorial(), 7},
                                     {NumberSystem::hyperoctahedral(), 5}};
  for (const auto& [system, places] : scopes) {
    const Integer range = system.weight(places);
    // Odometer over every digit tuple of exactly `places` places.
    std::vector<Integer> digits(places, Integer(0));
    std::vector<Integer> seen;
    seen.reserve(range.get_ui());
    while (true) {
      std::vector<Integer> copy = digits;
      DigitSequence seq(std::move(copy));
      Integer value = decode_integer(system, seq);
      seen.push_back(value);
      if (!(value >= 0 && value < range)) {
        fail(report, system.descriptor() + " " + str(digits),
             "value in [0," + range.get_str() + ")", value.get_str());
      }
      if (encode_integer(system, value) != seq) {
        fail(report, system.descriptor() + " " + str(digits), "re-encodes to itself",
             value.get_str());
      }
      report.cases += 2;
      std::size_t p = 0;
      while (p < places) {
        if (digits[p] < system.alpha(p)) {
          ++digits[p];
          break;
        }
        digits[p] = 0;
        ++p;
      }
      if (p == places) break;
    }
    std::sort(seen.begin(), seen.end());
    bool bijective = Integer(static_cast<unsigned long>(seen.size())) == range;
    for (std::size_t i = 0; bijective && i < seen.size(); ++i) {
      bijective = seen[i] == Integer(static_cast<unsigned long>(i));
    }
    expect_true(report, system.descriptor() + " covers [0," + range.get_str() + ")",
                bijective, "gaps or repeats in decoded values");
  }
}

void check_leading_digit_bound(int, VerificationReport& report) {
  for (const NumberSystem& system : named_systems()) {
    for (int a = 1; a <= 10000; ++a) {
      DigitSequence d = encode_integer(system, a);
      std::size_t top = d.size() - 1;
      const Integer& lead = d[top];
      Integer w = system.weight(top);
      bool ok = lead * w <= a && a < (lead + 1) * w;
      expect_true(report, system.descriptor() + " " + std::to_string(a), ok,
                  "leading digit " + lead.get_str() + " at place " +
                      std::to_string(top));
    }
  }
}

void check_completeness(int, VerificationReport& report) {
  for (const NumberSystem& system : named_systems()) {
    for (std::size_t n = 1; n <= 12; ++n) {
      Integer w = system.weight(n);
      std::vector<Integer> maximal;
      for (std::size_t i = 0; i < n; ++i) {
        maximal.push_back(system.alpha(i));
      }
      expect_eq(report, system.descriptor() + " weight(" + std::to_string(n) + ")-1",
                DigitSequence(maximal), encode_integer(system, w - 1));
      std::vector<Integer> next(n, Integer(0));
      next.push_back(Integer(1));
      expect_eq(report, system.descriptor() + " weight(" + std::to_string(n) + ")",
                DigitSequence(next), encode_integer(system, w));
    }
  }
}

void check_telescoping(int, VerificationReport& report) {
  for (const NumberSystem& system : named_systems()) {
    for (std::size_t n = 0; n <= 20; ++n) {
      Rational lhs = make_rational(system.alpha(n), system.weight(n + 1));
      Rational rhs = make_rational(1, system.weight(n)) -
                     make_rational(1, system.weight(n + 1));
      expect_eq(report, system.descriptor() + " n=" + std::to_string(n), rhs, lhs);
    }
  }
}

void check_dual_representation(int, VerificationReport& report) {
  for (const NumberSystem& system : named_systems()) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t k = 1; k <= 10; ++k) {
        ExtendedExpansion e = nonterminating_form(system, n, k);
        Rational partial = value_of(system, e);
        Rational target = make_rational(1, system.weight(n)) -
                          make_rational(1, system.weight(n + k));
        expect_eq(report,
                  system.descriptor() + " n=" + std::to_string(n) +
                      " k=" + std::to_string(k),
                  target, partial);
      }
    }
  }
}

void check_exact_rationals(int, VerificationReport& report) {
  const std::vector<NumberSystem> systems = {NumberSystem::factorial(),
                                             NumberSystem::hyperoctahedral()};
  for (const NumberSystem& system : systems) {
    for (int q = 2; q <= 48; ++q) {
      for (int p = 1; p < q; ++p) {
        Rational r = make_rational(p, q);
        auto place = terminating_place(system, r);
        std::string label = system.descriptor() + " " + std::to_string(p) + "/" +
                            std::to_string(q);
        if (!place) {
          fail(report, label, "terminating place", "none found");
          ++report.cases;
          continue;
        }
        ExtendedExpansion e = expand_rational(system, r, *place + 2);
        expect_true(report, label, e.terminated(), "expansion did not terminate");
        expect_eq(report, label, r, value_of(system, e));
        bool bounds = true;
        for (std::size_t i = 0; i < e.frac_digits.size(); ++i) {
          bounds = bounds && e.frac_digits[i] >= 0 && e.frac_digits[i] <= system.alpha(i);
        }
        expect_true(report, label + " digit bounds", bounds, str(e.frac_digits));
        if (e.terminated() && !e.frac_digits.empty()) {
          expect_true(report, label + " last digit nonzero",
                      e.frac_digits.back() != 0, str(e.frac_digits));
        }
      }
    }
  }
}

void check_conversion_table(int, VerificationReport& report) {
  for (const Table1Comparison& cmp : compare_table1()) {
    const std::string label = "row " + std::to_string(cmp.computed.value);
    expect_true(report, label + " hyperoctahedral", cmp.hyperoctahedral_matches,
                cmp.computed.hyperoctahedral + " vs printed " +
                    cmp.printed.hyperoctahedral);
    if (cmp.known_erratum) {
      expect_true(report, label + " factorial misprint confirmed",
                  !cmp.factorial_matches,
                  "printed " + cmp.printed.factorial + " unexpectedly matches");
    } else {
      expect_true(report, label + " factorial", cmp.factorial_matches,
                  cmp.computed.factorial + " vs printed " + cmp.printed.factorial);
    }
  }
}

void check_b2_statistics(int, VerificationReport& report) {
  const auto& rows = table2_rows();
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const Table2Row& row = rows[idx];
    SignedPermutation pi =
        SignedPermutation::from_images({row.window[0], row.window[1]});
    const std::string label = "window " + format_window(pi);
    expect_eq(report, label + " inv1", row.inv1, inversions_at(pi, 1));
    expect_eq(report, label + " inv2", row.inv2, inversions_at(pi, 2));
    expect_eq(report, label + " inv1 (roots)", row.inv1, inversions_at_via_roots(pi, 1));
    expect_eq(report, label + " inv2 (roots)", row.inv2, inversions_at_via_roots(pi, 2));
    expect_eq(report, label + " rank", Integer(static_cast<unsigned long>(idx)),
              rank_hyperoctahedral(pi).value);
  }
}

void check_rank_bijection(int size, VerificationReport& report) {
  const NumberSystem hyp = NumberSystem::hyperoctahedral();
  for (int n = 1; n <= size; ++n) {
    const Integer order = order_of(n);
    std::vector<Integer> ranks;
    ranks.reserve(order.get_ui());
    for (const SignedPermutation& pi : enumerate_group(n)) {
      Rank r = rank_hyperoctahedral(pi);
      if (!(r.value >= 0 && r.value < order)) {
        fail(report, format_window(pi), "rank in [0," + order.get_str() + ")",
             r.value.get_str());
      }
      ++report.cases;
      SignedPermutation back = unrank_hyperoctahedral(r.value, n);
      if (!(back == pi)) {
        fail(report, format_window(pi) + " rank " + r.value.get_str(),
             format_window(pi), format_window(back));
      }
      ++report.cases;
      // The digits of the rank, most significant first, are the statistics.
      DigitSequence digits = encode_integer(hyp, r.value);
      InversionVector stats = inversion_vector(pi);
      bool agree = true;
      for (int i = 1; i <= n; ++i) {
        Integer digit = static_cast<std::size_t>(n - i) < digits.size()
                            ? digits[static_cast<std::size_t>(n - i)]
                            : Integer(0);
        agree = agree && digit == stats[static_cast<std::size_t>(i - 1)];
      }
      expect_true(report, format_window(pi) + " digit/statistic agreement", agree,
                  str(stats));
      ranks.push_back(r.value);
    }
    std::sort(ranks.begin(), ranks.end());
    bool bijective = Integer(static_cast<unsigned long>(ranks.size())) == order;
    for (std::size_t i = 0; bijective && i < ranks.size(); ++i) {
      bijective = ranks[i] == Integer(static_cast<unsigned long>(i));
    }
    expect_true(report, "n=" + std::to_string(n) + " ranks cover [0,2^n n!)",
                bijective, "gaps or repeats");
  }
}

void check_inv_equivalence(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    for (const SignedPermutation& pi : enumerate_group(n)) {
      for (int i = 1; i <= n; ++i) {
        int closed = inversions_at(pi, i);
        int roots = inversions_at_via_roots(pi, i);
        if (closed != roots) {
          fail(report, format_window(pi) + " i=" + std::to_string(i),
               std::to_string(roots), std::to_string(closed));
        }
        ++report.cases;
      }
    }
  }
}

void check_inv_decomposition(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    for (const SignedPermutation& pi : enumerate_group(n)) {
      InversionVector stats = inversion_vector(pi);
      int total = std::accumulate(stats.begin(), stats.end(), 0);
      expect_eq(report, format_window(pi), inversions_via_roots(pi), total);
      bool in_range = true;
      for (int i = 1; i <= n; ++i) {
        int e = stats[static_cast<std::size_t>(i - 1)];
        in_range = in_range && e >= 0 && e <= 2 * (n - i) + 1;
      }
      expect_true(report, format_window(pi) + " entry ranges", in_range, str(stats));
    }
  }
}

void check_inv1_range(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    std::set<int> values;
    for (const SignedPermutation& pi : enumerate_group(n)) {
      values.insert(inversions_at(pi, 1));
    }
    std::set<int> expected;
    for (int v = 0; v < 2 * n; ++v) {
      expected.insert(v);
    }
    expect_true(report, "n=" + std::to_string(n), values == expected,
                "image has " + std::to_string(values.size()) + " values");
  }
}

void check_inv1_separates(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    std::map<int, std::set<int>> by_first_image;
    for (const SignedPermutation& pi : enumerate_group(n)) {
      by_first_image[pi.image(1)].insert(inversions_at(pi, 1));
    }
    std::set<int> distinct;
    bool ok = true;
    for (const auto& [first, values] : by_first_image) {
      ok = ok && values.size() == 1 && distinct.insert(*values.begin()).second;
    }
    expect_true(report, "n=" + std::to_string(n),
                ok && by_first_image.size() == 2 * static_cast<std::size_t>(n),
                "some first images share a statistic value");
  }
}

void check_group_laws(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    const SignedPermutation id = SignedPermutation::identity(n);
    std::vector<SignedPermutation> all = enumerate_group(n);
    std::multiset<Root> base;
    for (const Root& v : positive_roots(n)) {
      base.insert(v);
      base.insert(v.negated());
    }
    for (const SignedPermutation& pi : all) {
      expect_eq(report, "inverse " + format_window(pi), id,
                compose(pi, inverse(pi)));
      expect_eq(report, "left identity " + format_window(pi), pi, compose(id, pi));
      expect_eq(report, "right identity " + format_window(pi), pi, compose(pi, id));
      std::multiset<Root> image;
      for (const Root& v : base) {
        image.insert(act_on_root(pi, v));
      }
      expect_true(report, "root action " + format_window(pi), image == base,
                  "image multiset differs from the root system");
    }
    // Deterministic sample of triples for associativity.
    const std::size_t count = all.size();
    for (std::size_t t = 0; t < 200; ++t) {
      const SignedPermutation& a = all[(t * 37 + 1) % count];
      const SignedPermutation& b = all[(t * 53 + 2) % count];
      const SignedPermutation& c = all[(t * 71 + 3) % count];
      expect_eq(report, "assoc t=" + std::to_string(t),
                compose(compose(a, b), c), compose(a, compose(b, c)));
    }
  }
}

void check_rank_recursion(int size, VerificationReport& report) {
  for (int n = 1; n + 1 <= size; ++n) {
    const Integer order = order_of(n);
    for (const SignedPermutation& pi : enumerate_group(n + 1)) {
      Integer low = rank_hyperoctahedral(pi).value % order;
      Integer reduced = rank_hyperoctahedral(drop_first_column(pi)).value;
      expect_eq(report, format_window(pi), reduced, low);
    }
  }
}

void check_lehmer_bijection(int size, VerificationReport& report) {
  for (int n = 1; n <= size; ++n) {
    Integer fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Integer> ranks;
    do {
      Rank r = rank_symmetric(perm);
      if (!(r.value >= 0 && r.value < fact)) {
        fail(report, str(perm), "rank in [0," + fact.get_str() + ")",
             r.value.get_str());
      }
      ++report.cases;
      if (unrank_symmetric(r.value, n) != perm) {
        fail(report, str(perm) + " rank " + r.value.get_str(), str(perm),
             str(unrank_symmetric(r.value, n)));
      }
      ++report.cases;
      if (n <= 6) {
        std::vector<int> code = lehmer_code(perm);
        int pairs = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) {
              ++pairs;
            }
          }
        }
        expect_eq(report, str(perm) + " code sum", pairs,
                  std::accumulate(code.begin(), code.end(), 0));
      }
      ranks.push_back(r.value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(ranks.begin(), ranks.end());
    bool bijective = Integer(static_cast<unsigned long>(ranks.size())) == fact;
    for (std::size_t i = 0; bijective && i < ranks.size(); ++i) {
      bijective = ranks[i] == Integer(static_cast<unsigned long>(i));
    }
    expect_true(report, "n=" + std::to_string(n) + " ranks cover [0,n!)", bijective,
                "gaps or repeats");
  }
}

void check_worked_examples(int, VerificationReport& report) {
  const NumberSystem fact = NumberSystem::factorial();
  const NumberSystem hyp = NumberSystem::hyperoctahedral();

  ExtendedExpansion e = expand_rational(hyp, make_rational(13, 16), 8);
  expect_eq(report, "13/16 hyperoctahedral", std::string("0.1:2:3"),
            format_expansion(e));
  expect_true(report, "13/16 terminates", e.terminated(), "truncated");

  e = expand_rational(fact, make_rational(23, 24), 8);
  expect_eq(report, "23/24 factorial digits", std::vector<Integer>{1, 2, 3},
            e.frac_digits);
  expect_true(report, "23/24 terminates", e.terminated(), "truncated");

  e = expand_rational(fact, make_rational(47, 30), 8);
  expect_eq(report, "47/30 factorial", std::string("1.1:0:1:3"), format_expansion(e));
  expect_true(report, "47/30 terminates", e.terminated(), "truncated");
  expect_eq(report, "47/30 value back", make_rational(47, 30), value_of(fact, e));

  e = expand_rational(hyp, make_rational(205, 69), 6);
  expect_eq(report, "205/69 hyperoctahedral digits",
            std::vector<Integer>{1, 3, 4, 4, 8, 8}, e.frac_digits);
  expect_true(report, "205/69 truncated at 6", !e.terminated(), "terminated");

  e = expand_decimal(fact, "2.718281828459045", 10);
  expect_eq(report, "e integer part", std::string("1:0"),
            format_digits(Sign::Plus, e.integer_part));
  expect_eq(report, "e fractional digits", std::vector<Integer>(10, Integer(1)),
            e.frac_digits);

  e = expand_decimal(hyp, "1.6487212707001282", 8);
  expect_eq(report, "sqrt(e) hyperoctahedral", std::string("1.1:1:1:1:1:1:1:1"),
            format_expansion(e));
}

struct Check {
  std::string name;
  std::string parameter;
  int default_size;  // 0 when the check is not size-parameterized
  void (*fn)(int, VerificationReport&);
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"int-roundtrip", "0..10^4 + 200 seeded 128-bit; four named systems", 0,
       check_int_roundtrip},
      {"digit-uniqueness", "exhaustive digit tuples, small systems", 0,
       check_digit_uniqueness},
      {"leading-digit-bound", "a=1..10^4; four named systems", 0,
       check_leading_digit_bound},
      {"completeness", "boundary encodings, n<=12", 0, check_completeness},
      {"telescoping", "n<=20; four named systems", 0, check_telescoping},
      {"dual-representation", "n<=10, k<=10; four named systems", 0,
       check_dual_representation},
      {"exact-rationals", "p/q, 1<=p<q<=48; factorial+hyperoctahedral", 0,
       check_exact_rationals},
      {"conversion-table", "rows 0..79 vs printed table", 0, check_conversion_table},
      {"b2-statistics", "eight rank-2 elements", 0, check_b2_statistics},
      {"rank-bijection", "n<=", 5, check_rank_bijection},
      {"inv-equivalence", "n<=", 4, check_inv_equivalence},
      {"inv-decomposition", "n<=", 4, check_inv_decomposition},
      {"inv1-range", "n<=", 5, check_inv1_range},
      {"inv1-separates", "n<=", 4, check_inv1_separates},
      {"group-laws", "n<=", 4, check_group_laws},
      {"rank-recursion", "n<=", 5, check_rank_recursion},
      {"lehmer-bijection", "n<=", 7, check_lehmer_bijection},
      {"worked-examples", "reference fraction/decimal expansions", 0,
       check_worked_examples},
  };
  return all;
}

VerificationReport run_check(const Check& check, std::optional<int> size_override) {
  VerificationReport report;
  report.check = check.name;
  int size = check.default_size;
  if (size_override && check.default_size > 0) {
    size = *size_override;
  }
  report.parameter = check.default_size > 0
                         ? check.parameter + std::to_string(size)
                         : check.parameter;
  auto start = std::chrono::steady_clock::now();
  try {
    check.fn(size, report);
  } catch (const std::exception& e) {
    // One broken check must not take the rest of the suite down with it.
    report.failures.push_back({"<check aborted>", "completion", e.what()});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> names;
  names.reserve(checks().size());
  for (const Check& c : checks()) {
    names.push_back(c.name);
  }
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& selector,
                                          std::optional<int> size_override) {
  std::vector<VerificationReport> reports;
  if (selector == "all") {
    for (const Check& c : checks()) {
      reports.push_back(run_check(c, size_override));
    }
    return reports;
  }
  for (const Check& c : checks()) {
    if (c.name == selector) {
      reports.push_back(run_check(c, size_override));
      return reports;
    }
  }
  throw UnknownCheck("no check named '" + selector + "'");
}

}  // namespace radixcode
