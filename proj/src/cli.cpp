#include <radixcode/cli.hpp>

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <radixcode/coding.hpp>
#include <radixcode/errors.hpp>
#include <radixcode/inversion.hpp>
#include <radixcode/number_system.hpp>
#include <radixcode/rational.hpp>
#include <radixcode/signed_perm.hpp>
#include <radixcode/verify.hpp>

namespace radixcode::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json json_base(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string status_name(const ExtendedExpansion& e) {
  return e.terminated() ? "terminating" : "truncated";
}

RankFamily parse_family(const std::string& name) {
  if (name == "hyp" || name == "hyperoctahedral") {
    return RankFamily::Hyperoctahedral;
  }
  if (name == "sym" || name == "symmetric") {
    return RankFamily::Symmetric;
  }
  throw Error("unknown family '" + name + "' (expected sym or hyp)");
}

std::string format_perm(const std::vector<int>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(perm[i]);
  }
  return out;
}

std::vector<int> parse_perm(const std::string& text) {
  SignedPermutation window = parse_window(text);
  std::vector<int> perm = window.images();
  for (int v : perm) {
    if (v < 0) {
      throw NotAPermutation("plain permutations take positive entries");
    }
  }
  return perm;
}

struct ConvertArgs {
  std::string value;
  std::string system;
  std::string from;
  std::string to;
  bool compact = false;
  bool json_mode = false;
};

int run_convert(const ConvertArgs& a, std::ostream& out) {
  std::optional<NumberSystem> target;
  if (!a.to.empty()) {
    target = parse_system(a.to);
  } else if (!a.system.empty()) {
    target = parse_system(a.system);
  }

  Sign sign = Sign::Plus;
  Integer value;
  if (!a.from.empty()) {
    NumberSystem source = parse_system(a.from);
    ParsedNumber parsed = parse_digits(a.value);
    if (!parsed.frac_digits.empty()) {
      throw Error("convert takes integer digit strings; use frac/real for fractions");
    }
    sign = parsed.sign;
    value = decode_integer(source, parsed.integer_part);
  } else {
    if (!target) {
      throw Error("convert needs --system (or --from) to name a system");
    }
    value = parse_integer(a.value);
    if (value < 0) {
      sign = Sign::Minus;
      value = -value;
    }
  }

  json j = json_base("convert");
  j["value"] = (sign == Sign::Minus ? "-" : "") + value.get_str();
  std::string rendered;
  if (target) {
    DigitSequence digits = encode_integer(*target, value);
    rendered = format_digits(sign, digits, {}, a.compact);
    j["system"] = target->descriptor();
    j["digits"] = rendered;
  } else {
    rendered = (sign == Sign::Minus ? "-" : "") + value.get_str();
  }
  if (a.json_mode) {
    out << j.dump() << '\n';
  } else {
    out << rendered << '\n';
  }
  return kExitOk;
}

struct FracArgs {
  std::string ratio;
  std::string system;
  std::size_t max_digits = 16;
  bool exact = false;
  bool compact = false;
  bool json_mode = false;
};

int run_frac(const FracArgs& a, std::ostream& out) {
  NumberSystem system = parse_system(a.system);
  Rational value = parse_rational(a.ratio);
  ExtendedExpansion e = expand_rational(system, value, a.max_digits);
  if (a.exact && !e.terminated()) {
    throw Error("expansion of " + a.ratio + " did not terminate within " +
                std::to_string(a.max_digits) + " digits");
  }
  auto place = terminating_place(system, value);
  if (a.json_mode) {
    json j = json_base("frac");
    j["system"] = system.descriptor();
    j["input"] = a.ratio;
    j["digits"] = format_expansion(e, a.compact);
    j["status"] = status_name(e);
    if (place) {
      j["terminating_place"] = *place;
    }
    out << j.dump() << '\n';
  } else {
    out << format_expansion(e, a.compact) << " (" << status_name(e);
    if (!e.terminated() && place) {
      out << "; terminates at place " << *place;
    }
    out << ")\n";
  }
  return kExitOk;
}

struct RealArgs {
  std::string decimal;
  std::string system;
  std::size_t max_digits = 10;
  bool compact = false;
  bool json_mode = false;
};

int run_real(const RealArgs& a, std::ostream& out) {
  NumberSystem system = parse_system(a.system);
  ExtendedExpansion e = expand_decimal(system, a.decimal, a.max_digits);
  if (a.json_mode) {
    json j = json_base("real");
    j["system"] = system.descriptor();
    j["input"] = a.decimal;
    j["digits"] = format_expansion(e, a.compact);
    j["status"] = status_name(e);
    if (e.certified) {
      j["certified_digits"] = *e.certified;
    }
    out << j.dump() << '\n';
  } else {
    out << format_expansion(e, a.compact) << " (" << status_name(e);
    if (!e.terminated() && e.certified) {
      out << "; input certifies " << *e.certified << " places";
    }
    out << ")\n";
  }
  return kExitOk;
}

struct RankArgs {
  std::string window;
  std::string family = "hyp";
  bool json_mode = false;
};

int run_rank(const RankArgs& a, std::ostream& out) {
  RankFamily family = parse_family(a.family);
  Rank rank;
  if (family == RankFamily::Hyperoctahedral) {
    rank = rank_hyperoctahedral(parse_window(a.window));
  } else {
    rank = rank_symmetric(parse_perm(a.window));
  }
  if (a.json_mode) {
    json j = json_base("rank");
    j["family"] = family == RankFamily::Hyperoctahedral ? "hyp" : "sym";
    j["n"] = rank.n;
    j["input"] = a.window;
    j["rank"] = rank.value.get_str();
    out << j.dump() << '\n';
  } else {
    out << rank.value.get_str() << '\n';
  }
  return kExitOk;
}

struct UnrankArgs {
  std::string value;
  int n = 0;
  std::string family = "hyp";
  bool json_mode = false;
};

int run_unrank(const UnrankArgs& a, std::ostream& out) {
  RankFamily family = parse_family(a.family);
  Integer value = parse_integer(a.value);
  std::string window;
  if (family == RankFamily::Hyperoctahedral) {
    window = format_window(unrank_hyperoctahedral(value, a.n));
  } else {
    window = format_perm(unrank_symmetric(value, a.n));
  }
  if (a.json_mode) {
    json j = json_base("unrank");
    j["family"] = family == RankFamily::Hyperoctahedral ? "hyp" : "sym";
    j["n"] = a.n;
    j["rank"] = value.get_str();
    j["window"] = window;
    out << j.dump() << '\n';
  } else {
    out << window << '\n';
  }
  return kExitOk;
}

struct InvArgs {
  std::string window;
  bool json_mode = false;
};

int run_inv(const InvArgs& a, std::ostream& out) {
  SignedPermutation pi = parse_window(a.window);
  InversionVector vec = inversion_vector(pi);
  int total = inversions(pi);
  if (a.json_mode) {
    json j = json_base("inv");
    j["input"] = format_window(pi);
    j["inv"] = total;
    j["vector"] = vec;
    out << j.dump() << '\n';
  } else {
    out << "inv " << total << '\n';
    std::string entries;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (i) entries += ',';
      entries += std::to_string(vec[i]);
    }
    out << "vector " << entries << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  int lo = 0;
  int hi = 79;
  bool diff = false;
  bool json_mode = false;
};

int run_table(const TableArgs& a, std::ostream& out) {
  if (a.diff && (a.lo < 0 || a.hi > 79)) {
    throw Error("--diff covers only the printed rows 0..79");
  }
  json j = json_base("table");
  j["rows"] = json::array();
  if (a.diff) {
    for (const Table1Comparison& cmp : compare_table1()) {
      if (cmp.computed.value < a.lo || cmp.computed.value > a.hi) continue;
      if (a.json_mode) {
        j["rows"].push_back(
            {{"value", cmp.computed.value},
             {"factorial", cmp.computed.factorial},
             {"hyperoctahedral", cmp.computed.hyperoctahedral},
             {"printed_factorial", cmp.printed.factorial},
             {"printed_hyperoctahedral", cmp.printed.hyperoctahedral},
             {"matches_print", cmp.factorial_matches && cmp.hyperoctahedral_matches},
             {"known_erratum", cmp.known_erratum}});
      } else {
        out << cmp.computed.value << '\t' << cmp.computed.factorial << '\t'
            << cmp.computed.hyperoctahedral << '\t';
        if (cmp.factorial_matches && cmp.hyperoctahedral_matches) {
          out << "matches print";
        } else if (cmp.known_erratum && !cmp.factorial_matches &&
                   cmp.hyperoctahedral_matches) {
          out << "known misprint (printed " << cmp.printed.factorial << ")";
        } else {
          out << "UNEXPECTED diff (printed " << cmp.printed.factorial << ' '
              << cmp.printed.hyperoctahedral << ")";
        }
        out << '\n';
      }
    }
  } else {
    for (const Table1Row& row : reproduce_table1(a.lo, a.hi)) {
      if (a.json_mode) {
        j["rows"].push_back({{"value", row.value},
                             {"factorial", row.factorial},
                             {"hyperoctahedral", row.hyperoctahedral}});
      } else {
        out << row.value << '\t' << row.factorial << '\t' << row.hyperoctahedral
            << '\n';
      }
    }
  }
  if (a.json_mode) {
    out << j.dump() << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> size;
  bool list = false;
  bool json_mode = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    for (const std::string& name : registered_checks()) {
      out << name << '\n';
    }
    return kExitOk;
  }
  std::vector<VerificationReport> reports = run_suite(a.suite, a.size);
  bool all_passed = true;
  json j = json_base("verify");
  j["reports"] = json::array();
  for (const VerificationReport& r : reports) {
    all_passed = all_passed && r.passed();
    if (a.json_mode) {
      json failures = json::array();
      for (const VerificationFailure& f : r.failures) {
        failures.push_back(
            {{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
      }
      j["reports"].push_back({{"check", r.check},
                              {"parameter", r.parameter},
                              {"cases", r.cases},
                              {"passed", r.passed()},
                              {"elapsed_seconds", r.elapsed_seconds},
                              {"failures", failures}});
    } else {
      out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.check << " (" << r.parameter
          << "; " << r.cases << " cases; " << r.elapsed_seconds << "s)\n";
      for (const VerificationFailure& f : r.failures) {
        out << "       " << f.input << ": expected " << f.expected << ", got "
            << f.got << '\n';
      }
    }
  }
  if (a.json_mode) {
    j["passed"] = all_passed;
    out << j.dump() << '\n';
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mixed-radix number systems and signed-permutation ranking"};
  app.require_subcommand(1);

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand(
      "convert", "encode an integer as digits, or convert digit strings");
  convert->add_option("value", convert_args.value, "integer or digit string")
      ->required();
  convert->add_option("--system", convert_args.system, "target system descriptor");
  convert->add_option("--from", convert_args.from, "source system of a digit string");
  convert->add_option("--to", convert_args.to, "target system descriptor");
  convert->add_flag("--compact", convert_args.compact, "colon-free form when digits <= 9");
  convert->add_flag("--json", convert_args.json_mode, "emit one JSON object");

  FracArgs frac_args;
  CLI::App* frac = app.add_subcommand("frac", "expand a rational p/q");
  frac->add_option("ratio", frac_args.ratio, "rational as p/q")->required();
  frac->add_option("--system", frac_args.system, "system descriptor")->required();
  frac->add_option("--max-digits", frac_args.max_digits, "fractional digit limit");
  frac->add_flag("--exact", frac_args.exact, "fail unless the expansion terminates");
  frac->add_flag("--compact", frac_args.compact, "colon-free form when digits <= 9");
  frac->add_flag("--json", frac_args.json_mode, "emit one JSON object");

  RealArgs real_args;
  CLI::App* real = app.add_subcommand("real", "expand a decimal literal");
  real->add_option("decimal", real_args.decimal, "decimal literal, e.g. 2.71828")
      ->required();
  real->add_option("--system", real_args.system, "system descriptor")->required();
  real->add_option("--max-digits", real_args.max_digits, "fractional digit limit");
  real->add_flag("--compact", real_args.compact, "colon-free form when digits <= 9");
  real->add_flag("--json", real_args.json_mode, "emit one JSON object");

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand("rank", "rank of a (signed) permutation");
  rank->add_option("window", rank_args.window, "window notation, e.g. -2,-1")
      ->required();
  rank->add_option("--family", rank_args.family, "sym or hyp (default hyp)");
  rank->add_flag("--json", rank_args.json_mode, "emit one JSON object");

  UnrankArgs unrank_args;
  CLI::App* unrank = app.add_subcommand("unrank", "element with a given rank");
  unrank->add_option("rank", unrank_args.value, "rank value")->required();
  unrank->add_option("-n,--size", unrank_args.n, "group rank n")->required();
  unrank->add_option("--family", unrank_args.family, "sym or hyp (default hyp)");
  unrank->add_flag("--json", unrank_args.json_mode, "emit one JSON object");

  InvArgs inv_args;
  CLI::App* inv = app.add_subcommand("inv", "inversion statistics of an element");
  inv->add_option("window", inv_args.window, "window notation, e.g. -2,-1")
      ->required();
  inv->add_flag("--json", inv_args.json_mode, "emit one JSON object");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "factorial/hyperoctahedral table rows");
  table->add_option("--lo", table_args.lo, "first row (default 0)");
  table->add_option("--hi", table_args.hi, "last row (default 79)");
  table->add_flag("--diff", table_args.diff, "compare against the printed table");
  table->add_flag("--json", table_args.json_mode, "emit one JSON object");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run consistency checks");
  verify->add_option("--suite", verify_args.suite, "check name or 'all'");
  int size_value = 0;
  CLI::Option* size_opt =
      verify->add_option("--n", size_value, "override the size of sized checks");
  verify->add_flag("--list", verify_args.list, "list registered checks");
  verify->add_flag("--json", verify_args.json_mode, "emit one JSON object");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*convert) return run_convert(convert_args, out);
    if (*frac) return run_frac(frac_args, out);
    if (*real) return run_real(real_args, out);
    if (*rank) return run_rank(rank_args, out);
    if (*unrank) return run_unrank(unrank_args, out);
    if (*inv) return run_inv(inv_args, out);
    if (*table) return run_table(table_args, out);
    if (*verify) {
      if (size_opt->count() > 0) {
        verify_args.size = size_value;
      }
      return run_verify(verify_args, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace radixcode::cli
