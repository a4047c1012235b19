// segstat command-line interface.
//
// Exit codes: 0 success, 1 usage error, 2 verification or oracle failure,
// 3 enumeration bound exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segstat/bell.hpp"
#include "segstat/compositions.hpp"
#include "segstat/lagrange.hpp"
#include "segstat/matrixcomp.hpp"
#include "segstat/motzkin.hpp"
#include "segstat/verify.hpp"

using namespace segstat;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitBound = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

// Rows "family,index,numerator,denominator"; blank lines and lines starting with '#' are skipped.
// Indices that are not listed get weight 0.
WeightSpec csv_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open weight file '" + path + "'");
  std::map<long, Rational> t;
  std::map<long, Rational> s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    const std::string where = path + ":" + std::to_string(line_no);
    if (cells.size() != 4) throw UsageError(where + ": expected family,index,numerator,denominator");
    const long index = parse_long(cells[1]);
    if (index < 1) throw UsageError(where + ": index must be >= 1");
    Rational value;
    try {
      value = make_rational(Integer(cells[2]), Integer(cells[3]));
    } catch (const std::exception&) {
      throw UsageError(where + ": bad rational " + cells[2] + "/" + cells[3]);
    }
    if (cells[0] == "t") {
      t[index] = value;
    } else if (cells[0] == "s") {
      s[index] = value;
    } else {
      throw UsageError(where + ": family must be t or s");
    }
  }
  const auto rule = [](std::map<long, Rational> table) {
    return [table = std::move(table)](long i) -> WeightValue {
      const auto it = table.find(i);
      return it == table.end() ? Rational(0) : it->second;
    };
  };
  return WeightSpec("csv:" + path, rule(std::move(t)), rule(std::move(s)));
}

WeightSpec parse_weights(const std::string& text) {
  if (text.rfind("csv:", 0) == 0) return csv_weights(text.substr(4));
  try {
    return named_weights(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string show(const Polynomial& p, const WeightSpec& w) { return to_string(substitute(p, w)); }

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

void emit(const std::string& format, const std::string& label, const std::string& value) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["quantity"] = label;
    j["value"] = value;
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "quantity,value\n" << label << "," << value << "\n";
  } else {
    std::cout << value << "\n";
  }
}

// ---- bell -------------------------------------------------------------------------

struct BellOptions {
  long n = 0;
  long r = 0;
  std::string weights = "symbolic";
  bool oracle = false;
};

int run_bell(const BellOptions& o) {
  if (o.n < 0) throw UsageError("--n must be >= 0");
  const WeightSpec w = parse_weights(o.weights);
  const WeightVector x([w](long i) { return w.t(i); });
  const Polynomial value = o.r < 0 ? Polynomial() : BellTable(o.n, x)(o.n, o.r);
  std::cout << to_string(value) << "\n";
  if (o.oracle) {
    const Polynomial check = o.r < 0 || o.r > o.n ? Polynomial() : partial_bell_oracle(o.n, o.r, x);
    if (check != value) {
      std::cerr << "oracle mismatch: partition sum gives " << to_string(check) << "\n";
      return kExitFailure;
    }
  }
  return 0;
}

// ---- motzkin ----------------------------------------------------------------------

struct MotzkinOptions {
  long m = 0;
  long k = 0;
  std::string weights = "symbolic";
  std::string by_segments;
  std::string format = "text";
  std::string method = "closed";
  long max_n = 10;
  long bound = kDefaultPathBound;
};

Polynomial motzkin_value(long m, long k, const WeightSpec& w, const MotzkinOptions& o) {
  if (o.method == "brute") return weighted_sum_bruteforce(m, k, w, o.bound);
  if (o.method == "series") {
    return motzkin_gf(w, static_cast<int>(m), static_cast<int>(k)).coeff(static_cast<int>(m), static_cast<int>(k));
  }
  return weighted_sum_closed(m, k, w);
}

int run_motzkin(const std::string& mode, const MotzkinOptions& o) {
  check_format(o.format, {"text", "json", "csv"});
  if (o.method != "closed" && o.method != "brute" && o.method != "series")
    throw UsageError("--method must be closed, brute or series");
  if (mode == "table") {
    if (o.max_n < 0) throw UsageError("--max-n must be >= 0");
    const WeightSpec w = parse_weights(o.weights);
    std::vector<std::vector<std::string>> rows;
    for (long n = 0; n <= o.max_n; ++n) {
      std::vector<std::string> row;
      for (long m = 0; 2 * m <= n; ++m) row.push_back(show(motzkin_value(m, n - 2 * m, w, o), w));
      rows.push_back(std::move(row));
    }
    if (o.format == "csv") {
      std::cout << "n";
      for (long m = 0; 2 * m <= o.max_n; ++m) std::cout << ",m=" << m;
      std::cout << "\n";
      for (std::size_t n = 0; n < rows.size(); ++n) {
        std::cout << n;
        for (const auto& v : rows[n]) std::cout << "," << v;
        std::cout << "\n";
      }
    } else if (o.format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t m = 0; m < rows[n].size(); ++m)
          arr.push_back({{"n", n}, {"m", m}, {"k", n - 2 * m}, {"value", rows[n][m]}});
      std::cout << arr.dump(2) << "\n";
    } else {
      for (std::size_t n = 0; n < rows.size(); ++n) {
        std::cout << "n=" << n << ":";
        for (const auto& v : rows[n]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (o.m < 0 || o.k < 0) throw UsageError("--m and --k must be >= 0");
  const std::string label = "m=" + std::to_string(o.m) + ",k=" + std::to_string(o.k);
  if (mode == "count") {
    const Integer count = o.method == "brute"
                              ? count_paths_bruteforce(o.m, o.k, o.bound)
                              : to_integer(specialize(motzkin_value(o.m, o.k, WeightSpec::all_ones(), o), WeightSpec::all_ones()));
    emit(o.format, "count " + label, count.get_str());
    return 0;
  }
  const WeightSpec w = parse_weights(o.weights);
  if (!o.by_segments.empty()) {
    const auto parts = split(o.by_segments, ',');
    if (parts.size() != 2) throw UsageError("--by-segments expects R,L");
    const long r = parse_long(parts[0]);
    const long l = parse_long(parts[1]);
    emit(o.format, "weighted " + label + ",r=" + parts[0] + ",l=" + parts[1],
         show(weighted_sum_by_segments(o.m, o.k, r, l, w), w));
    return 0;
  }
  emit(o.format, "weighted " + label, show(motzkin_value(o.m, o.k, w, o), w));
  return 0;
}

// ---- comp / matcomp ------------------------------------------------------------------

struct CompOptions {
  long m = 0;
  long j = 0;
  long k = 0;
  std::string weights = "symbolic";
  std::string allowed;
  std::optional<long> forbid;
  std::string format = "text";
  std::string method = "closed";
};

int run_comp(const std::string& mode, const CompOptions& o) {
  check_format(o.format, {"text", "json", "csv"});
  if (o.m < 0 || o.j < 0 || o.k < 0) throw UsageError("--m, --j and --k must be >= 0");
  const std::string label = "m=" + std::to_string(o.m) + ",j=" + std::to_string(o.j);
  if (mode == "restricted") {
    std::set<long> allowed;
    if (!o.allowed.empty())
      for (const auto& a : split(o.allowed, ',')) allowed.insert(parse_long(a));
    emit(o.format, "restricted " + label, restricted_count(o.m, o.j, allowed, o.forbid).get_str());
    return 0;
  }
  const WeightSpec w = mode == "count" ? WeightSpec::all_ones() : parse_weights(o.weights);
  const Polynomial value = o.method == "brute" ? comp_weighted_bruteforce(o.m, o.k, o.j, w)
                                                : comp_weighted_closed(o.m, o.k, o.j, w);
  emit(o.format, mode + " " + label + ",k=" + std::to_string(o.k), show(value, w));
  return 0;
}

struct MatcompOptions {
  long m = 0;
  long p = 0;
  long j = 0;
  long v = 0;
  std::string weights = "symbolic";
  std::string format = "text";
  std::string method = "closed";
};

int run_matcomp(const std::string& mode, const MatcompOptions& o) {
  check_format(o.format, {"text", "json", "csv"});
  if (o.m < 0 || o.p < 0 || o.j < 0 || o.v < 0) throw UsageError("sizes must be >= 0");
  if (mode == "trees") {
    emit(o.format, "trees v=" + std::to_string(o.v) + ",j=" + std::to_string(o.j),
         bounded_outdegree_tree_count(o.v, o.j).get_str());
    return 0;
  }
  const std::string label = "m=" + std::to_string(o.m) + ",p=" + std::to_string(o.p) + ",j=" + std::to_string(o.j);
  if (mode == "zero-one") {
    emit(o.format, "zero-one " + label, zero_one_count(o.p, o.j, o.m).get_str());
    return 0;
  }
  const WeightSpec w = mode == "count" ? WeightSpec::all_ones() : parse_weights(o.weights);
  const Polynomial value = o.method == "brute" ? bipartite_weighted_bruteforce(o.m, o.p, o.j, w)
                                                : bipartite_weighted_closed(o.m, o.p, o.j, w);
  emit(o.format, mode + " " + label, show(value, w));
  return 0;
}

// ---- verify -------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  long max_n = 8;
  std::string format = "text";
  unsigned jobs = 1;
};

int run_verify(const VerifyOptions& o) {
  check_format(o.format, {"text", "json"});
  std::vector<IdentityResult> results;
  try {
    results = run_suite(o.suite, o.max_n, std::max(1U, o.jobs));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << format_report(results, o.format);
  return all_passed(results) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted enumeration of Motzkin paths, compositions and matrix compositions"};
  app.require_subcommand(1);

  BellOptions bell;
  auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B_{n,r}");
  bell_cmd->add_option("--n", bell.n, "Degree n")->required();
  bell_cmd->add_option("--r", bell.r, "Number of blocks r")->required();
  bell_cmd->add_option("--weights", bell.weights, "symbolic, all-ones, a named kind, or csv:<file> (t-family is used)");
  bell_cmd->add_flag("--oracle", bell.oracle, "Cross-check against the partition-sum evaluator");

  MotzkinOptions motz;
  std::string motz_mode;
  auto* motz_cmd = app.add_subcommand("motzkin", "Weighted Motzkin path sums");
  motz_cmd->add_option("mode", motz_mode, "count, weighted or table")->required()->check(CLI::IsMember({"count", "weighted", "table"}));
  motz_cmd->add_option("--m", motz.m, "Number of up-steps");
  motz_cmd->add_option("--k", motz.k, "Number of horizontal steps");
  motz_cmd->add_option("--weights", motz.weights, "Weight specification");
  motz_cmd->add_option("--by-segments", motz.by_segments, "Restrict to R u-segments and L h-segments, given as R,L");
  motz_cmd->add_option("--format", motz.format, "text, json or csv");
  motz_cmd->add_option("--method", motz.method, "closed, brute or series");
  motz_cmd->add_option("--max-n", motz.max_n, "Largest path length in table mode");
  motz_cmd->add_option("--bound", motz.bound, "Largest path length the brute-force method may enumerate");

  CompOptions comp;
  std::string comp_mode;
  auto* comp_cmd = app.add_subcommand("comp", "Weighted compositions");
  comp_cmd->add_option("mode", comp_mode, "count, weighted or restricted")->required()->check(CLI::IsMember({"count", "weighted", "restricted"}));
  comp_cmd->add_option("--m", comp.m, "Sum of the parts")->required();
  comp_cmd->add_option("--j", comp.j, "Number of parts")->required();
  comp_cmd->add_option("--k", comp.k, "Number of zero parts");
  comp_cmd->add_option("--weights", comp.weights, "Weight specification");
  comp_cmd->add_option("--allowed", comp.allowed, "Allowed part sizes, comma separated");
  comp_cmd->add_option("--forbid", comp.forbid, "Forbidden part size");
  comp_cmd->add_option("--format", comp.format, "text, json or csv");
  comp_cmd->add_option("--method", comp.method, "closed or brute")->check(CLI::IsMember({"closed", "brute"}));

  MatcompOptions mat;
  std::string mat_mode;
  auto* mat_cmd = app.add_subcommand("matcomp", "Bipartite matrix compositions and plane trees");
  mat_cmd->add_option("mode", mat_mode, "count, weighted, zero-one or trees")->required()->check(CLI::IsMember({"count", "weighted", "zero-one", "trees"}));
  mat_cmd->add_option("--m", mat.m, "Sum of the entries");
  mat_cmd->add_option("--p", mat.p, "Number of rows");
  mat_cmd->add_option("--j", mat.j, "Number of columns (maximum outdegree in trees mode)");
  mat_cmd->add_option("--v", mat.v, "Number of tree vertices");
  mat_cmd->add_option("--weights", mat.weights, "Weight specification");
  mat_cmd->add_option("--format", mat.format, "text, json or csv");
  mat_cmd->add_option("--method", mat.method, "closed or brute")->check(CLI::IsMember({"closed", "brute"}));

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run identity verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver_cmd->add_option("--suite", ver.suite, "Suite name or all")->check(CLI::IsMember(suites));
  ver_cmd->add_option("--max-n", ver.max_n, "Size bound for the checks");
  ver_cmd->add_option("--format", ver.format, "text or json");
  ver_cmd->add_option("--jobs", ver.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bell_cmd) return run_bell(bell);
    if (*motz_cmd) return run_motzkin(motz_mode, motz);
    if (*comp_cmd) return run_comp(comp_mode, comp);
    if (*mat_cmd) return run_matcomp(mat_mode, mat);
    if (*ver_cmd) return run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "enumeration bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
