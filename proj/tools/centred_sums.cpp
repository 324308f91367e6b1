// centred-sums: command-line front end for the centred binomial sum library.
//
// Exit status: 0 success or agreement, 1 verification failure or
// disagreement, 2 usage or domain error.

#include "centred/centred.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>

using namespace centred;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv, BFile };

struct Options {
  Format format = Format::Text;
  long r = 0;
  long n = 0;
  std::string method = "direct";
  std::string family;
  std::string name;
  long count = 10;
  long samples = 1000000;
  std::string suite = "all";
  long order = 20;
  long r_max = 8;
  long n_max = 30;
  unsigned jobs = 1;
  std::uint64_t seed = 20140714;
  std::string r_range = "0..4";
  std::string n_range = "0..8";
};

// One row of output; mirrors an entry of the JSON "results" array.
struct Row {
  std::string id;
  std::map<std::string, std::string> inputs;
  std::optional<std::string> expected;
  std::string actual;
  std::string status = "pass";
  ordered_json extra;
};

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json to_json(const std::string &command, const std::map<std::string, std::string> &params,
                     const std::vector<Row> &rows) {
  ordered_json doc;
  doc["manifest"] = {{"command", command},
                     {"parameters", params},
                     {"artifact_version", kVersion},
                     {"timestamp", utc_timestamp()}};
  doc["command"] = command;
  doc["results"] = ordered_json::array();
  for (const auto &row : rows) {
    ordered_json j;
    j["id"] = row.id;
    j["inputs"] = row.inputs;
    if (row.expected)
      j["expected"] = *row.expected;
    j["actual"] = row.actual;
    j["status"] = row.status;
    for (auto it = row.extra.begin(); row.extra.is_object() && it != row.extra.end(); ++it)
      j[it.key()] = it.value();
    doc["results"].push_back(std::move(j));
  }
  return doc;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_rows_csv(const std::vector<Row> &rows) {
  std::cout << "id,expected,actual,status\n";
  for (const auto &row : rows)
    std::cout << csv_field(row.id) << ',' << csv_field(row.expected.value_or("")) << ','
              << csv_field(row.actual) << ',' << row.status << '\n';
}

void reject_bfile(Format f, const char *command) {
  if (f == Format::BFile)
    throw UsageError(std::string("--format bfile is only available for oeis, not ") + command);
}

std::map<std::string, std::string> params_of(std::initializer_list<std::pair<const char *, std::string>> kv) {
  std::map<std::string, std::string> out;
  for (const auto &[k, v] : kv)
    out[k] = v;
  return out;
}

// ---------------------------------------------------------------- compute

struct Route {
  std::string label;
  std::function<BigRational()> eval;
};

std::vector<Route> routes_for(const std::string &method, long r, long n) {
  std::vector<Route> out;
  auto formulas = [&](Method m) {
    for (const auto &use : formulas_for(r, n))
      if (formula_method(use.formula) == m)
        out.push_back({std::string(method_name(m)) + " (" + std::string(formula_name(use.formula)) + ")",
                       [use] { return u_closed(use.formula, use.r, use.n); }});
  };
  const bool all = method == "all";
  if (all || method == "direct")
    out.push_back({"direct", [=] { return u_direct(r, n); }});
  if (n < 0)
    return out;
  if (all && r >= 1)
    out.push_back({"halfrange", [=] { return u_direct_halfrange(r, n); }});
  if (all || method == "recurrence")
    out.push_back({"recurrence", [=] { return u_recurrence(r, n); }});
  if (all || method == "family")
    out.push_back({"family", [=] { return u_from_family(r, n); }});
  if ((all && df_route_applies(r, n)) || method == "df")
    out.push_back({"df", [=] { return u_from_df(r, n); }});
  if (all || method == "carlitz")
    formulas(Method::Carlitz);
  if (all || method == "lagrange")
    formulas(Method::Lagrange);
  if (all || method == "gz")
    formulas(Method::GuoZeng);
  return out;
}

std::string method_ranges(Method m) {
  std::string out;
  for (FormulaId f : kAllFormulas)
    if (formula_method(f) == m)
      out += "\n  " + formula_validity(f);
  return out;
}

int cmd_compute(const Options &o) {
  reject_bfile(o.format, "compute");
  static const std::vector<std::string> methods = {"direct", "recurrence", "family", "df",
                                                   "carlitz", "lagrange", "gz", "all"};
  if (std::find(methods.begin(), methods.end(), o.method) == methods.end())
    throw UsageError("unknown method '" + o.method + "'");
  if (o.r < 0)
    throw DomainError("r must be >= 0");
  if (o.n < 0 && o.method != "direct" && o.method != "all")
    throw DomainError("method " + o.method +
                      " needs n >= 0; the direct method returns 0 for negative n");

  auto routes = routes_for(o.method, o.r, o.n);
  if (routes.empty()) {
    std::string msg = "no " + o.method + " formula covers U_" + std::to_string(o.r) + "(" +
                      std::to_string(o.n) + ")";
    if (o.method == "carlitz")
      msg += method_ranges(Method::Carlitz);
    else if (o.method == "lagrange")
      msg += method_ranges(Method::Lagrange);
    else if (o.method == "gz")
      msg += method_ranges(Method::GuoZeng) + "\n  (S_r(n) = U_r(2n): the argument must be even)";
    throw DomainError(msg);
  }

  std::vector<Row> rows;
  std::optional<BigRational> first;
  bool agree = true;
  for (const auto &route : routes) {
    BigRational v = route.eval();
    Row row;
    row.id = "compute/" + route.label;
    row.inputs = {{"r", std::to_string(o.r)}, {"n", std::to_string(o.n)}, {"route", route.label}};
    row.actual = to_string(v);
    if (first) {
      row.expected = to_string(*first);
      if (v != *first) {
        row.status = "fail";
        agree = false;
      }
    } else {
      first = v;
    }
    rows.push_back(std::move(row));
  }
  const bool many = rows.size() > 1;

  switch (o.format) {
  case Format::Json: {
    auto doc = to_json("compute", params_of({{"r", std::to_string(o.r)}, {"n", std::to_string(o.n)}, {"method", o.method}}), rows);
    if (many)
      doc["verdict"] = agree ? "AGREE" : "DISAGREE";
    std::cout << doc.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    std::cout << "route,value\n";
    for (const auto &row : rows)
      std::cout << csv_field(row.inputs.at("route")) << ',' << row.actual << '\n';
    break;
  default:
    if (!many) {
      std::cout << rows.front().actual << '\n';
    } else {
      std::size_t width = 0;
      for (const auto &row : rows)
        width = std::max(width, row.inputs.at("route").size());
      for (const auto &row : rows) {
        const auto &label = row.inputs.at("route");
        std::cout << label << std::string(width - label.size() + 2, ' ') << row.actual << '\n';
      }
      std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
  }
  return agree ? kOk : kFailed;
}

// ---------------------------------------------------------------- poly

int cmd_poly(const Options &o) {
  reject_bfile(o.format, "poly");
  const std::string fam = o.family;
  std::vector<Row> rows;
  Row row;
  row.id = "poly/" + fam + "_" + std::to_string(o.r);
  row.inputs = {{"family", fam}, {"r", std::to_string(o.r)}};

  if (fam == "F" || fam == "f") {
    if (o.r < 1)
      throw DomainError("F_r is defined for r >= 1");
    const TriPolynomial &f = df_poly(o.r);
    row.actual = f.to_string();
    ordered_json terms = ordered_json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
      terms.push_back({{"exponents", it->first}, {"coefficient", it->second.get_str()}});
    row.extra["terms"] = terms;
    if (o.format == Format::Csv) {
      std::cout << "x,y,z,coefficient\n";
      for (const auto &t : terms)
        std::cout << t["exponents"][0] << ',' << t["exponents"][1] << ',' << t["exponents"][2]
                  << ',' << t["coefficient"].get<std::string>() << '\n';
      return kOk;
    }
  } else {
    if (o.r < 0)
      throw DomainError("r must be >= 0");
    const IntPolynomial p = family_poly(parse_family(fam), o.r);
    row.actual = format_factored(p);
    ordered_json coeffs = ordered_json::array();
    for (const auto &c : p.coefficients())
      coeffs.push_back(c.get_str());
    row.extra["coefficients"] = coeffs;
    row.extra["plain"] = format_plain(p);
    if (o.format == Format::Csv) {
      std::cout << "degree,coefficient\n";
      for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        std::cout << i << ',' << p.coefficients()[i].get_str() << '\n';
      return kOk;
    }
  }
  rows.push_back(std::move(row));
  if (o.format == Format::Json)
    std::cout << to_json("poly", params_of({{"family", fam}, {"r", std::to_string(o.r)}}), rows).dump(2)
              << '\n';
  else
    std::cout << rows.front().actual << '\n';
  return kOk;
}

// ---------------------------------------------------------------- oeis

struct Sequence {
  const char *name;
  long offset;
  const char *description;
  std::function<std::vector<BigInt>(long count)> terms;
};

std::vector<BigInt> leading(FamilyId f, long count) {
  std::vector<BigInt> out;
  for (long r = 0; r < count; ++r)
    out.push_back(family_poly(f, r).leading());
  return out;
}

// Rows flattened in row order, each row in ascending powers of n, cut to
// `count` terms.
std::vector<BigInt> triangle(long first_row, long count,
                             const std::function<IntPolynomial(long)> &row_poly) {
  std::vector<BigInt> out;
  for (long r = first_row; static_cast<long>(out.size()) < count; ++r) {
    const IntPolynomial row = row_poly(r);
    for (const auto &c : row.coefficients())
      if (static_cast<long>(out.size()) < count)
        out.push_back(c);
  }
  return out;
}

IntPolynomial negate_argument(const IntPolynomial &p) { return p.compose(IntPolynomial{0, -1}); }

const std::vector<Sequence> &sequences() {
  static const std::vector<Sequence> table = {
      {"secant", 0, "secant numbers S_r from sec z = 1/cos z",
       [](long c) { return secant_numbers(c); }},
      {"genocchi", 1, "constant term of -P_r(n)/n, r >= 1",
       [](long c) { return classic_sequence(ClassicSequence::Genocchi, c); }},
      {"reduced-tangent", 1, "constant term of (-1)^(r-1) Q_r(n)/n, r >= 1",
       [](long c) { return classic_sequence(ClassicSequence::ReducedTangent, c); }},
      {"pbar-at-zero", 0, "Pbar_r(0), signed",
       [](long c) { return classic_sequence(ClassicSequence::PbarAtZero, c); }},
      {"qbar-at-one", 0, "Qbar_r(1) = (3^(2r)+3)/4",
       [](long c) {
         std::vector<BigInt> out;
         for (long r = 0; r < c; ++r)
           out.push_back(family_poly(FamilyId::Qbar, r)(BigInt(1)));
         return out;
       }},
      {"p-leading", 0, "leading coefficient of P_r", [](long c) { return leading(FamilyId::P, c); }},
      {"q-leading", 0, "leading coefficient of Q_r", [](long c) { return leading(FamilyId::Q, c); }},
      {"pbar-leading", 0, "leading coefficient of Pbar_r",
       [](long c) { return leading(FamilyId::Pbar, c); }},
      {"qbar-leading", 0, "leading coefficient of Qbar_r",
       [](long c) { return leading(FamilyId::Qbar, c); }},
      {"p-triangle", 1, "coefficients of -P_r(-n)/n, rows r >= 1",
       [](long c) {
         return triangle(1, c, [](long r) {
           return negate_argument(family_poly(FamilyId::P, r)).divided_by_variable() * BigInt(-1);
         });
       }},
      {"q-triangle", 1, "coefficients of -Q_r(-n)/n, rows r >= 1",
       [](long c) {
         return triangle(1, c, [](long r) {
           return negate_argument(family_poly(FamilyId::Q, r)).divided_by_variable() * BigInt(-1);
         });
       }},
      {"qbar-triangle", 0, "coefficients of Qbar_r(-n), rows r >= 0",
       [](long c) {
         return triangle(0, c, [](long r) { return negate_argument(family_poly(FamilyId::Qbar, r)); });
       }},
      {"pbar-triangle", 0, "coefficients of Pbar_r(n), rows r >= 0",
       [](long c) { return triangle(0, c, [](long r) { return family_poly(FamilyId::Pbar, r); }); }},
  };
  return table;
}

std::string sequence_help() {
  std::string out = "Sequence names (offset = index of the first term):";
  for (const auto &s : sequences())
    out += "\n  " + std::string(s.name) + " (offset " + std::to_string(s.offset) + "): " + s.description;
  return out;
}

int cmd_oeis(const Options &o) {
  auto it = std::find_if(sequences().begin(), sequences().end(),
                         [&](const Sequence &s) { return o.name == s.name; });
  if (it == sequences().end())
    throw UsageError("unknown sequence '" + o.name + "'\n" + sequence_help());
  if (o.count < 1)
    throw DomainError("--count must be >= 1");
  const auto terms = it->terms(o.count);

  switch (o.format) {
  case Format::BFile:
    for (std::size_t i = 0; i < terms.size(); ++i)
      std::cout << it->offset + static_cast<long>(i) << ' ' << terms[i].get_str() << '\n';
    break;
  case Format::Csv:
    std::cout << "index,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
      std::cout << it->offset + static_cast<long>(i) << ',' << terms[i].get_str() << '\n';
    break;
  case Format::Json: {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Row row;
      const long index = it->offset + static_cast<long>(i);
      row.id = "oeis/" + o.name + "/" + std::to_string(index);
      row.inputs = {{"name", o.name}, {"index", std::to_string(index)}};
      row.actual = terms[i].get_str();
      rows.push_back(std::move(row));
    }
    std::cout << to_json("oeis", params_of({{"name", o.name}, {"count", std::to_string(o.count)}}), rows)
                     .dump(2)
              << '\n';
    break;
  }
  default:
    for (std::size_t i = 0; i < terms.size(); ++i)
      std::cout << (i ? " " : "") << terms[i].get_str();
    std::cout << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options &o) {
  reject_bfile(o.format, "verify");
  if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), o.suite) == std::end(kSuiteNames))
    throw UsageError("unknown suite '" + o.suite + "'");
  if (o.r_max < 1 || o.n_max < 1 || o.order < 0)
    throw DomainError("verify needs --r-max >= 1, --n-max >= 1 and --order >= 0");
  const bool all = o.suite == "all";
  Report report;
  if (all || o.suite == "closed-forms")
    report.append(suite_closed_forms(o.r_max, o.n_max, o.jobs));
  if (all || o.suite == "egf")
    report.append(suite_egf(o.order, o.n_max));
  if (all || o.suite == "tables")
    report.append(suite_tables(o.r_max));
  if (all || o.suite == "df")
    report.append(suite_df(50, o.seed));
  if (all || o.suite == "asymptotics")
    report.append(suite_asymptotics(std::min(o.r_max, 6L)));
  report.sort();

  std::vector<Row> rows;
  for (const auto &c : report.checks)
    rows.push_back({c.id, c.inputs, c.expected, c.actual, c.ok ? "pass" : "fail", {}});

  const auto failures = report.failures();
  switch (o.format) {
  case Format::Json: {
    auto doc = to_json("verify",
                       params_of({{"suite", o.suite},
                                  {"r_max", std::to_string(o.r_max)},
                                  {"n_max", std::to_string(o.n_max)},
                                  {"order", std::to_string(o.order)},
                                  {"jobs", std::to_string(o.jobs)},
                                  {"seed", std::to_string(o.seed)}}),
                       rows);
    doc["summary"] = {{"checks", report.checks.size()}, {"failures", failures}};
    if (!report.notes.empty())
      doc["notes"] = report.notes;
    std::cout << doc.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    print_rows_csv(rows);
    break;
  default:
    for (const auto &row : rows)
      if (row.status == "fail")
        std::cout << "FAIL " << row.id << ": expected " << row.expected.value_or("-") << ", got "
                  << row.actual << '\n';
    std::cout << o.suite << ": " << report.checks.size() << " checks, " << failures
              << " failures\n";
  }
  return failures == 0 ? kOk : kFailed;
}

// ---------------------------------------------------------------- table

std::pair<long, long> parse_range(const std::string &text, const char *flag) {
  auto parse = [&](std::string_view s) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw UsageError(std::string("bad range for ") + flag + ": '" + text + "' (use a..b or a)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = parse(text);
    return {v, v};
  }
  long lo = parse(std::string_view(text).substr(0, dots));
  long hi = parse(std::string_view(text).substr(dots + 2));
  if (lo > hi)
    throw UsageError(std::string("empty range for ") + flag + ": '" + text + "'");
  return {lo, hi};
}

int cmd_table(const Options &o) {
  reject_bfile(o.format, "table");
  auto [r_lo, r_hi] = parse_range(o.r_range, "--r");
  auto [n_lo, n_hi] = parse_range(o.n_range, "--n");
  if (r_lo < 0 || n_lo < 0)
    throw DomainError("table ranges must be nonnegative");
  RecurrenceTable table = RecurrenceTable::from_environment(SumKind::U);

  std::vector<Row> rows;
  for (long r = r_lo; r <= r_hi; ++r) {
    for (long n = n_lo; n <= n_hi; ++n) {
      BigRational v = table.value(r, n);
      Row row;
      row.id = "U_" + std::to_string(r) + "(" + std::to_string(n) + ")";
      row.inputs = {{"r", std::to_string(r)}, {"n", std::to_string(n)}};
      row.actual = to_string(v);
      row.extra["numerator"] = v.get_num().get_str();
      row.extra["denominator_log2"] = dyadic_exponent(v);
      rows.push_back(std::move(row));
    }
  }
  switch (o.format) {
  case Format::Json:
    std::cout << to_json("table", params_of({{"r", o.r_range}, {"n", o.n_range}}), rows).dump(2)
              << '\n';
    break;
  case Format::Csv:
    std::cout << "r,n,numerator,denominator_log2\n";
    for (const auto &row : rows)
      std::cout << row.inputs.at("r") << ',' << row.inputs.at("n") << ','
                << row.extra["numerator"].get<std::string>() << ','
                << row.extra["denominator_log2"].get<long>() << '\n';
    break;
  default:
    for (const auto &row : rows)
      std::cout << row.id << " = " << row.actual << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- walk

int cmd_walk(const Options &o) {
  reject_bfile(o.format, "walk");
  auto est = walk_moment_mc(o.r, o.n, o.samples, o.seed);
  const BigRational exact = u_direct(o.r, o.n) * pow2q(-o.n);
  const double exact_d = exact.get_d();
  const double z = est.std_error > 0 ? std::fabs(est.mean - exact_d) / est.std_error : 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", est.mean);
  Row row;
  row.id = "walk/r=" + std::to_string(o.r) + "/n=" + std::to_string(o.n);
  row.inputs = {{"r", std::to_string(o.r)},
                {"n", std::to_string(o.n)},
                {"samples", std::to_string(o.samples)},
                {"seed", std::to_string(o.seed)}};
  row.expected = to_string(exact);
  row.actual = buf;
  row.status = z <= 5.0 ? "pass" : "fail";
  row.extra["std_error"] = est.std_error;
  row.extra["z_score"] = z;
  switch (o.format) {
  case Format::Json:
    std::cout << to_json("walk", row.inputs, {row}).dump(2) << '\n';
    break;
  case Format::Csv:
    std::cout << "mean,std_error,exact,z_score\n"
              << buf << ',' << est.std_error << ',' << *row.expected << ',' << z << '\n';
    break;
  default:
    std::cout << "estimate " << buf << " +/- " << est.std_error << " (exact " << *row.expected
              << ", z = " << z << ")\n";
  }
  return row.status == "pass" ? kOk : kFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact centred binomial sums U_r(n) = sum_k C(n,k)|n/2-k|^r and S_r(n) = U_r(2n)",
               "centred-sums"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}, {"bfile", Format::BFile}};
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "Output format: text, json, csv or bfile")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto *compute = app.add_subcommand("compute", "Evaluate U_r(n) by one method or all of them");
  compute->add_option("--r", o.r, "Order r >= 0")->required();
  compute->add_option("--n", o.n, "Argument n (negative n gives 0 by convention)")->required();
  compute->add_option("--method", o.method,
                      "direct, recurrence, family, df, carlitz, lagrange, gz or all");
  add_format(compute);

  auto *poly = app.add_subcommand("poly", "Print P_r, Pbar_r, Q_r, Qbar_r or F_r");
  poly->add_option("--family", o.family, "P, Pbar, Q, Qbar or F")->required();
  poly->add_option("--r", o.r, "Index r")->required();
  add_format(poly);

  auto *oeis = app.add_subcommand("oeis", "Emit an integer sequence");
  oeis->footer(sequence_help());
  oeis->add_option("--name", o.name, "Sequence name")->required();
  oeis->add_option("--count", o.count, "Number of terms")->capture_default_str();
  add_format(oeis);

  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "all, closed-forms, egf, tables, df or asymptotics")
      ->capture_default_str();
  verify->add_option("--r-max", o.r_max, "Largest order for the matrix and tables")->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest argument for the matrix and egf checks")
      ->capture_default_str();
  verify->add_option("--order", o.order, "Series truncation order for egf checks")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "Worker threads for the cross-method matrix")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for the random Carlitz sample points")->capture_default_str();
  add_format(verify);

  auto *table = app.add_subcommand("table", "Tabulate U_r(n) over a grid via the recurrences");
  table->add_option("--r", o.r_range, "Order range a..b")->capture_default_str();
  table->add_option("--n", o.n_range, "Argument range a..b")->capture_default_str();
  add_format(table);

  auto *walk = app.add_subcommand("walk", "Monte Carlo estimate of E|n/2 - K|^r = U_r(n)/2^n");
  walk->add_option("--r", o.r, "Order r")->required();
  walk->add_option("--n", o.n, "Number of steps n")->required();
  walk->add_option("--count", o.samples, "Number of samples")->capture_default_str();
  walk->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  add_format(walk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(o);
    if (poly->parsed())
      return cmd_poly(o);
    if (oeis->parsed())
      return cmd_oeis(o);
    if (verify->parsed())
      return cmd_verify(o);
    if (table->parsed())
      return cmd_table(o);
    if (walk->parsed())
      return cmd_walk(o);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError &e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
