// Python bindings. Exact values cross the boundary as "p/q" strings and are
// turned into fractions.Fraction by the package's __init__.py.

#include "centred/centred.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace centred;

namespace {

std::vector<std::string> strings(const std::vector<BigInt> &v) {
  std::vector<std::string> out;
  for (const auto &x : v)
    out.push_back(x.get_str());
  return out;
}

FormulaId parse_formula(const std::string &name) {
  for (FormulaId f : kAllFormulas)
    if (formula_name(f) == name)
      return f;
  throw DomainError("unknown formula '" + name + "'");
}

ClassicSequence parse_sequence(const std::string &name) {
  if (name == "genocchi")
    return ClassicSequence::Genocchi;
  if (name == "reduced-tangent")
    return ClassicSequence::ReducedTangent;
  if (name == "pbar-at-zero")
    return ClassicSequence::PbarAtZero;
  throw DomainError("unknown sequence '" + name + "'");
}

std::string u_by_method(long r, long n, const std::string &method) {
  if (method == "direct")
    return to_string(u_direct(r, n));
  if (method == "halfrange")
    return to_string(u_direct_halfrange(r, n));
  if (method == "recurrence")
    return to_string(u_recurrence(r, n));
  if (method == "family")
    return to_string(u_from_family(r, n));
  if (method == "df")
    return to_string(u_from_df(r, n));
  throw DomainError("unknown method '" + method + "'");
}

py::dict report_dict(const Report &r) {
  py::list checks;
  for (const auto &c : r.checks) {
    py::dict d;
    d["id"] = c.id;
    d["inputs"] = c.inputs;
    if (c.expected)
      d["expected"] = *c.expected;
    d["actual"] = c.actual;
    d["ok"] = c.ok;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["failures"] = r.failures();
  out["notes"] = r.notes;
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact centred binomial sums";
  m.attr("__version__") = kVersion;
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("u", &u_by_method, py::arg("r"), py::arg("n"), py::arg("method") = "direct");
  m.def("s", [](long r, long n) { return to_string(s_direct(r, n)); }, py::arg("r"), py::arg("n"));
  m.def("s_recurrence", [](long r, long n) { return to_string(s_recurrence(r, n)); });
  m.def("u_closed",
        [](const std::string &f, long r, long n) { return to_string(u_closed(parse_formula(f), r, n)); },
        py::arg("formula"), py::arg("r"), py::arg("n"));
  m.def("formula_names", [] {
    std::vector<std::string> out;
    for (FormulaId f : kAllFormulas)
      out.emplace_back(formula_name(f));
    return out;
  });
  m.def("family_poly",
        [](const std::string &family, long r) {
          return strings(family_poly(parse_family(family), r).coefficients());
        },
        py::arg("family"), py::arg("r"));
  m.def("df_poly", [](long r) {
    std::vector<std::pair<std::array<int, 3>, std::string>> out;
    for (const auto &[e, c] : df_poly(r).terms())
      out.emplace_back(e, c.get_str());
    return out;
  });
  m.def("df_eval", [](long r, const std::string &x, const std::string &y, const std::string &z) {
    return to_string(df_eval(r, parse_rational(x), parse_rational(y), parse_rational(z)));
  });
  m.def("df_carlitz", [](long r, const std::string &x, const std::string &y, const std::string &z) {
    return to_string(df_carlitz(r, parse_rational(x), parse_rational(y), parse_rational(z)));
  });
  m.def("secant_numbers", [](long count) { return strings(secant_numbers(count)); });
  m.def("classic_sequence", [](const std::string &name, long count) {
    return strings(classic_sequence(parse_sequence(name), count));
  });
  m.def("walk_moment_mc", [](long r, long n, long samples, std::uint64_t seed) {
    auto e = walk_moment_mc(r, n, samples, seed);
    return std::make_pair(e.mean, e.std_error);
  }, py::arg("r"), py::arg("n"), py::arg("samples"), py::arg("seed"));
  m.def("u_asymptotic_log", &u_asymptotic_log);
  m.def("asymptotic_rel_errors", [](long r, std::vector<long> ns) {
    std::vector<double> out;
    for (const auto &rep : asymptotic_error_scan(r, ns))
      out.push_back(rep.rel_error);
    return out;
  });
  m.def("cross_validate",
        [](long r_max, long n_max, unsigned jobs) {
          py::gil_scoped_release release;
          Report r = cross_validate(r_max, n_max, jobs);
          py::gil_scoped_acquire acquire;
          return report_dict(r);
        },
        py::arg("r_max"), py::arg("n_max"), py::arg("jobs") = 1);
  m.def("verify_suite", [](const std::string &suite) {
    if (suite == "egf")
      return report_dict(suite_egf(20, 8));
    if (suite == "tables")
      return report_dict(suite_tables());
    if (suite == "df")
      return report_dict(suite_df());
    if (suite == "asymptotics")
      return report_dict(suite_asymptotics());
    if (suite == "closed-forms")
      return report_dict(suite_closed_forms(8, 30));
    throw DomainError("unknown suite '" + suite + "'");
  });
}
