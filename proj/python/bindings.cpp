#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hhbounds/bounds.hpp"
#include "hhbounds/cli.hpp"
#include "hhbounds/convexity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

hhb::BoundMode mode_of(double q, std::optional<double> p) {
  if (q > 1.0 && !p) throw hhb::AdmissibilityError("q > 1 needs an explicit p (use optimize_p to choose one)");
  return hhb::select_mode(q, p);
}

hhb::RuleSpec rule_spec(std::optional<std::string> rule, std::optional<double> lambda, std::optional<double> mu,
                        std::optional<double> m, std::optional<double> ell) {
  const int forms = (rule ? 1 : 0) + ((lambda || mu) ? 1 : 0) + ((m || ell) ? 1 : 0);
  if (forms != 1) throw std::invalid_argument("give exactly one of rule=, (lam, mu) or (m, ell)");
  if (rule) {
    const auto named = hhb::named_rule_from_string(*rule);
    if (!named) throw std::invalid_argument("unknown rule '" + *rule + "'");
    return hhb::RuleSpec::from_named(*named);
  }
  if (lambda || mu) {
    if (!lambda || !mu) throw std::invalid_argument("lam and mu go together");
    return hhb::RuleSpec::from_lambda_mu(*lambda, *mu);
  }
  if (!m || !ell) throw std::invalid_argument("m and ell go together");
  return hhb::RuleSpec::from_lm(*m, *ell);
}

hhb::MeansTheorem theorem_of(const std::string& id) {
  const auto t = hhb::means_theorem_from_string(id);
  if (!t) throw std::invalid_argument("unknown theorem id '" + id + "'");
  return *t;
}

hhb::MeanKind mean_kind_of(const std::string& name, double s) {
  const auto kind = hhb::mean_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown mean '" + name + "'");
  return hhb::MeanKind{*kind, s};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-point quadrature error bounds under convexity of |f'|^q";

  auto base = py::register_exception<hhb::Error>(m, "Error");
  py::register_exception<hhb::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<hhb::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<hhb::AdmissibilityError>(m, "AdmissibilityError", base.ptr());
  py::register_exception<hhb::ConvergenceError>(m, "ConvergenceError", base.ptr());

  py::class_<hhb::Expr>(m, "Expr")
      .def(py::init([](const std::string& source) { return hhb::parse(source); }), "source"_a)
      .def("__call__", &hhb::Expr::eval, "x"_a)
      .def("derivative", [](const hhb::Expr& e) { return hhb::differentiate(e); })
      .def("__str__", &hhb::Expr::str)
      .def("__repr__", [](const hhb::Expr& e) { return "Expr('" + e.str() + "')"; });

  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double a, double b, double tol) {
        const auto r = hhb::integrate(f, hhb::Interval(a, b), tol);
        return py::make_tuple(r.value, r.error_estimate, r.evaluations);
      },
      "f"_a, "a"_a, "b"_a, "tol"_a = hhb::kDefaultQuadratureTol,
      "Adaptive Gauss-Kronrod integral of f over [a, b]; returns (value, error_estimate, evaluations).");

  m.def(
      "rule_from_lm", [](double mm, double ell) {
        const auto r = hhb::rule_from_lm({mm, ell});
        return py::make_tuple(r.lambda, r.mu);
      },
      "m"_a, "ell"_a);
  m.def(
      "named_rule", [](const std::string& name) {
        const auto r = rule_spec(name, {}, {}, {}, {}).params;
        return py::make_tuple(r.lambda, r.mu);
      },
      "name"_a, "(lambda, mu) of a named rule");

  m.def(
      "lhs_value",
      [](const std::string& f, double a, double b, double lambda, double mu) {
        const hhb::Expr e = hhb::parse(f);
        const hhb::Interval iv(a, b);
        return hhb::lhs_value({lambda, mu}, e, iv, hhb::mean_integral(e, iv));
      },
      "f"_a, "a"_a, "b"_a, "lam"_a, "mu"_a, "Signed deficit of the rule Q(lambda, mu) against the mean integral.");

  m.def(
      "bound_rhs",
      [](double lambda, double mu, double da, double db, double a, double b, double q, std::optional<double> p) {
        return hhb::bound_with_mode({lambda, mu}, mode_of(q, p), hhb::DerivEndpoints::checked(da, db),
                                    hhb::Interval(a, b));
      },
      "lam"_a, "mu"_a, "da"_a, "db"_a, "a"_a, "b"_a, "q"_a = 1.0, "p"_a = py::none(),
      "Bound value from derivative magnitudes |f'(a)|, |f'(b)|.");

  m.def(
      "bound_json",
      [](const std::string& f, double a, double b, std::optional<std::string> rule, std::optional<double> lambda,
         std::optional<double> mu, std::optional<double> mm, std::optional<double> ell, double q, std::optional<double> p,
         std::uint64_t seed) {
        hhb::BoundRequest request;
        request.function = f;
        request.a = a;
        request.b = b;
        request.rule = rule_spec(rule, lambda, mu, mm, ell);
        request.q = q;
        request.p = p;
        request.seed = seed;
        return hhb::report_to_json(hhb::evaluate_bound(request)).dump();
      },
      "f"_a, "a"_a, "b"_a, "rule"_a = py::none(), "lam"_a = py::none(), "mu"_a = py::none(), "m"_a = py::none(),
      "ell"_a = py::none(), "q"_a = 1.0, "p"_a = py::none(), "seed"_a = 0);

  m.def(
      "optimize_p",
      [](double lambda, double mu, double q, double da, double db, double a, double b) {
        const auto r = hhb::optimize_p({lambda, mu}, q, hhb::DerivEndpoints::checked(da, db), hhb::Interval(a, b));
        return py::make_tuple(r.p_star, r.rhs_star);
      },
      "lam"_a, "mu"_a, "q"_a, "da"_a, "db"_a, "a"_a, "b"_a);
  m.def(
      "optimize_rule",
      [](double q, std::optional<double> p, double da, double db, double a, double b) {
        const hhb::BoundMode mode = q > 1.0 && !p ? hhb::BoundMode::p_equals_q(q) : mode_of(q, p);
        const auto r = hhb::optimize_rule(mode, hhb::DerivEndpoints::checked(da, db), hhb::Interval(a, b));
        return py::make_tuple(r.rule.lambda, r.rule.mu, r.rhs_star);
      },
      "q"_a, "p"_a = py::none(), "da"_a = 1.0, "db"_a = 1.0, "a"_a = 0.0, "b"_a = 1.0);

  m.def(
      "certify",
      [](const std::string& f, double q, double a, double b, std::size_t samples, std::uint64_t seed) {
        hhb::CertifyOptions options;
        options.samples = samples;
        options.seed = seed;
        const auto c = hhb::certify_derivative_power(hhb::differentiate(hhb::parse(f)), q, hhb::Interval(a, b), options);
        return hhb::certificate_to_json(c).dump();
      },
      "f"_a, "q"_a, "a"_a, "b"_a, "samples"_a = 4096, "seed"_a = 0);

  m.def(
      "mean", [](const std::string& kind, double a, double b, double s) { return hhb::compute_mean(mean_kind_of(kind, s), a, b); },
      "kind"_a, "a"_a, "b"_a, "s"_a = 1.0);
  m.def(
      "means_gap",
      [](const std::string& theorem, double a, double b, double mm, double ell, double s, double p, double q) {
        return hhb::means_gap(theorem_of(theorem), {mm, ell, s, p, q}, a, b);
      },
      "theorem"_a, "a"_a, "b"_a, "m"_a = 2.0, "ell"_a = 1.0, "s"_a = 1.0, "p"_a = 1.0, "q"_a = 1.0);
  m.def(
      "means_bound",
      [](const std::string& theorem, double a, double b, double mm, double ell, double s, double p, double q) {
        return hhb::means_bound(theorem_of(theorem), {mm, ell, s, p, q}, a, b);
      },
      "theorem"_a, "a"_a, "b"_a, "m"_a = 2.0, "ell"_a = 1.0, "s"_a = 1.0, "p"_a = 1.0, "q"_a = 1.0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = hhb::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      "args"_a, "Runs a command line in process; returns (exit_code, stdout, stderr).");
}
