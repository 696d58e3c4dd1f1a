#include "biharm/cli.hpp"
#include "biharm/error.hpp"
#include "biharm/parser.hpp"
#include "biharm/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace biharm;

namespace {

std::string show(const RatFn& f) { return f.is_polynomial() ? to_string(f.fold_constant_den().num()) : to_string(f); }

std::string tension_text(const std::string& expr, unsigned n_group) {
    GroupContext ctx(n_group);
    RatFn f = parse_expr(expr);
    if (f.is_polynomial()) return to_string(tau(ctx, f.fold_constant_den().num()));
    return show(tau_ratfn(ctx, f));
}

std::string kappa_text(const std::string& a, const std::string& b, unsigned n_group) {
    GroupContext ctx(n_group);
    RatFn f = parse_expr(a).fold_constant_den(), h = parse_expr(b).fold_constant_den();
    if (f.is_polynomial() && h.is_polynomial()) return to_string(kappa(ctx, f.num(), h.num()));
    return show(kappa_ratfn(ctx, f, h));
}

std::vector<std::vector<std::string>> rep_entries(unsigned n) {
    RepMatrix rep = build_rep(n);
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rep.rows()) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(to_string(e));
        out.push_back(std::move(r));
    }
    return out;
}

std::string verify_json(unsigned n, unsigned alpha, unsigned beta, const std::vector<std::string>& p,
                        const std::vector<std::string>& q, std::size_t budget) {
    Family fam;
    if (!p.empty() || !q.empty()) {
        std::vector<GaussRat> pv, qv;
        for (const auto& s : p) pv.push_back(GaussRat::parse(s));
        for (const auto& s : q) qv.push_back(GaussRat::parse(s));
        fam = concrete_family(n, pv, qv);
    } else if (n == 1) {
        fam = symbolic_family(1);
    } else if (n <= 4) {
        fam = theorem_family(n);
    } else {
        fam = conjecture_family(n);
    }
    AnalysisOptions opts;
    opts.budget_terms = budget;
    return analyze(fam, alpha, beta, opts).certificate(fam, opts).dump();
}

std::string conjecture_json(unsigned n, unsigned alpha, unsigned beta, std::size_t budget) {
    AnalysisOptions opts;
    opts.budget_terms = budget;
    Family fam = conjecture_family(n);
    return analyze(fam, alpha, beta, opts).certificate(fam, opts).dump();
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tension and bitension fields on SU(2) representations";
    m.attr("__version__") = BIHARM_VERSION;

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());
    py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());
    py::register_exception<IndexError>(m, "IndexError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def("canonical", [](const std::string& s) { return show(parse_expr(s)); }, py::arg("expr"),
          "Parse an expression and print it in canonical form.");
    m.def("latex", [](const std::string& s) {
        RatFn f = parse_expr(s);
        return f.is_polynomial() ? to_latex(f.fold_constant_den().num()) : to_latex(f);
    }, py::arg("expr"));
    m.def("tension", &tension_text, py::arg("expr"), py::arg("n_group") = 2);
    m.def("kappa", &kappa_text, py::arg("f"), py::arg("h"), py::arg("n_group") = 2);
    m.def("rep", &rep_entries, py::arg("n"));
    m.def("_extract_conditions", [](unsigned n, unsigned a, unsigned b, std::size_t budget) {
        return extract_conditions(n, a, b, budget).to_json().dump();
    }, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("budget_terms") = 0);
    m.def("_verify", &verify_json, py::arg("n"), py::arg("alpha"), py::arg("beta"),
          py::arg("p") = std::vector<std::string>{}, py::arg("q") = std::vector<std::string>{},
          py::arg("budget_terms") = 0);
    m.def("_conjecture", &conjecture_json, py::arg("n"), py::arg("alpha"), py::arg("beta"),
          py::arg("budget_terms") = 0);
    m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
    m.def("selftest", []() {
        std::ostringstream out;
        int failures = run_selftest(out);
        return py::make_tuple(failures, out.str());
    });
}
