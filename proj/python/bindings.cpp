// Python bindings. Polynomials cross the boundary as text in the same format
// the CLI prints and parses; ideals are lists of such strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permahank/cases.hpp"
#include "permahank/cli.hpp"
#include "permahank/format.hpp"
#include "permahank/groebner.hpp"
#include "permahank/hankel.hpp"
#include "permahank/verification.hpp"

namespace py = pybind11;
using namespace permahank;

namespace {

using Texts = std::vector<std::string>;

struct Context {
  Ring ring;
  MonomialOrder order;
};

Context context(std::size_t num_vars, std::uint32_t characteristic, const std::string& order) {
  return {RingContext::make(num_vars, characteristic), MonomialOrder::parse(order)};
}

Ideal ideal_of(const Context& c, const Texts& gens) {
  return Ideal(c.ring, parse_all(gens, c.ring, c.order));
}

Texts basis_texts(const Ideal& i, const MonomialOrder& order = MonomialOrder::lex()) {
  return format_all(i.groebner_basis(order)->elements);
}

py::dict report_dict(const VerificationReport& r) {
  // Through JSON so the dict matches the CLI's report schema exactly.
  py::object loads = py::module_::import("json").attr("loads");
  return loads(to_json(r, false).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permanental ideals of Hankel matrices: exact Groebner bases and ideal operations";

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("permanent_generators", [](unsigned rows, unsigned cols, std::uint32_t ch) {
    return format_all(permanent_generators(rows, cols, ch));
  }, py::arg("m"), py::arg("n"), py::arg("char") = 0,
     "The 2x2 permanents of the m x n Hankel matrix, one per distinct polynomial.");

  m.def("subpermanents", [](unsigned rows, unsigned cols, unsigned r, std::uint32_t ch) {
    return format_all(subpermanents_ideal(HankelMatrix(rows, cols, ch), r).generators());
  }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("char") = 0);

  m.def("groebner_basis", [](const Texts& gens, std::size_t vars, std::uint32_t ch,
                             const std::string& order) {
    const Context c = context(vars, ch, order);
    py::gil_scoped_release release;
    return format_all(buchberger(parse_all(gens, c.ring, c.order), c.order).elements);
  }, py::arg("generators"), py::arg("num_vars"), py::arg("char") = 0, py::arg("order") = "lex",
     "Reduced Groebner basis, monic, largest leading monomial first.");

  m.def("normal_form", [](const std::string& f, const Texts& reducers, std::size_t vars,
                          std::uint32_t ch, const std::string& order) {
    const Context c = context(vars, ch, order);
    return format(normal_form(parse(f, c.ring, c.order), parse_all(reducers, c.ring, c.order),
                              c.order));
  }, py::arg("f"), py::arg("reducers"), py::arg("num_vars"), py::arg("char") = 0,
     py::arg("order") = "lex");

  m.def("is_groebner", [](const Texts& gens, std::size_t vars, std::uint32_t ch,
                          const std::string& order) {
    const Context c = context(vars, ch, order);
    return is_groebner(parse_all(gens, c.ring, c.order), c.order).is_groebner;
  }, py::arg("generators"), py::arg("num_vars"), py::arg("char") = 0, py::arg("order") = "lex");

  m.def("member", [](const std::string& f, const Texts& gens, std::size_t vars, std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    return ideal_of(c, gens).contains(parse(f, c.ring));
  }, py::arg("f"), py::arg("generators"), py::arg("num_vars"), py::arg("char") = 0);

  m.def("intersect", [](const Texts& a, const Texts& b, std::size_t vars, std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    py::gil_scoped_release release;
    return basis_texts(intersect(ideal_of(c, a), ideal_of(c, b)));
  }, py::arg("a"), py::arg("b"), py::arg("num_vars"), py::arg("char") = 0);

  m.def("colon", [](const Texts& gens, const std::string& f, std::size_t vars, std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    return basis_texts(colon(ideal_of(c, gens), parse(f, c.ring)));
  }, py::arg("generators"), py::arg("f"), py::arg("num_vars"), py::arg("char") = 0);

  m.def("saturate", [](const Texts& gens, const std::string& f, std::size_t vars,
                       std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    const Saturation s = saturate(ideal_of(c, gens), parse(f, c.ring));
    return py::make_tuple(basis_texts(s.ideal), s.exponent);
  }, py::arg("generators"), py::arg("f"), py::arg("num_vars"), py::arg("char") = 0,
     "Returns (reduced basis of the saturation, stabilization exponent).");

  m.def("radical_member", [](const std::string& f, const Texts& gens, std::size_t vars,
                             std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    return radical_member(parse(f, c.ring), ideal_of(c, gens));
  }, py::arg("f"), py::arg("generators"), py::arg("num_vars"), py::arg("char") = 0);

  m.def("ideals_equal", [](const Texts& a, const Texts& b, std::size_t vars, std::uint32_t ch) {
    const Context c = context(vars, ch, "lex");
    return equal(ideal_of(c, a), ideal_of(c, b)).equal;
  }, py::arg("a"), py::arg("b"), py::arg("num_vars"), py::arg("char") = 0);

  m.def("closed_form_gb", [](unsigned rows, unsigned cols, std::uint32_t ch) {
    return format_all(closed_form_gb(HankelCase(rows, cols, ch)));
  }, py::arg("m"), py::arg("n"), py::arg("char") = 0);

  m.def("components", [](unsigned rows, unsigned cols, std::uint32_t ch) {
    const HankelCase c(rows, cols, ch);
    py::dict out;
    out["Q1"] = basis_texts(q1(c));
    out["Q2"] = basis_texts(q2(c));
    out["J"] = basis_texts(embedded_j(c));
    return out;
  }, py::arg("m"), py::arg("n"), py::arg("char") = 0,
     "Reduced bases of Q1, Q2 and the embedded candidate J.");

  m.def("classify_embedded", [](unsigned rows, unsigned cols, std::uint32_t ch) {
    return classify_embedded(HankelCase(rows, cols, ch));
  }, py::arg("m"), py::arg("n"), py::arg("char") = 0);

  m.def("default_grid", &default_grid, py::arg("max_vars") = 12);

  m.def("verify", [](std::vector<Shape> grid, const std::string& check, unsigned samples,
                     std::uint64_t seed, std::uint32_t ch, unsigned threads) {
    SuiteOptions options;
    select_checks(options, check);
    options.samples = samples;
    options.seed = seed;
    options.characteristic = ch;
    options.threads = threads;
    std::vector<VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_all(grid, options);
    }
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
  }, py::arg("grid"), py::arg("check") = "all", py::arg("samples") = 2,
     py::arg("seed") = 0x5eed, py::arg("char") = 0, py::arg("threads") = 1,
     "Runs the verification suite; returns report dicts without timings.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
