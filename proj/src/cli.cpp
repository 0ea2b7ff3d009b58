#include "permahank/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permahank/cases.hpp"
#include "permahank/format.hpp"
#include "permahank/io.hpp"
#include "permahank/verification.hpp"

namespace permahank {

namespace {

/// Input or flag problem; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<unsigned> m;
  std::optional<unsigned> n;
  std::uint32_t characteristic = 0;
  std::string order = "lex";
  std::vector<std::string> inputs;
  std::string out_path;
  std::string format = "text";
  std::string check = "all";
  std::string grid;
  unsigned max_vars = 12;
  unsigned samples = 2;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed;
  bool no_timing = false;
  std::string poly;
  bool raw = false;
  bool saturate_flag = false;
};

const char* const kTwoByTwo = "2×2 permanental ideal is prime";

MonomialOrder order_of(const Options& o) { return MonomialOrder::parse(o.order); }

bool json_output(const Options& o) { return o.format == "json"; }

Shape require_shape(const Options& o) {
  if (!o.m || !o.n) throw UsageError("--m and --n are required");
  unsigned m = *o.m;
  unsigned n = *o.n;
  if (m > n) std::swap(m, n);
  if (m < 2) throw UsageError("a Hankel shape needs at least two rows and two columns");
  if (m + n - 1 >= kMaxVars) {
    throw UsageError("shape " + std::to_string(m) + "x" + std::to_string(n) + " needs " +
                     std::to_string(m + n - 1) + " variables; at most " +
                     std::to_string(kMaxVars - 1) + " are supported");
  }
  return {m, n};
}

// Shapes for verify/decompose/classify exclude the 2×2 case.
Shape require_case_shape(const Options& o) {
  const Shape s = require_shape(o);
  if (s.first + s.second <= 4) throw UsageError(kTwoByTwo);
  return s;
}

void print_ideal(std::ostream& out, const std::vector<Polynomial>& gens, const char* indent = "") {
  for (const auto& g : gens) out << indent << format(g) << '\n';
}

// The ideal named by --in (first file) or by --m/--n (P2 of the shape).
IdealFile input_ideal(const Options& o) {
  if (!o.inputs.empty()) {
    IdealFile f = read_ideal_file(o.inputs.front());
    if (f.ring->characteristic() != o.characteristic && o.characteristic != 0) {
      throw UsageError("--char disagrees with the characteristic of " + o.inputs.front());
    }
    return f;
  }
  const auto [m, n] = require_shape(o);
  IdealFile f;
  const HankelMatrix matrix(m, n, o.characteristic);
  f.ring = matrix.ring();
  f.order = order_of(o);
  f.generators = m + n <= 4 ? subpermanents_ideal(matrix, 2).generators() : permanent_generators(matrix);
  return f;
}

void emit_basis(std::ostream& out, const Options& o, const Ring& ring, const GroebnerBasis& basis) {
  if (json_output(o)) {
    out << basis_to_json(ring, basis).dump(2) << '\n';
  } else {
    print_ideal(out, basis.elements);
  }
}

int cmd_gen(const Options& o, std::ostream& out) {
  const IdealFile f = input_ideal(o);
  if (json_output(o)) {
    out << ideal_to_json(f.ring, f.order, f.generators).dump(2) << '\n';
  } else {
    print_ideal(out, f.generators);
  }
  return kExitOk;
}

int cmd_gb(const Options& o, std::ostream& out) {
  const IdealFile f = input_ideal(o);
  const MonomialOrder order = o.inputs.empty() ? order_of(o) : f.order;
  emit_basis(out, o, f.ring, *f.ideal().groebner_basis(order));
  return kExitOk;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const auto [m, n] = require_case_shape(o);
  const HankelCase c(m, n, o.characteristic);
  const std::vector<Polynomial> g = closed_form_gb(c);
  if (json_output(o)) {
    nlohmann::json doc = ideal_to_json(c.ring(), MonomialOrder::lex(), g);
    doc["shape_class"] = to_string(c.shape());
    out << doc.dump(2) << '\n';
  } else {
    print_ideal(out, g);
  }
  return kExitOk;
}

Polynomial input_poly(const Options& o, const Ring& ring, const MonomialOrder& order) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  return parse(o.poly, ring, order);
}

int cmd_nf(const Options& o, std::ostream& out) {
  const IdealFile f = input_ideal(o);
  const MonomialOrder order = o.inputs.empty() ? order_of(o) : f.order;
  const Polynomial p = input_poly(o, f.ring, order);
  const Polynomial r =
      o.raw ? normal_form(p, f.generators, order)
            : normal_form(p, f.ideal().groebner_basis(order)->elements, order);
  if (json_output(o)) {
    out << nlohmann::json{{"polynomial", format(p)}, {"normal_form", format(r)},
                          {"against", o.raw ? "generators" : "reduced basis"}}
               .dump(2)
        << '\n';
  } else {
    out << format(r) << '\n';
  }
  return kExitOk;
}

int cmd_colon(const Options& o, std::ostream& out) {
  const IdealFile f = input_ideal(o);
  const Ideal ideal = f.ideal();
  const Polynomial p = input_poly(o, f.ring, MonomialOrder::lex());
  if (p.is_zero()) throw UsageError("colon by the zero polynomial is undefined");
  std::optional<unsigned> exponent;
  Ideal result = ideal;
  if (o.saturate_flag) {
    Saturation s = saturate(ideal, p);
    exponent = s.exponent;
    result = std::move(s.ideal);
  } else {
    result = colon(ideal, p);
  }
  const auto basis = result.groebner_basis();
  if (json_output(o)) {
    nlohmann::json doc = basis_to_json(f.ring, *basis);
    if (exponent) doc["exponent"] = *exponent;
    out << doc.dump(2) << '\n';
  } else {
    if (exponent) out << "exponent: " << *exponent << '\n';
    print_ideal(out, basis->elements);
  }
  return kExitOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  if (o.inputs.size() < 2) throw UsageError("intersect needs two or more --in files");
  IdealFile first = read_ideal_file(o.inputs[0]);
  Ideal acc = first.ideal();
  for (std::size_t k = 1; k < o.inputs.size(); ++k) {
    const IdealFile next = read_ideal_file(o.inputs[k]);
    if (!same_ring(next.ring, first.ring)) {
      throw UsageError(o.inputs[k] + " lives in a different ring than " + o.inputs[0]);
    }
    acc = intersect(acc, next.ideal());
  }
  emit_basis(out, o, first.ring, *acc.groebner_basis());
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto [m, n] = require_case_shape(o);
  const HankelCase c(m, n, o.characteristic);
  const Ideal Q1 = q1(c);
  const Ideal Q2 = q2(c);
  const Ideal J = embedded_j(c);
  const Polynomial last = c.x(c.r() + 1);
  const Saturation s1 = saturate(c.p2(), last);
  const Saturation s2 = saturate(sum(c.p2(), Ideal(c.ring(), {last.pow(2)})), c.x(1));
  const bool q1_ok = equal(s1.ideal, Q1).equal;
  const bool q2_ok = equal(s2.ideal, Q2).equal;
  const bool redundant = !classify_embedded(c);

  if (json_output(o)) {
    auto basis_texts = [](const Ideal& i) { return format_all(i.groebner_basis()->elements); };
    out << nlohmann::json{{"m", c.m()},
                          {"n", c.n()},
                          {"Q1", basis_texts(Q1)},
                          {"Q2", basis_texts(Q2)},
                          {"J", basis_texts(J)},
                          {"exponent_q1", s1.exponent},
                          {"exponent_q2", s2.exponent},
                          {"saturation_matches_q1", q1_ok},
                          {"saturation_matches_q2", q2_ok},
                          {"j_redundant", redundant}}
               .dump(2)
        << '\n';
  } else {
    const std::string r1 = "x" + std::to_string(c.r() + 1);
    out << "Q1:\n";
    print_ideal(out, Q1.groebner_basis()->elements, "  ");
    out << "Q2:\n";
    print_ideal(out, Q2.groebner_basis()->elements, "  ");
    out << "J:\n";
    print_ideal(out, J.groebner_basis()->elements, "  ");
    out << "saturation (P2 : " << r1 << "^k) stabilizes at k = " << s1.exponent
        << (q1_ok ? ", equal to Q1" : ", NOT equal to Q1") << '\n';
    out << "saturation (P2 + (" << r1 << "^2) : x1^k) stabilizes at k = " << s2.exponent
        << (q2_ok ? ", equal to Q2" : ", NOT equal to Q2") << '\n';
    out << "J redundant: " << (redundant ? "true" : "false") << '\n';
  }
  return q1_ok && q2_ok ? kExitOk : kExitFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto [m, n] = require_case_shape(o);
  const HankelCase c(m, n, o.characteristic);
  const bool embedded = classify_embedded(c);
  if (json_output(o)) {
    out << nlohmann::json{{"m", c.m()}, {"n", c.n()}, {"embedded", embedded}}.dump(2) << '\n';
  } else {
    out << "embedded: " << (embedded ? "true" : "false") << '\n';
  }
  return kExitOk;
}

std::vector<Shape> parse_grid(const std::string& text) {
  std::vector<Shape> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    const auto x = item.find('x');
    if (item.empty() || x == std::string::npos) throw UsageError("bad --grid entry '" + item + "'");
    try {
      std::size_t used_m = 0;
      std::size_t used_n = 0;
      const unsigned long m = std::stoul(item.substr(0, x), &used_m);
      const unsigned long n = std::stoul(item.substr(x + 1), &used_n);
      if (used_m != x || used_n != item.size() - x - 1) throw std::invalid_argument(item);
      grid.emplace_back(static_cast<unsigned>(m), static_cast<unsigned>(n));
    } catch (const std::logic_error&) {
      throw UsageError("bad --grid entry '" + item + "'");
    }
  }
  if (grid.empty()) throw UsageError("--grid is empty");
  return grid;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions suite;
  try {
    select_checks(suite, o.check);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  suite.samples = o.samples;
  suite.seed = o.seed;
  suite.threads = o.threads;
  suite.characteristic = o.characteristic;

  std::vector<Shape> grid;
  if (!o.grid.empty()) {
    if (o.m || o.n) throw UsageError("--grid cannot be combined with --m/--n");
    grid = parse_grid(o.grid);
  } else if (o.m || o.n) {
    grid.push_back(require_shape(o));
  } else {
    grid = default_grid(o.max_vars);
  }
  for (auto& [m, n] : grid) {
    if (m > n) std::swap(m, n);
    if (m < 2) throw UsageError("a Hankel shape needs at least two rows and two columns");
    if (m + n <= 4) throw UsageError(kTwoByTwo);
    if (m + n - 1 > o.max_vars) {
      throw UsageError("shape " + std::to_string(m) + "x" + std::to_string(n) + " needs " +
                       std::to_string(m + n - 1) + " variables, above --max-vars " +
                       std::to_string(o.max_vars));
    }
  }

  const std::vector<VerificationReport> reports = run_all(grid, suite);
  const bool timing = !o.no_timing;
  if (json_output(o)) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) doc.push_back(to_json(r, timing));
    out << doc.dump(2) << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      failed += r.passed ? 0 : 1;
      out << (r.passed ? "PASS" : "FAIL") << "  " << r.m << "x" << r.n << "  " << r.claim;
      if (timing) out << "  " << static_cast<long>(r.millis + 0.5) << " ms";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
      if (!r.passed) out << "      witness: " << r.witness.dump() << '\n';
    }
    out << reports.size() << " claims, " << failed << " failed\n";
  }
  return all_passed(reports) ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permahank: permanental ideals of Hankel matrices"};
  app.name("permahank");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--char", o.characteristic, "Field characteristic: 0 or an odd prime");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_path, "Write output to this file");
  };
  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "Row count");
    cmd->add_option("--n", o.n, "Column count");
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"lex", "deglex"}));
  };
  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.inputs, "Ideal file in the JSON ideal format");
  };

  auto* gen = app.add_subcommand("gen", "Print the 2×2 permanents of the Hankel matrix");
  add_shape(gen);
  add_common(gen);
  add_order(gen);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of P2 or of an ideal file");
  add_shape(gb);
  add_common(gb);
  add_order(gb);
  add_in(gb);

  auto* closed = app.add_subcommand("closed-form", "Closed-form basis for the shape class");
  add_shape(closed);
  add_common(closed);

  auto* nf = app.add_subcommand("nf", "Normal form of --poly");
  add_shape(nf);
  add_common(nf);
  add_order(nf);
  add_in(nf);
  nf->add_option("--poly", o.poly, "Polynomial to reduce")->required();
  nf->add_flag("--raw", o.raw, "Reduce by the generators as given instead of the reduced basis");

  auto* col = app.add_subcommand("colon", "Ideal quotient (I : f)");
  add_shape(col);
  add_common(col);
  add_in(col);
  col->add_option("--poly", o.poly, "The polynomial f")->required();
  col->add_flag("--saturate", o.saturate_flag, "Iterate to the saturation and report the exponent");

  auto* inter = app.add_subcommand("intersect", "Intersection of ideal files");
  add_common(inter);
  add_in(inter);

  auto* dec = app.add_subcommand("decompose", "Components Q1, Q2, J and saturation exponents");
  add_shape(dec);
  add_common(dec);

  auto* cls = app.add_subcommand("classify", "Whether the maximal ideal is an embedded prime");
  add_shape(cls);
  add_common(cls);

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  add_shape(ver);
  add_common(ver);
  ver->add_option("--check", o.check, "gb, decomp, primary, assoc, lemmas or all");
  ver->add_option("--grid", o.grid, "Shapes as \"m1xn1,m2xn2,...\"");
  ver->add_option("--max-vars", o.max_vars, "Largest admissible m+n-1; default grid bound");
  ver->add_option("--samples", o.samples, "Random forms per component in primariness checks");
  ver->add_option("--seed", o.seed, "Seed for the random forms");
  ver->add_option("--threads", o.threads, "Shapes verified concurrently (0: all cores)");
  ver->add_flag("--no-timing", o.no_timing, "Report 0 ms so output is byte-reproducible");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    check_characteristic(o.characteristic);
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw UsageError("cannot write " + o.out_path);
      sink = &file;
    }
    if (verb == "gen") return cmd_gen(o, *sink);
    if (verb == "gb") return cmd_gb(o, *sink);
    if (verb == "closed-form") return cmd_closed_form(o, *sink);
    if (verb == "nf") return cmd_nf(o, *sink);
    if (verb == "colon") return cmd_colon(o, *sink);
    if (verb == "intersect") return cmd_intersect(o, *sink);
    if (verb == "decompose") return cmd_decompose(o, *sink);
    if (verb == "classify") return cmd_classify(o, *sink);
    if (verb == "verify") return cmd_verify(o, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << cmd->help();
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace permahank
