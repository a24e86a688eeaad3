#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "qell/character.hpp"
#include "qell/errors.hpp"
#include "qell/power.hpp"
#include "qell/spec.hpp"
#include "qell/tate.hpp"

using namespace qell;
using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "qell-report/1";

struct Globals {
  bool json_out = false;
  bool timing = false;
  std::size_t cap = 0;  // 0: default or QELL_CAP
  std::vector<std::string> classes;
};

std::string wreath_str(const Wreath& w, const WreathElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.word.size(); ++i) out += (i ? "," : "") + w.base()->element(x.word[i]).str();
  return out + "; " + x.sigma.str() + ")";
}

std::string grade_str(const mpq_class& g) { return rational_str(g); }

// Selected class indices, all when --classes is absent.
std::vector<std::size_t> selected_classes(const GroupPtr& g, const std::vector<std::string>& reps) {
  std::vector<std::size_t> out;
  if (reps.empty()) {
    for (std::size_t c = 0; c < g->class_count(); ++c) out.push_back(c);
    return out;
  }
  for (const auto& r : reps) out.push_back(parse_class_rep(g, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Portable deterministic element: coefficients in [-2, 2] at q^-1, q^0, q^1.
QEllElem seeded_element(const GroupPtr& g, unsigned seed) {
  std::mt19937 rng(seed);
  QEllElem r(g);
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    LambdaElem comp(r.component(c).ctx());
    for (std::size_t i = 0; i < comp.ctx()->rank(); ++i)
      for (long e = -1; e <= 1; ++e) comp.add_term(i, e, static_cast<long>(rng() % 5) - 2);
    r.set_component(c, comp);
  }
  return r;
}

json lambda_json(const LambdaElem& a) {
  json basis = json::array();
  const auto cb = canonical_basis(a.ctx());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (!a.coeff(i).is_zero()) basis.push_back({{"index", i}, {"grade", grade_str(cb[i].grade)}, {"coeff", a.coeff(i).str()}});
  return {{"level", a.level()}, {"text", a.str()}, {"terms", basis}};
}

// Character at [h, t] for h running over the centralizer classes, sampled at
// t = j / (2 L) for L the order of the class element.
json audit_json(const LambdaElem& a) {
  json out = json::array();
  const auto& cent = *a.ctx()->cent;
  const long samples = 2 * static_cast<long>(a.ctx()->order_g);
  for (std::size_t k = 0; k < cent.class_count(); ++k) {
    const Perm& h = cent.element(cent.conjugacy().reps[k]);
    const auto series = a.series_at(h);
    json vals = json::array();
    for (long j = 0; j < samples; ++j) vals.push_back(series.at(mpq_class(j, samples)).str());
    out.push_back({{"h", h.str()}, {"series", series.str()}, {"samples", vals}});
  }
  return out;
}

int emit(const Globals& gl, const std::string& command, json inputs, json results, bool ok, double seconds,
         const std::string& text) {
  if (gl.json_out) {
    json r = {{"schema", kSchema}, {"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
              {"status", ok ? "PASS" : "FAIL"}};
    if (gl.timing) r["timing_seconds"] = seconds;
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << text;
    if (gl.timing) std::cout << "time: " << seconds << " s\n";
  }
  return ok ? 0 : 1;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------ commands

int cmd_ring(const Globals& gl, const std::string& spec_text) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = parse_group_spec(spec_text);
  const auto g = spec.build();
  std::ostringstream os;
  os << "QEll of pt//" << spec.str() << " (order " << g->order() << ", " << g->class_count() << " classes, rank "
     << qell_rank(g) << ")\n";
  json classes = json::array();
  for (auto c : selected_classes(g, gl.classes)) {
    const std::size_t rep = g->conjugacy().reps[c];
    const auto ctx = lambda_context(g, rep);
    const auto cb = canonical_basis(ctx);
    json basis = json::array();
    os << "class " << c << " " << g->element(rep).str() << ": centralizer order " << ctx->cent->order() << ", rank "
       << ctx->rank() << "\n  grades:";
    for (std::size_t i = 0; i < cb.size(); ++i) {
      os << " " << grade_str(cb[i].grade);
      basis.push_back({{"index", i}, {"irr", cb[i].irr}, {"grade", grade_str(cb[i].grade)}});
    }
    const std::string pres = presentation(ctx);
    os << "\n  " << pres << "\n";
    classes.push_back({{"index", c},
                       {"rep", g->element(rep).str()},
                       {"centralizer_order", ctx->cent->order()},
                       {"rank", ctx->rank()},
                       {"basis", basis},
                       {"presentation", pres}});
  }
  return emit(gl, "ring", {{"group", spec.str()}}, {{"order", g->order()}, {"rank", qell_rank(g)}, {"classes", classes}},
              true, since(t0), os.str());
}

int cmd_power(const Globals& gl, const std::string& spec_text, std::size_t n, const std::string& expr, bool axioms) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = parse_group_spec(spec_text);
  const auto g = spec.build();
  const QEllElem v = parse_element(g, expr);
  const Wreath w(g, n);
  const auto& wg = w.group();
  std::ostringstream os;
  os << "P_" << n << " of " << element_str(v) << " over " << spec.str() << " wr S" << n << " (" << wg->class_count()
     << " classes)\n";
  json comps = json::array();
  for (auto c : selected_classes(wg, gl.classes)) {
    const std::size_t rep = wg->conjugacy().reps[c];
    const LambdaElem comp = power_component(w, v, rep);
    const std::string x = wreath_str(w, w.structured(rep));
    os << "class " << c << " " << x << ": " << comp.str() << "\n";
    json entry = lambda_json(comp);
    entry["index"] = c;
    entry["rep"] = x;
    entry["rep_perm"] = wg->element(rep).str();
    entry["audit"] = audit_json(comp);
    comps.push_back(std::move(entry));
  }
  json results = {{"components", comps}};
  bool ok = true;
  if (axioms) {
    AxiomOptions opt;
    opt.throw_on_failure = false;
    const auto report = check_axioms(v, v, n, 1, opt);
    json ax = json::array();
    for (const auto& r : report.results) {
      const char* st = r.status == AxiomStatus::Pass ? "PASS" : r.status == AxiomStatus::Fail ? "FAIL" : "SKIPPED";
      os << "axiom " << r.axiom << ": " << st << " " << r.detail << "\n";
      ax.push_back({{"axiom", r.axiom}, {"status", st}, {"detail", r.detail}});
    }
    results["axioms"] = ax;
    ok = report.passed();
  }
  return emit(gl, "power", {{"group", spec.str()}, {"n", n}, {"element", element_str(v)}}, results, ok, since(t0),
              os.str());
}

int cmd_tate(const Globals& gl, std::size_t n) {
  const auto t0 = std::chrono::steady_clock::now();
  TateOptions opt;
  opt.throw_on_failure = false;
  const std::size_t cap = gl.cap > 0 ? gl.cap : (std::getenv("QELL_CAP") ? default_cap() : 0);
  if (cap > 0) {
    // largest N with N! within the cap
    std::size_t f = 1;
    opt.max_n = 0;
    for (std::size_t k = 1; f * k <= cap; ++k) f *= k, opt.max_n = k;
  }
  const auto report = quotient_and_match(n, opt);
  std::ostringstream os;
  json classes = json::array();
  for (const auto& cv : report.classes) {
    os << (cv.passed ? "PASS" : "FAIL") << " class " << cv.sigma.str() << ": case " << (cv.case_id == 1 ? "I" : "II");
    if (cv.case_id == 2) os << " (d=" << cv.d << ", e=" << cv.e << ")";
    os << ", rank " << cv.rank_before << ", generators " << cv.generators << ", survivors " << cv.survivors;
    json entry = {{"class", cv.sigma.str()},
                  {"case", cv.case_id == 1 ? "I" : "II"},
                  {"rank_before", cv.rank_before},
                  {"generators", cv.generators},
                  {"survivors", cv.survivors},
                  {"torsion_free", cv.torsion_free},
                  {"passed", cv.passed}};
    if (cv.case_id == 2) {
      entry["d"] = cv.d;
      entry["e"] = cv.e;
      entry["phi_checks"] = {{"kills_generators", cv.phi.kills_generators},
                             {"qprime_powers", cv.phi.qprime_powers},
                             {"multiplicative", cv.phi.multiplicative},
                             {"relation", cv.phi.relation}};
      entry["vandermonde_det"] = cv.vandermonde_det ? cv.vandermonde_det->str() : "";
      os << ", phi checks " << (cv.phi.all() ? "ok" : "failed") << ", Vandermonde "
         << (cv.vandermonde_det ? cv.vandermonde_det->str() : "?");
    } else {
      entry["phi_checks"] = nullptr;
      entry["vandermonde_det"] = nullptr;
      json certs = json::array();
      for (const auto& ce : cv.certificates)
        certs.push_back({{"basis", ce.basis}, {"generator", ce.generator}, {"shift", ce.shift}, {"sign", ce.sign}});
      entry["certificates"] = certs;
      os << ", " << cv.certificates.size() << " certificates";
    }
    if (!cv.failure.empty()) {
      entry["failure"] = cv.failure;
      os << " [" << cv.failure << "]";
    }
    os << "\n";
    classes.push_back(std::move(entry));
  }
  os << (report.passed ? "PASS" : "FAIL") << " N=" << n << ": surviving rank " << report.total_rank << ", expected "
     << report.expected_rank << "\n";
  json results = {{"classes", classes}, {"total_rank", report.total_rank}, {"expected_rank", report.expected_rank}};
  return emit(gl, "tate-verify", {{"N", n}}, results, report.passed, since(t0), os.str());
}

int cmd_chartable(const Globals& gl, const std::string& spec_text) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = parse_group_spec(spec_text);
  const auto g = spec.build();
  const auto& t = g->character_table();
  const auto& cd = g->conjugacy();
  json classes = json::array(), irr = json::array();
  for (std::size_t c = 0; c < cd.count(); ++c)
    classes.push_back({{"rep", g->element(cd.reps[c]).str()}, {"size", cd.sizes[c]}, {"order", cd.rep_orders[c]}});
  for (const auto& chi : t.irr) {
    json row = json::array();
    for (const auto& v : chi) row.push_back(v.str());
    irr.push_back(row);
  }
  return emit(gl, "char-table", {{"group", spec.str()}}, {{"classes", classes}, {"irreducibles", irr}}, true, since(t0),
              table_text(*g, t));
}

int cmd_axioms(const Globals& gl, const std::string& spec_text, std::size_t n, std::size_t m, const std::string& v_text,
               const std::string& w_spec_text, const std::string& w_text, unsigned seed, bool extended) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = parse_group_spec(spec_text);
  const auto g = spec.build();
  const auto wspec = parse_group_spec(w_spec_text);
  const auto h = wspec.build();
  const QEllElem v = v_text.empty() ? seeded_element(g, seed) : parse_element(g, v_text);
  const QEllElem w = w_text.empty() ? seeded_element(h, seed + 1) : parse_element(h, w_text);
  AxiomOptions opt;
  opt.extended = extended;
  opt.throw_on_failure = false;
  const auto report = check_axioms(v, w, n, m, opt);
  std::ostringstream os;
  json res = json::array();
  for (const auto& r : report.results) {
    const char* st = r.status == AxiomStatus::Pass ? "PASS" : r.status == AxiomStatus::Fail ? "FAIL" : "SKIPPED";
    os << st << " axiom " << r.axiom << ": " << r.detail << "\n";
    res.push_back({{"axiom", r.axiom}, {"status", st}, {"detail", r.detail}});
  }
  json inputs = {{"group", spec.str()}, {"n", n}, {"m", m}, {"v", element_str(v)}, {"w_group", wspec.str()},
                 {"w", element_str(w)}, {"extended", extended}};
  return emit(gl, "axioms", inputs, {{"axioms", res}}, report.passed(), since(t0), os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-elliptic cohomology of finite groups: rings, power operations and the transfer quotient of the symmetric groups"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--cap", gl.cap, "Enumeration cap on group orders (overrides QELL_CAP)")->check(CLI::PositiveNumber);
  app.add_flag("--json", gl.json_out, "Emit a JSON report");
  app.add_flag("--timing", gl.timing, "Include wall-clock time (makes output nondeterministic)");
  app.add_option("--classes", gl.classes, "Restrict to classes given by representative or index")->delimiter(';');

  std::string spec, expr, v_text, w_text, w_spec = "C2";
  std::size_t n = 1, m = 1;
  unsigned seed = 1;
  bool axioms = false, extended = false;

  auto* ring = app.add_subcommand("ring", "Components of QEll_G(pt) with grades and presentations");
  ring->add_option("group", spec, "Group spec, e.g. S3, C4, C2xC3, perm:(1 2),(3 4)")->required();

  auto* power = app.add_subcommand("power", "Power operation P_n of an element");
  power->add_option("group", spec)->required();
  power->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  power->add_option("element", expr, "e.g. q, unit, 2*q^-1*b[(1 2)][1]")->required();
  power->add_flag("--axioms", axioms, "Also check the axioms with v = w = element, m = 1");

  auto* tate = app.add_subcommand("tate-verify", "Verify the transfer quotient of QEll(pt//S_N)");
  tate->add_option("N", n)->required()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("char-table", "Character table");
  table->add_option("group", spec)->required();

  auto* ax = app.add_subcommand("axioms", "Check the power operation axioms");
  ax->add_option("group", spec)->required();
  ax->add_option("n", n)->required()->check(CLI::PositiveNumber);
  ax->add_option("m", m)->required()->check(CLI::PositiveNumber);
  ax->add_option("--v", v_text, "Element over the group (default: seeded)");
  ax->add_option("--w-group", w_spec, "Group of the second factor (default C2)");
  ax->add_option("--w", w_text, "Element over the second group (default: seeded)");
  ax->add_option("--seed", seed, "Seed for default elements");
  ax->add_flag("--extended", extended, "Run the composite axiom beyond the default range");

  CLI11_PARSE(app, argc, argv);
  if (gl.cap > 0) setenv("QELL_CAP", std::to_string(gl.cap).c_str(), 1);

  try {
    if (*ring) return cmd_ring(gl, spec);
    if (*power) return cmd_power(gl, spec, n, expr, axioms);
    if (*tate) return cmd_tate(gl, n);
    if (*table) return cmd_chartable(gl, spec);
    if (*ax) return cmd_axioms(gl, spec, n, m, v_text, w_spec, w_text, seed, extended);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
