#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <deltaorder/analytic.hpp>
#include <deltaorder/construct.hpp>
#include <deltaorder/error.hpp>
#include <deltaorder/newton.hpp>
#include <deltaorder/parser.hpp>
#include <deltaorder/recurrence.hpp>
#include <deltaorder/series.hpp>

namespace deltaorder::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- input

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct EquationInput {
  std::string text;
  std::string file;

  std::string get() const {
    if (!file.empty()) return read_file(file);
    if (text.empty()) throw UsageError("no equation given (positional text or --file)");
    return text;
  }
};

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  }
}

// "0=1,1=0,3=1/24"
std::map<int, Rational> parse_pins(const std::string& text) {
  std::map<int, Rational> pins;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("malformed --init entry '" + item + "'");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(item.substr(0, eq), &used);
      if (used != eq || index < 0) throw std::invalid_argument("index");
    } catch (const std::exception&) {
      throw UsageError("malformed --init index in '" + item + "'");
    }
    pins[index] = rational_arg(item.substr(eq + 1), "--init value");
  }
  return pins;
}

// "2.5", "-1+2i", "3i", "1-0.5i"
std::complex<double> parse_complex(std::string text) {
  std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
  auto fail = [&]() -> std::complex<double> { throw UsageError("malformed complex number '" + text + "'"); };
  if (text.empty()) return fail();
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != s.size()) fail();
    return v;
  };
  if (text.back() != 'i') return {number(text), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return number(s);
  };
  if (split == std::string::npos) return {0.0, imag_of(text)};
  return {number(text.substr(0, split)), imag_of(text.substr(split))};
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> radii;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      radii.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("radius");
    } catch (const std::exception&) {
      throw UsageError("malformed --radii entry '" + item + "'");
    }
  }
  return radii;
}

// ---------------------------------------------------------------- json

json degree_json(int d) { return d == kZeroDegree ? json(nullptr) : json(d); }

json number_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(std::complex<double> z) { return json{{"re", number_json(z.real())}, {"im", number_json(z.imag())}}; }

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json roots_json(const PolyRoots& r) {
  json numeric = json::array();
  for (const auto& z : r.numeric) numeric.push_back(complex_json(z));
  return json{{"rational", rationals_json(r.rational)}, {"numeric", numeric}};
}

json equation_json(const std::string& input, const DifferenceEquation& eq) {
  json coeffs = json::array();
  json degrees = json::array();
  for (const auto& p : eq.coeffs()) {
    coeffs.push_back(p.to_string());
    degrees.push_back(degree_json(p.degree()));
  }
  return json{{"input", input}, {"canonical", to_string(eq)}, {"order", eq.order()},
              {"coefficients", coeffs}, {"degrees", degrees}};
}

json newton_json(const NewtonAnalysis& na) {
  json degrees = json::array();
  for (int d : na.degrees) degrees.push_back(degree_json(d));
  json orders = json::array();
  for (const auto& o : na.orders) orders.push_back(json{{"rho", to_string(o.rho)}, {"max_count", o.max_count}});
  return json{{"degrees", degrees}, {"s", na.s_seq}, {"p", na.p}, {"orders", orders},
              {"total_bound", na.total_bound}, {"exists_sub1", na.exists_sub1}};
}

json adams_json(const AdamsPolygon& poly) {
  json points = json::array();
  for (const auto& [x, j] : poly.points) points.push_back(json::array({x, j}));
  json segments = json::array();
  for (const auto& s : poly.segments) {
    segments.push_back(json{{"mu", to_string(s.mu)},
                            {"left", s.left},
                            {"right", s.right},
                            {"span", s.span},
                            {"chi", s.chi ? json(to_string(*s.chi)) : json(nullptr)},
                            {"char_poly", s.char_poly.to_string('g')},
                            {"char_roots", roots_json(s.char_roots)}});
  }
  return json{{"D", poly.D}, {"xi", poly.xi}, {"points", points}, {"segments", segments}};
}

json chi_json(const GrowthEstimate& g) {
  return json{{"chi_hat", number_json(g.chi_hat)},
              {"converged", g.converged},
              {"fit_window", json::array({g.fit_first, g.fit_last})},
              {"model", json{{"mu", g.mu}, {"linear", g.beta}, {"log", g.gamma}, {"const", g.delta}}},
              {"residual", number_json(g.residual)}};
}

json solution_json(const SeriesSolution& s, bool with_chi) {
  json j{{"provenance", s.provenance},
         {"rho", to_string(s.rho_offset)},
         {"support_modulus", s.support_modulus ? json(*s.support_modulus) : json(nullptr)},
         {"terminating", s.terminating}};
  if (with_chi) {
    try {
      j["chi"] = chi_json(estimate_chi_log(s.log_abs));
    } catch (const TooFewTerms& e) {
      j["chi"] = nullptr;
      j["chi_note"] = e.what();
    }
  }
  j["coeffs"] = rationals_json(s.coeffs);
  return j;
}

json header(const char* command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

SeriesSolution solution_from_json(const json& doc, int index) {
  const json* node = &doc;
  if (doc.contains("solutions")) {
    const auto& list = doc.at("solutions");
    if (index < 0 || index >= static_cast<int>(list.size())) throw UsageError("solution index out of range");
    node = &list.at(static_cast<std::size_t>(index));
  }
  if (!node->contains("coeffs")) throw UsageError("solution file has no coeffs");
  std::vector<Rational> coeffs;
  for (const auto& c : node->at("coeffs")) coeffs.push_back(rational_arg(c.get<std::string>(), "coefficient"));
  const Rational rho = node->contains("rho") ? rational_arg(node->at("rho").get<std::string>(), "rho") : Rational(0);
  const std::string prov = node->value("provenance", std::string("file"));
  return make_series(std::move(coeffs), rho, prov);
}

// ---------------------------------------------------------------- human

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

void human_analyze(std::ostream& out, const DifferenceEquation& eq, const NewtonAnalysis& na,
                   const AdamsPolygon& poly, const Verdict& v) {
  out << "equation: " << to_string(eq) << "\n\n";
  out << pad("j", 4) << pad("d_j", 8) << "d_j - j\n";
  for (std::size_t j = 0; j < na.degrees.size(); ++j) {
    const int d = na.degrees[j];
    out << pad(std::to_string(j), 4) << pad(d == kZeroDegree ? "-inf" : std::to_string(d), 8)
        << (d == kZeroDegree ? "-inf" : std::to_string(d - static_cast<int>(j))) << '\n';
  }
  out << "\ns = (";
  for (std::size_t k = 0; k < na.s_seq.size(); ++k) out << (k ? ", " : "") << na.s_seq[k];
  out << "), p = " << na.p << "\n\n";
  out << pad("rho", 10) << "max_count\n";
  for (const auto& o : na.orders) out << pad(o.rho.get_str(), 10) << o.max_count << '\n';
  out << "\nAdams points (i, j_i):";
  for (const auto& [x, j] : poly.points) out << " (" << x << ',' << j << ')';
  out << "\n\n" << pad("mu", 8) << pad("span", 6) << pad("chi", 8) << "characteristic polynomial\n";
  for (const auto& s : poly.segments) {
    out << pad(s.mu.get_str(), 8) << pad(std::to_string(s.span), 6) << pad(s.chi ? s.chi->get_str() : "-", 8)
        << s.char_poly.to_string('g') << '\n';
  }
  out << '\n' << v.text << '\n';
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

struct Common {
  EquationInput eq;
  std::string format = "json";
};

int cmd_analyze(const Common& c, std::ostream& out) {
  const std::string text = c.eq.get();
  const auto eq = normalize_to_delta(parse_equation(text));
  const auto na = analyze_newton(eq);
  const auto rec = derive_recurrence(eq);
  const auto poly = adams_polygon(rec);
  const auto v = verdict(na);
  if (c.format == "human") {
    human_analyze(out, eq, na, poly, v);
    return kOk;
  }
  json branches = json::array();
  for (const auto& o : na.orders) {
    json roots = nullptr;
    for (const auto& s : poly.segments) {
      if (s.chi && *s.chi == o.rho) roots = roots_json(s.char_roots);
    }
    branches.push_back(json{{"order", to_string(o.rho)}, {"max_count", o.max_count}, {"char_roots", roots}});
  }
  json j = header("analyze");
  j["equation"] = equation_json(text, eq);
  j["newton"] = newton_json(na);
  j["adams"] = adams_json(poly);
  j["branches"] = branches;
  j["unmodeled"] = "subexponential factors exp(L_j(n)) n^r_j of the asymptotic templates are not computed";
  j["verdict"] = json{{"exists_sub1", v.exists_sub1}, {"total_bound", v.total_bound}, {"text", v.text}};
  emit(out, j);
  return kOk;
}

int cmd_recurrence(const Common& c, const std::string& rho_text, std::ostream& out) {
  const std::string text = c.eq.get();
  const auto eq = normalize_to_delta(parse_equation(text));
  const Rational rho = rho_text.empty() ? Rational(0) : rational_arg(rho_text, "--rho");
  const auto rec = rho == 0 ? derive_recurrence(eq) : shifted_recurrence(eq, rho);
  const auto ind = indicial_exponents(eq);
  if (c.format == "human") {
    out << "equation: " << to_string(eq) << "\nrho: " << rho.get_str() << "\n\n";
    for (int i = rec.first; i <= rec.last(); ++i) out << pad("Q(n," + std::to_string(i) + ")", 10) << rec.Q(i).to_string('n') << '\n';
    out << "\nindicial polynomial: " << ind.polynomial.to_string('r') << "\nrational roots:";
    for (const auto& r : ind.roots.rational) out << ' ' << r.get_str();
    out << '\n';
    return kOk;
  }
  json window = json::array();
  for (int i = rec.first; i <= rec.last(); ++i) window.push_back(json{{"i", i}, {"Q", rec.Q(i).to_string('n')}});
  json constraints = json::array();
  for (const auto& row : rec.initial_constraints) constraints.push_back(rationals_json(row));
  json j = header("recurrence");
  j["equation"] = equation_json(text, eq);
  j["rho"] = to_string(rho);
  j["m"] = rec.m;
  j["d"] = rec.d;
  j["window"] = window;
  j["initial_constraints"] = constraints;
  j["indicial"] = json{{"polynomial", ind.polynomial.to_string('r')}, {"roots", roots_json(ind.roots)}};
  emit(out, j);
  return kOk;
}

struct SolveArgs {
  int terms = 200;
  std::string rho;
  std::string init;
};

std::vector<SeriesSolution> solve_streams(const DifferenceEquation& eq, const SolveArgs& s, SolutionSpace* space_out) {
  if (s.terms < 16) throw UsageError("--terms must be at least 16");
  const Rational rho = s.rho.empty() ? Rational(0) : rational_arg(s.rho, "--rho");
  const auto rec = rho == 0 ? derive_recurrence(eq) : shifted_recurrence(eq, rho);
  SolveOptions opt;
  if (!s.init.empty()) opt.initial = parse_pins(s.init);
  auto space = solve_series(rec, s.terms, opt);
  auto streams = solution_streams(space, rho);
  if (!opt.initial.empty() && !streams.empty() && streams.front().provenance == "particular") {
    streams.front().provenance = "pinned: " + s.init;
  }
  if (space_out) *space_out = std::move(space);
  return streams;
}

int cmd_solve(const Common& c, const SolveArgs& s, std::ostream& out) {
  const std::string text = c.eq.get();
  const auto eq = normalize_to_delta(parse_equation(text));
  SolutionSpace space;
  const auto streams = solve_streams(eq, s, &space);
  if (c.format == "human") {
    out << "equation: " << to_string(eq) << "\ndimension: " << space.dimension() << "\n";
    for (const auto& st : streams) {
      out << '\n' << st.provenance << '\n';
      const std::size_t shown = std::min<std::size_t>(st.coeffs.size(), 12);
      for (std::size_t n = 0; n < shown; ++n) out << "  a_" << n << " = " << st.coeffs[n].get_str() << '\n';
      try {
        out << "  chi_hat = " << estimate_chi_log(st.log_abs).chi_hat << '\n';
      } catch (const TooFewTerms&) {
        out << "  chi_hat = (too few nonzero terms)\n";
      }
    }
    return kOk;
  }
  json sols = json::array();
  for (const auto& st : streams) sols.push_back(solution_json(st, true));
  json j = header("solve");
  j["equation"] = equation_json(text, eq);
  j["rho"] = to_string(s.rho.empty() ? Rational(0) : rational_arg(s.rho, "--rho"));
  j["terms"] = s.terms;
  j["dimension"] = space.dimension();
  j["free_indices"] = space.free_indices;
  j["solutions"] = sols;
  emit(out, j);
  return kOk;
}

int cmd_construct(const std::string& order, int terms, const std::string& format, std::ostream& out) {
  try {
    parse_rational(order);
  } catch (const std::invalid_argument&) {
    throw InvalidOrder("malformed order '" + order + "'");
  }
  const auto slash = order.find('/');
  if (slash == std::string::npos) throw InvalidOrder("order must be written q/p");
  int q = 0, p = 0;
  try {
    q = std::stoi(order.substr(0, slash));
    p = std::stoi(order.substr(slash + 1));
  } catch (const std::exception&) {
    throw InvalidOrder("malformed order '" + order + "'");
  }
  const auto res = construct_equation(q, p, terms);
  const auto rep = roundtrip_check(res);
  if (format == "human") {
    out << "order: " << q << '/' << p << "\nA:";
    for (const auto& a : res.A) out << ' ' << a.get_str();
    out << "\ntemplate:  " << to_string(res.template_form) << "\ncanonical: " << to_string(res.canonical)
        << "\nround trip: " << (rep.ok ? "pass" : "FAIL at " + rep.failed_stage) << " (chi_hat " << rep.chi_hat
        << ")\n";
    return rep.ok ? kOk : kUsage;
  }
  json j = header("construct");
  j["q"] = q;
  j["p"] = p;
  j["A"] = rationals_json(res.A);
  j["template"] = to_string(res.template_form);
  j["canonical"] = to_string(res.canonical);
  j["predicted"] = solution_json(res.predicted, false);
  j["roundtrip"] = json{{"ok", rep.ok},
                        {"failed_stage", rep.failed_stage},
                        {"order_listed", rep.order_listed},
                        {"polygon_segment", rep.polygon_segment},
                        {"residual_zero", rep.residual_zero},
                        {"rows_checked", rep.rows_checked},
                        {"solve_matches", rep.solve_matches},
                        {"chi_hat", number_json(rep.chi_hat)},
                        {"chi_ok", rep.chi_ok}};
  emit(out, j);
  return rep.ok ? kOk : kUsage;
}

struct EvalArgs {
  std::string solution_file;
  int index = 0;
  std::string at;
  std::string radii;
  int samples = 64;
  double tol = 1e-16;
};

SeriesSolution load_solution(const Common& c, const SolveArgs& s, const EvalArgs& e) {
  if (!e.solution_file.empty()) {
    json doc;
    try {
      doc = json::parse(read_file(e.solution_file));
    } catch (const json::exception& ex) {
      throw UsageError("cannot parse solution file: " + std::string(ex.what()));
    }
    try {
      return solution_from_json(doc, e.index);
    } catch (const json::exception& ex) {
      throw UsageError("malformed solution file: " + std::string(ex.what()));
    }
  }
  const auto eq = normalize_to_delta(parse_equation(c.eq.get()));
  auto streams = solve_streams(eq, s, nullptr);
  if (e.index < 0 || e.index >= static_cast<int>(streams.size())) throw UsageError("solution index out of range");
  return std::move(streams[static_cast<std::size_t>(e.index)]);
}

int cmd_eval(const Common& c, const SolveArgs& s, const EvalArgs& e, std::ostream& out) {
  if (e.at.empty() == e.radii.empty()) throw UsageError("give exactly one of --at or --radii");
  std::optional<std::complex<double>> at;
  std::vector<double> radii;
  if (!e.at.empty()) at = parse_complex(e.at);
  if (!e.radii.empty()) radii = parse_radii(e.radii);
  EvalOptions opt;
  opt.tol = e.tol;
  const SeriesEvaluator f(load_solution(c, s, e), opt);
  json j = header("eval");
  j["rho"] = to_string(f.solution().rho_offset);
  j["terms_available"] = f.solution().coeffs.size();
  if (at) {
    const auto r = f(*at);
    if (c.format == "human") {
      out << "f(" << at->real() << (at->imag() < 0 ? "" : "+") << at->imag() << "i) = " << std::setprecision(17)
          << r.value.real() << (r.value.imag() < 0 ? "" : "+") << r.value.imag() << "i\nlog|f| = " << r.log_abs
          << "\nterms used: " << r.terms_used << '\n';
      return kOk;
    }
    j["at"] = complex_json(*at);
    j["value"] = complex_json(r.value);
    j["log_abs"] = number_json(r.log_abs);
    j["terms_used"] = r.terms_used;
    j["tail_bound"] = number_json(r.tail_bound);
    j["precision_bits"] = r.precision_bits;
  } else {
    const auto eo = empirical_order(f, radii, e.samples);
    if (c.format == "human") {
      out << pad("r", 12) << "log M(r)\n";
      for (std::size_t k = 0; k < eo.radii.size(); ++k) out << pad(std::to_string(eo.radii[k]), 12) << eo.log_M[k] << '\n';
      out << "rho_hat = " << eo.rho_hat << "\nL_hat = " << eo.L_hat << "\nmonotone: " << (eo.monotone ? "yes" : "no")
          << '\n';
      return kOk;
    }
    json logm = json::array();
    for (double v : eo.log_M) logm.push_back(number_json(v));
    j["radii"] = eo.radii;
    j["samples"] = e.samples;
    j["log_M"] = logm;
    j["rho_hat"] = number_json(eo.rho_hat);
    j["L_hat"] = number_json(eo.L_hat);
    j["fit_residual"] = number_json(eo.fit_residual);
    j["monotone"] = eo.monotone;
  }
  emit(out, j);
  return kOk;
}

int cmd_verify(const Common& c, const SolveArgs& s, const EvalArgs& e, int rows, std::ostream& out) {
  if (e.solution_file.empty()) throw UsageError("verify needs --solution");
  const auto eq = normalize_to_delta(parse_equation(c.eq.get()));
  const auto sol = load_solution(c, s, e);
  const int m = eq.order();
  const int available = static_cast<int>(sol.coeffs.size()) - 1 - m;
  const int N = rows > 0 ? std::min(rows, available) : available;
  if (N < 0) throw InsufficientCoefficients("solution too short for this equation");
  const auto image = apply_operator(eq, sol.coeffs, N, sol.rho_offset);
  std::optional<int> first_bad;
  for (std::size_t k = 0; k < image.coeffs.size(); ++k) {
    if (image.coeffs[k] != 0) {
      first_bad = image.first_index + static_cast<int>(k);
      break;
    }
  }
  const auto rec = shifted_recurrence(eq, sol.rho_offset);
  const auto vr = verify_recurrence(rec, sol.coeffs, N);
  const bool ok = !first_bad && vr.ok;
  if (c.format == "human") {
    out << (ok ? "ok" : "FAILED") << ": rows " << image.first_index << ".." << N;
    if (first_bad) out << ", first nonzero coefficient at n = " << *first_bad;
    out << '\n';
    return ok ? kOk : kUsage;
  }
  json j = header("verify");
  j["ok"] = ok;
  j["rows"] = json::array({image.first_index, N});
  j["operator_first_nonzero"] = first_bad ? json(*first_bad) : json(nullptr);
  j["recurrence_first_failing_row"] = vr.first_failing_row ? json(*vr.first_failing_row) : json(nullptr);
  j["max_abs_residual"] = to_string(vr.max_abs_residual);
  emit(out, j);
  return ok ? kOk : kUsage;
}

int cmd_compose(const std::string& outer_text, const std::string& inner_text, const std::string& format,
                std::ostream& out) {
  const auto outer = normalize_to_delta(parse_equation(outer_text));
  const auto inner = normalize_to_delta(parse_equation(inner_text));
  const auto product = compose_operators(outer, inner);
  if (format == "human") {
    out << to_string(product) << '\n';
    return kOk;
  }
  json j = header("compose");
  j["outer"] = to_string(outer);
  j["inner"] = to_string(inner);
  j["product"] = equation_json(to_string(product), product);
  j["canonical"] = to_string(product.canonical());
  emit(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth orders of entire solutions of linear difference equations", "deltaorder"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "deltaorder 0.3.0");

  Common common;
  SolveArgs solve;
  EvalArgs eval;
  std::string order;
  int construct_terms = 200;
  int verify_rows = 0;
  std::string outer, inner;

  auto add_common = [&](CLI::App* sub, bool positional) {
    if (positional) sub->add_option("equation", common.eq.text, "equation text, e.g. \"D f(z) - f(z) = 0\"");
    sub->add_option("--file", common.eq.file, "read the equation from a file");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "human"}));
  };
  auto add_solve = [&](CLI::App* sub) {
    sub->add_option("--terms", solve.terms, "number of coefficients (>= 16)");
    sub->add_option("--rho", solve.rho, "offset rho of sum a_n z^<n+rho>");
    sub->add_option("--init", solve.init, "pinned values, e.g. \"0=1,1=0\"");
  };

  auto* analyze = app.add_subcommand("analyze", "Newton orders, Adams polygon and verdict");
  add_common(analyze, true);

  auto* recurrence = app.add_subcommand("recurrence", "coefficient recurrence window");
  add_common(recurrence, true);
  recurrence->add_option("--rho", solve.rho, "offset rho");

  auto* solve_cmd = app.add_subcommand("solve", "truncated binomial-series solution space");
  add_common(solve_cmd, true);
  add_solve(solve_cmd);

  auto* construct = app.add_subcommand("construct", "equation with an entire solution of order q/p");
  construct->add_option("--order", order, "q/p with 0 < q < p coprime")->required();
  construct->add_option("--terms", construct_terms, "predicted series length in multiples of q");
  construct->add_option("--format", common.format)->check(CLI::IsMember({"json", "human"}));

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a series solution or its maximum modulus");
  add_common(eval_cmd, true);
  add_solve(eval_cmd);
  eval_cmd->add_option("--solution", eval.solution_file, "JSON written by `solve`");
  eval_cmd->add_option("--index", eval.index, "which solution in the file / space");
  eval_cmd->add_option("--at", eval.at, "point x+yi");
  eval_cmd->add_option("--radii", eval.radii, "comma-separated radii for the growth fit");
  eval_cmd->add_option("--samples", eval.samples, "points per circle")->check(CLI::Range(8, 1 << 16));
  eval_cmd->add_option("--tol", eval.tol, "relative stopping tolerance");

  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an equation");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--solution", eval.solution_file, "JSON written by `solve`")->required();
  verify_cmd->add_option("--index", eval.index, "which solution in the file");
  verify_cmd->add_option("--rows", verify_rows, "check rows up to this index (default: all available)");

  auto* compose = app.add_subcommand("compose", "operator product outer(inner(f))");
  compose->add_option("outer", outer, "outer equation")->required();
  compose->add_option("inner", inner, "inner equation")->required();
  compose->add_option("--format", common.format)->check(CLI::IsMember({"json", "human"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(common, out);
    if (*recurrence) return cmd_recurrence(common, solve.rho, out);
    if (*solve_cmd) return cmd_solve(common, solve, out);
    if (*construct) return cmd_construct(order, construct_terms, common.format, out);
    if (*eval_cmd) {
      try {
        return cmd_eval(common, solve, eval, out);
      } catch (const PoleError& e) {
        err << "error: " << e.what() << '\n';
        return kEvalFailure;
      } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kEvalFailure;
      }
    }
    if (*verify_cmd) return cmd_verify(common, solve, eval, verify_rows, out);
    if (*compose) return cmd_compose(outer, inner, common.format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegenerateEquation& e) {
    err << "degenerate equation: " << e.what() << '\n';
    return kDegenerate;
  } catch (const EmptySolutionSpace& e) {
    err << "empty solution space: " << e.what() << '\n';
    return kEmptySpace;
  } catch (const InconsistentInitialData& e) {
    err << "empty solution space: " << e.what() << '\n';
    return kEmptySpace;
  } catch (const InvalidOrder& e) {
    err << "invalid order: " << e.what() << '\n';
    return kInvalidOrder;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace deltaorder::cli
