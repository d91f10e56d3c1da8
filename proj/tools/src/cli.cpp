#include "klcalc/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "klcalc/audit.hpp"
#include "klcalc/cli/json_io.hpp"
#include "klcalc/collapsing.hpp"
#include "klcalc/conformal.hpp"
#include "klcalc/singular.hpp"

namespace klcalc::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "' (expected json, text, latex or csv)");
}

std::size_t parse_cap(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("malformed cap '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("malformed cap '" + s + "'");
  if (v < 1000) throw UsageError("cap must be at least 1000");
  return static_cast<std::size_t>(v);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Grammar: one "key = value" per line; '#' starts a comment; keys: format, cap, seed.
void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "format") cfg.format = parse_format(value);
    else if (key == "cap") cfg.cap = parse_cap(value);
    else if (key == "seed") {
      try {
        cfg.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw UsageError(path + ":" + std::to_string(lineno) + ": malformed seed");
      }
    } else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

Rational parse_level(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational '" + s + "'");
  }
}

AlgebraSpec parse_algebra(const std::string& s) {
  if (s.empty()) throw UsageError("--algebra is required");
  try {
    const AlgebraSpec spec = spec_from_name(s);
    build_root_system(spec);
    return spec;
  } catch (const std::invalid_argument& e) {
    throw UsageError("unsupported algebra '" + s + "': " + e.what());
  }
}

// "[1,1/2,0]", "1,1/2,0", "0", or a sum of fundamental weights such as "2w1+w3".
Weight parse_weight(const RootSystem& rs, std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s == "0") return Weight(rs.ambient_dim());
  if (s.find('w') != std::string::npos) {
    Weight w(rs.ambient_dim());
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
      const auto p = term.find('w');
      if (p == std::string::npos || p + 1 >= term.size()) throw UsageError("malformed weight term '" + term + "'");
      const Rational mult = p == 0 ? Rational(1) : parse_level(term.substr(0, p));
      int i = 0;
      try {
        i = std::stoi(term.substr(p + 1));
      } catch (const std::exception&) {
        throw UsageError("malformed weight term '" + term + "'");
      }
      if (i < 1 || i > rs.rank()) throw UsageError("fundamental weight index out of range in '" + term + "'");
      w += mult * rs.fundamental_weight(i);
    }
    return w;
  }
  if (!s.empty() && s.front() == '[') s.erase(0, 1);
  if (!s.empty() && s.back() == ']') s.pop_back();
  std::vector<Rational> c;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, ',')) c.push_back(parse_level(x));
  if (c.size() != rs.ambient_dim())
    throw UsageError("weight has " + std::to_string(c.size()) + " coordinates, expected " +
                     std::to_string(rs.ambient_dim()));
  return Weight(std::move(c));
}

std::string involution_str(const PairInvolution& p) {
  std::string s;
  for (const auto& [i, j] : p.pairs) s += "(" + std::to_string(i) + std::to_string(j) + ")";
  return s;
}

std::string monomial_str(const LieRealization& L, const Monomial& m) {
  if (m.empty()) return "|0>";
  std::string s;
  for (const auto& g : m) s += (s.empty() ? "" : " ") + generator_label(L, g);
  return s;
}

void print_state(std::ostream& out, const LieRealization& L, const StateVector& v) {
  for (const auto& [m, c] : v.terms()) out << "  " << std::setw(6) << c.str() << "  " << monomial_str(L, m) << "\n";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
  // verb options
  std::string family{};
  int n = 1;
  int ell = 0;
  std::optional<std::size_t> count{};
  bool count_flag = false;
  bool audit = false;
  bool brackets = false;
  std::string quotient = "simple";
  std::string weight{};
  std::optional<int> degree{};

  Rational level() const {
    if (!cfg.level) throw UsageError("--level is required for '" + cfg.verb + "'");
    return parse_level(*cfg.level);
  }
  void require_format(std::initializer_list<Format> allowed) const {
    for (auto f : allowed)
      if (f == cfg.format) return;
    throw UsageError("output format not supported by '" + cfg.verb + "'");
  }
};

void witness(Context& c, const LieRealization& L, const SingularityCheck& chk) {
  json w = {{"singular", false}};
  if (chk.failing) w["failing_operator"] = generator_label(L, *chk.failing);
  if (chk.witness) w["witness"] = io::to_json(L, *chk.witness);
  c.out << w.dump(2) << "\n";
}

int verb_roots(Context& c) {
  c.require_format({Format::Json, Format::Text, Format::Csv});
  const AlgebraSpec spec = parse_algebra(c.cfg.algebra);
  const RootSystem rs = build_root_system(spec);
  if (c.cfg.format == Format::Csv) {
    c.out << "index,root,positive,height\n";
    for (std::size_t i = 0; i < rs.roots().size(); ++i)
      c.out << i << ",\"" << rs.roots()[i].str() << "\"," << (rs.is_positive(i) ? 1 : 0) << "," << rs.height(i) << "\n";
    return kOk;
  }
  const LieRealization L = build_realization(rs);
  const MinimalGrading mg = minimal_grading(L);
  if (c.cfg.format == Format::Json) {
    json j = io::to_json(rs);
    json comps = json::array();
    for (const auto& comp : mg.components())
      comps.push_back({{"name", comp.name}, {"type", comp.type_label}, {"dim", comp.dim()},
                       {"dual_coxeter", comp.dual_coxeter.str()}});
    j["grading"] = {{"g_natural", comps}, {"g_half_dim", mg.piece_dim(Rational(1, 2))}};
    if (c.brackets) j["realization"] = io::to_json(L);
    c.out << j.dump(2) << "\n";
    return kOk;
  }
  c.out << rs.label() << " (" << lie_name(spec) << "): rank " << rs.rank() << ", dim " << L.dim() << ", "
        << rs.roots().size() << " roots\n";
  c.out << "dual Coxeter number " << rs.dual_coxeter() << ", theta " << rs.theta() << ", rho " << rs.rho() << "\n";
  c.out << "simple roots:";
  for (const auto& a : rs.simple_roots()) c.out << " " << a;
  c.out << "\nminimal grading: dim g_1/2 = " << mg.piece_dim(Rational(1, 2)) << ", g_natural =";
  for (const auto& comp : mg.components()) c.out << " " << comp.name << "[h=" << comp.dual_coxeter << "]";
  c.out << "\n";
  if (c.brackets) c.out << io::to_json(L).dump() << "\n";
  return kOk;
}

int verb_bracket_audit(Context& c) {
  c.require_format({Format::Json, Format::Text});
  const RootSystem rs = build_root_system(parse_algebra(c.cfg.algebra));
  std::vector<CheckReport> reports;
  const LieRealization L = build_realization(rs);
  reports.push_back(audit_brackets(L, c.cfg.seed, c.count.value_or(10000)));
  if (rs.type() == RootType::D) reports.push_back(audit_automorphism(L, dynkin_flip(L)));
  bool ok = true;
  json j = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    json f = json::array();
    for (const auto& x : r.failures) f.push_back({{"check", x.check}, {"detail", x.detail}});
    j.push_back({{"subject", r.subject}, {"checked", r.checked}, {"exhaustive", r.exhaustive},
                 {"failures", r.failure_count}, {"witnesses", f}});
  }
  if (c.cfg.format == Format::Json || !ok) {
    c.out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      c.out << r.subject << ": " << r.checked << " checks (" << (r.exhaustive ? "exhaustive" : "random triples")
            << "), " << r.failure_count << " failures\n";
  }
  return ok ? kOk : kCheckFailed;
}

int verb_singular_verify(Context& c) {
  c.require_format({Format::Json, Format::Text});
  const RootSystem rs = build_root_system(parse_algebra(c.cfg.algebra));
  const LieRealization L = build_realization(rs);
  const std::string& f = c.family;
  std::optional<StateVector> v;
  json extra;
  try {
    if (f == "w1") v = rs.type() == RootType::B ? build_w1_B(L) : build_w1_D(L);
    else if (f == "w3") v = build_w3_D4(L);
    else if (f == "vn") v = build_v_n(L, c.n, c.cfg.cap);
    else if (f == "wn") v = build_w_n(L, c.n, c.cfg.cap);
    else if (f == "theta-w1") v = theta_image(L, build_w1_D(L));
    else if (f == "theta-wn") v = theta_image(L, build_w_n(L, c.n, c.cfg.cap));
    else if (f == "vE7") {
      const ResolvedVector r = build_vE7(L);
      v = r.vector;
      json flips = json::array();
      for (const auto& w : r.match.flipped) flips.push_back(w.str());
      extra = {{"common_magnitude", r.common_magnitude}, {"matches_display", r.match.matches},
               {"sign_flips", flips}};
    } else
      throw UsageError("unknown family '" + f + "' (expected w1, w3, vn, wn, theta-w1, theta-wn, vE7)");
  } catch (const CapExceeded& e) {
    c.out << (c.cfg.format == Format::Json ? json{{"status", "capped"}, {"cap", e.cap()}}.dump(2) : "capped: " + std::string(e.what()))
          << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SingularityCheck chk = is_singular(L, *v);
  if (!chk.singular) {
    witness(c, L, chk);
    return kCheckFailed;
  }
  if (c.cfg.format == Format::Json) {
    json j = {{"family", f},          {"algebra", rs.label()},       {"singular", true},
              {"level", v->level().str()}, {"degree", v->degree().str()}, {"support", v->size()},
              {"vector", io::to_json(L, *v)}};
    if (!extra.is_null()) j["sign_resolution"] = extra;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << f << " in " << rs.label() << ": singular at level " << v->level() << ", degree " << v->degree() << ", "
          << v->size() << " support monomials\n";
    if (!extra.is_null()) c.out << "sign resolution: " << extra.dump() << "\n";
    print_state(c.out, L, *v);
  }
  return kOk;
}

int verb_singular_search(Context& c) {
  c.require_format({Format::Json, Format::Text});
  const RootSystem rs = build_root_system(parse_algebra(c.cfg.algebra));
  if (c.weight.empty() || !c.degree) throw UsageError("singular-search needs --weight and --degree");
  if (*c.degree < 1) throw UsageError("--degree must be at least 1");
  const LieRealization L = build_realization(rs);
  const Weight w = parse_weight(rs, c.weight);
  const Rational k = c.level();
  std::vector<StateVector> ker;
  std::size_t basis_size = 0;
  try {
    basis_size = graded_basis(L, w, *c.degree, c.cfg.cap).size();
    ker = singular_kernel(L, k, w, *c.degree, c.cfg.cap);
  } catch (const CapExceeded& e) {
    c.out << "capped: " << e.what() << "\n";
    return kUsageError;
  }
  if (c.cfg.format == Format::Json) {
    json vs = json::array();
    for (const auto& v : ker) vs.push_back(io::to_json(L, v));
    c.out << json{{"algebra", rs.label()}, {"level", k.str()}, {"weight", io::to_json(w)}, {"degree", *c.degree},
                  {"graded_dim", basis_size}, {"kernel_dim", ker.size()}, {"kernel", vs}}
                 .dump(2)
          << "\n";
  } else {
    c.out << rs.label() << " level " << k << ", weight " << w << ", degree " << *c.degree << ": graded dim "
          << basis_size << ", singular kernel dim " << ker.size() << "\n";
    for (std::size_t i = 0; i < ker.size(); ++i) {
      c.out << "vector " << i << ":\n";
      print_state(c.out, L, ker[i]);
    }
  }
  return kOk;
}

std::string latex_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
    out += ch;
  }
  return out;
}

int collapse_audit(Context& c) {
  const auto rep = collapsing_audit();
  const auto& lines = rep.lines;
  switch (c.cfg.format) {
    case Format::Json: {
      json rows = json::array();
      for (const auto& l : lines) {
        json r = {{"row", l.expected.row},         {"algebra", l.expected.g_name}, {"k", l.expected.k.str()},
                  {"expected_target", l.expected.target}, {"expected_k_prime", l.expected.k_prime.str()},
                  {"ok", l.ok}};
        if (l.computed) r["computed"] = {{"target", l.computed->target}, {"k_prime", l.computed->k_prime.str()}};
        if (!l.message.empty()) r["message"] = l.message;
        rows.push_back(r);
      }
      c.out << json{{"all_ok", rep.all_ok()}, {"rows", rows}, {"data_only", rep.data_only}, {"notes", rep.notes}}.dump(2)
            << "\n";
      break;
    }
    case Format::Csv:
      c.out << "row,algebra,k,expected_target,expected_k_prime,computed_target,computed_k_prime,ok\n";
      for (const auto& l : lines)
        c.out << "\"" << l.expected.row << "\"," << l.expected.g_name << "," << l.expected.k << "," << l.expected.target
              << "," << l.expected.k_prime << "," << (l.computed ? l.computed->target : "") << ","
              << (l.computed ? l.computed->k_prime.str() : "") << "," << (l.ok ? "OK" : "MISMATCH") << "\n";
      break;
    case Format::Latex:
      c.out << "\\begin{tabular}{lllll}\n$\\mathfrak g$ & $k$ & $W_k(\\mathfrak g,\\theta)$ & $k'$ & audit \\\\\n\\hline\n";
      for (const auto& l : lines)
        c.out << latex_escape(l.expected.g_name) << " & $" << l.expected.k << "$ & " << latex_escape(l.expected.target)
              << " & $" << l.expected.k_prime << "$ & " << (l.ok ? "OK" : "MISMATCH") << " \\\\\n";
      c.out << "\\end{tabular}\n";
      break;
    case Format::Text:
      for (const auto& l : lines) {
        c.out << (l.ok ? "OK       " : "MISMATCH ") << std::left << std::setw(10) << l.expected.g_name << " k="
              << std::setw(6) << l.expected.k.str() << " -> " << std::setw(12) << l.expected.target << " k'="
              << std::setw(6) << l.expected.k_prime.str();
        if (l.computed) c.out << "  computed " << l.computed->target << " k'=" << l.computed->k_prime;
        if (!l.message.empty()) c.out << "  (" << l.message << ")";
        c.out << std::right << "\n";
      }
      for (const auto& d : rep.data_only) c.out << "data only: " << d << "\n";
      for (const auto& n : rep.notes) c.out << "note: " << n << "\n";
      c.out << (rep.all_ok() ? "all Lie-algebra rows reproduced\n" : "audit FAILED\n");
      break;
  }
  return rep.all_ok() ? kOk : kCheckFailed;
}

int collapse_polynomials(Context& c) {
  const auto& rows = polynomial_table();
  switch (c.cfg.format) {
    case Format::Json: {
      json j = json::array();
      for (const auto& r : rows) j.push_back({{"g", r.g_label}, {"p(k)", r.p_of_k}, {"super", r.is_super}});
      c.out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      c.out << "g,p(k),super\n";
      for (const auto& r : rows) c.out << "\"" << r.g_label << "\",\"" << r.p_of_k << "\"," << r.is_super << "\n";
      break;
    case Format::Latex:
      c.out << "\\begin{tabular}{ll}\n$\\mathfrak g$ & $p(k)$ \\\\\n\\hline\n";
      for (const auto& r : rows) c.out << latex_escape(r.g_label) << " & $" << r.p_of_k << "$ \\\\\n";
      c.out << "\\end{tabular}\n";
      break;
    case Format::Text:
      for (const auto& r : rows) c.out << std::left << std::setw(22) << r.g_label << std::right << r.p_of_k << "\n";
      break;
  }
  return kOk;
}

int verb_collapse(Context& c) {
  if (c.audit) return collapse_audit(c);
  if (c.cfg.algebra.empty()) return collapse_polynomials(c);
  c.require_format({Format::Json, Format::Text});
  const AlgebraSpec spec = parse_algebra(c.cfg.algebra);
  const CollapsePolynomial p = p_of_k(spec);
  if (!c.cfg.level) {
    if (c.cfg.format == Format::Json)
      c.out << json{{"algebra", lie_name(spec)}, {"collapsing_levels", {p.root1.str(), p.root2.str()}}}.dump(2) << "\n";
    else
      c.out << lie_name(spec) << ": p(k) = (k - (" << p.root1 << "))(k - (" << p.root2 << "))\n";
    return kOk;
  }
  const Rational k = c.level();
  if (!is_collapsing(spec, k)) {
    c.out << json{{"algebra", lie_name(spec)}, {"k", k.str()}, {"collapsing", false}}.dump(2) << "\n";
    return kCheckFailed;
  }
  const CollapseTarget t = collapsed_level(spec, k);
  if (c.cfg.format == Format::Json)
    c.out << json{{"algebra", lie_name(spec)}, {"k", k.str()}, {"collapsing", true}, {"target", t.target},
                  {"k_prime", t.k_prime.str()}, {"target_types", t.target_types}}
                 .dump(2)
          << "\n";
  else
    c.out << "W_" << k << "(" << lie_name(spec) << ", theta) = " << (t.target == "C" || t.target == "M(1)" ? t.target : "V_" + t.k_prime.str() + "(" + t.target + ")")
          << "  (k' = " << t.k_prime << ")\n";
  return kOk;
}

int verb_kl(Context& c) {
  c.require_format({Format::Json, Format::Text, Format::Csv});
  const AlgebraSpec spec = parse_algebra(c.cfg.algebra);
  const Rational k = c.level();
  Quotient q;
  try {
    q = parse_quotient(c.quotient);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  KLSpectrum s;
  try {
    s = kl_spectrum(spec, k, q);
  } catch (const NotClassified& e) {
    c.err << "not classified: " << e.what() << "\n";
    return kUsageError;
  }
  const int bound = static_cast<int>(c.count.value_or(5));
  const auto ws = s.weights(bound);
  const RootSystem rs = build_root_system(spec);
  if (c.cfg.format == Format::Json) {
    json fams = json::array();
    for (const auto& f : s.families)
      fams.push_back({{"description", f.description}, {"base", io::to_json(f.base)}, {"step", io::to_json(f.step)},
                      {"max_t", f.max_t ? json(*f.max_t) : json(nullptr)}});
    json list = json::array();
    for (const auto& w : ws) list.push_back({{"weight", io::to_json(w)}, {"conformal_weight", sugawara_weight(rs, w, k).str()}});
    c.out << json{{"algebra", s.g_label}, {"level", k.str()}, {"quotient", to_string(q)}, {"provenance", s.provenance},
                  {"finite", s.finite()}, {"families", fams}, {"weights", list}}
                 .dump(2)
          << "\n";
  } else if (c.cfg.format == Format::Csv) {
    c.out << "weight,conformal_weight\n";
    for (const auto& w : ws) c.out << "\"" << w.str() << "\"," << sugawara_weight(rs, w, k) << "\n";
  } else {
    c.out << s.g_label << " at k=" << k << " (" << to_string(q) << "), provenance " << s.provenance << "\n";
    for (const auto& f : s.families) c.out << "  family: " << f.description << "\n";
    c.out << (s.finite() ? "  weights:\n" : "  weights up to t=" + std::to_string(bound) + ":\n");
    for (const auto& w : ws) c.out << "    " << w << "  h=" << sugawara_weight(rs, w, k) << "\n";
  }
  return kOk;
}

int verb_weights(Context& c) {
  c.require_format({Format::Json, Format::Text});
  const RootSystem rs = build_root_system(parse_algebra(c.cfg.algebra));
  const Rational k = c.level();
  if (k + rs.dual_coxeter() == Rational(0)) throw UsageError("critical level");
  if (c.weight.empty()) {
    const auto eq = collapse_ell_equation(k, rs.dual_coxeter());
    std::vector<std::string> roots;
    for (const auto& r : eq.roots()) roots.push_back(r.str());
    if (c.cfg.format == Format::Json)
      c.out << json{{"algebra", rs.label()}, {"level", k.str()}, {"ell_roots", roots}}.dump(2) << "\n";
    else
      c.out << rs.label() << " k=" << k << ": (l^2 - (" << (k + Rational(1)) << ") l) / (" << (k + rs.dual_coxeter())
            << ") = 0  =>  l in {" << join(roots, ", ") << "}\n";
    return kOk;
  }
  const Weight mu = parse_weight(rs, c.weight);
  const HighestWeightLabel hw = decompose_weight(rs, mu);
  const Rational sw = sugawara_weight(rs, mu, k), ww = w_lowest_weight(rs, mu, k);
  if (c.cfg.format == Format::Json)
    c.out << json{{"algebra", rs.label()},       {"level", k.str()},
                  {"weight", io::to_json(mu)},    {"dominant_integral", rs.is_dominant_integral(mu)},
                  {"sugawara_weight", sw.str()},  {"w_lowest_weight", ww.str()},
                  {"theta_coeff", hw.theta_coeff.str()}, {"mu_natural", io::to_json(hw.mu_natural)}}
                 .dump(2)
          << "\n";
  else
    c.out << rs.label() << " k=" << k << " mu=" << mu << (rs.is_dominant_integral(mu) ? "" : " (not dominant integral)")
          << "\n  conformal weight " << sw << "\n  lowest weight on the reduction " << ww << "\n  theta_coeff "
          << hw.theta_coeff << ", mu_natural " << hw.mu_natural << "\n";
  return kOk;
}

int verb_involutions(Context& c) {
  if (c.ell < 1) throw UsageError("--ell must be at least 1");
  if (c.ell > 8) throw UsageError("--ell above 8 is refused (more than 2 million involutions)");
  if (c.count_flag) {
    c.out << (c.cfg.format == Format::Json ? json{{"ell", c.ell}, {"count", double_factorial_odd(c.ell)}}.dump()
                                           : std::to_string(double_factorial_odd(c.ell)))
          << "\n";
    return kOk;
  }
  const auto inv = enumerate_involutions(c.ell);
  switch (c.cfg.format) {
    case Format::Json: {
      json j = json::array();
      for (const auto& p : inv) j.push_back({{"pairs", p.pairs}, {"sign", involution_sign(p)}});
      c.out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      c.out << "involution,sign\n";
      for (const auto& p : inv) c.out << involution_str(p) << "," << involution_sign(p) << "\n";
      break;
    case Format::Latex:
      c.out << "\\begin{tabular}{lr}\n$p$ & $s(p)$ \\\\\n\\hline\n";
      for (const auto& p : inv) c.out << "$" << involution_str(p) << "$ & $" << (involution_sign(p) > 0 ? "+" : "-") << "$ \\\\\n";
      c.out << "\\end{tabular}\n";
      break;
    case Format::Text:
      for (const auto& p : inv) c.out << (involution_sign(p) > 0 ? "+ " : "- ") << involution_str(p) << "\n";
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for affine vertex algebras at collapsing levels", "klcalc"};
  Context c{{}, out, err};
  std::string format, config, cap;
  std::optional<std::uint64_t> seed;

  app.add_option("--algebra", c.cfg.algebra, "Algebra: D6, D:6, so(12), sl(3), E7, ...");
  app.add_option("--level", c.cfg.level, "Level k as an exact rational p/q");
  app.add_option("--format", format, "json, text, latex or csv");
  app.add_option("--cap", cap, "Maximum graded component size (>= 1000)");
  app.add_option("--seed", seed, "Seed for randomized sweeps");
  app.add_option("--config", config, "Key-value config file (format, cap, seed)");
  app.add_option("--family", c.family, "singular-verify family: w1, w3, vn, wn, theta-w1, theta-wn, vE7");
  app.add_option("--n", c.n, "Power n for vn / wn");
  app.add_option("--ell", c.ell, "Half the size of the involution index set");
  auto* count_opt = app.add_option("--count", c.count, "Random triples for bracket-audit, bound for kl families");
  count_opt->expected(0, 1);
  app.add_flag("--audit", c.audit, "collapse: audit every Lie-algebra row of the collapsing table");
  app.add_flag("--brackets", c.brackets, "roots: include the bracket table");
  app.add_option("--quotient", c.quotient, "kl: simple, intermediate or vbar");
  app.add_option("--weight", c.weight, "Weight: [1,1/2,0], 1,1/2,0, 0 or sums like 2w1+w3");
  app.add_option("--degree", c.degree, "Conformal degree for singular-search");

  const std::vector<std::pair<std::string, std::function<int(Context&)>>> verbs = {
      {"roots", verb_roots},           {"bracket-audit", verb_bracket_audit},
      {"singular-verify", verb_singular_verify}, {"singular-search", verb_singular_search},
      {"collapse", verb_collapse},     {"kl", verb_kl},
      {"weights", verb_weights},       {"involutions", verb_involutions}};
  for (const auto& [name, fn] : verbs) app.add_subcommand(name)->fallthrough();
  app.require_subcommand(1);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      std::none_of(verbs.begin(), verbs.end(), [&](const auto& v) { return v.first == args.front(); })) {
    err << "error: unknown verb '" << args.front() << "'\n";
    return kUsageError;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    c.cfg.verb = app.get_subcommands().front()->get_name();
    c.count_flag = count_opt->count() > 0 && !c.count;
    if (!config.empty()) apply_config_file(config, c.cfg);
    if (!cap.empty()) c.cfg.cap = parse_cap(cap);
    else if (const char* env = std::getenv("KLCALC_CAP")) c.cfg.cap = parse_cap(env);
    if (!format.empty()) c.cfg.format = parse_format(format);
    if (seed) c.cfg.seed = *seed;
    if (c.cfg.level) parse_level(*c.cfg.level);
    for (const auto& [name, fn] : verbs)
      if (name == c.cfg.verb) return fn(c);
    throw UsageError("unknown verb");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace klcalc::cli
