#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <random>
#include <sstream>

#include "oreaut/eigengroup.hpp"
#include "oreaut/errors.hpp"
#include "oreaut/lambda_aut.hpp"
#include "oreaut/modules.hpp"
#include "oreaut/ore.hpp"
#include "oreaut/parse.hpp"

namespace oreaut::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {"eigengroup", "eigenform",     "centre",   "aut-group",     "isomorphic",
                                            "simple-module", "spectrum", "inverse-group", "oracle"};

void add_options(CLI::App& sub, JobConfig& c) {
  sub.add_option("--field", c.field, "coefficient field, e.g. GF(3), GF(2^3), GF(9, mod=2,2,1)");
  sub.add_option("--f", c.f, "polynomial f, e.g. \"x^3 + 2*x + 1\" or \"[1,2,0,1]\"");
  sub.add_option("--g", c.g, "second polynomial (isomorphic)");
  sub.add_option("--nu", c.nu, "field element ν (inverse-group)");
  sub.add_option("--xi", c.xi, "field element ξ with x^p - ξ in the maximal ideal (simple-module)");
  sub.add_option("--rho", c.rho, "value ρ of z2 = y^p - c(x)y on the module (simple-module)");
  sub.add_option("--pi", c.pi, "irreducible factor p_i of f (simple-module on V(f))");
  sub.add_option("--q", c.q, "monic irreducible q over F_i = K[x]/(p_i), in the variable y (or x)");
  sub.add_option("--shape", c.shape, "subgroup shape: trivial, cyclic, shift, shift-cyclic, torus, full");
  sub.add_option("--V", c.V, "F_p-basis of V, elements separated by ';'");
  sub.add_option("--witness", c.witness, "shift witness: off-image or two-cosets");
  sub.add_option("--n", c.n, "eigenorder n (inverse-group)");
  sub.add_option("--degree-bound", c.degree_bound, "degree bound for shift generators and central points");
  sub.add_option("--samples", c.samples, "number of random homomorphism samples (aut-group)");
  sub.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  sub.add_option("--seed", c.seed, "seed for sampled checks");
  sub.add_option("--cap", c.cap, "field-size / enumeration cap (default: $OREAUT_CAP or 2^20)");
  sub.add_flag("--closure", c.closure, "report the group over the splitting field instead of K");
}

json elt(const Field& F, Elem a) {
  if (F.m() == 1) return a;
  json arr = json::array();
  for (unsigned c : F.coords(a)) arr.push_back(c);
  return arr;
}

json elts(const Field& F, const std::vector<Elem>& v) {
  json arr = json::array();
  for (Elem a : v) arr.push_back(elt(F, a));
  return arr;
}

json matrix_json(const Field& F, const Matrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows; ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols; ++j) r.push_back(elt(F, M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

const char* kind_name(const EigengroupDesc& d) {
  if (d.kind == GroupKind::Full) return "full";
  if (d.kind == GroupKind::Torus) return "torus";
  return "finite";
}

void put_group(json& j, const EigengroupDesc& d) {
  const Field& F = *d.field;
  j["kind"] = kind_name(d);
  j["nu"] = elt(F, d.nu);
  j["n"] = d.infinite() ? json("infinite") : json(d.n);
  j["lambda_n"] = elt(F, d.lambda_n);
  j["V_basis"] = elts(F, d.V_basis);
  if (auto o = d.order())
    j["order"] = *o;
  else
    j["order"] = "infinite";
  j["presentation"] = d.presentation();
}

json group_json(const EigengroupDesc& d) {
  json j;
  j["field"] = d.field->name();
  put_group(j, d);
  return j;
}

Poly need_poly(const FieldPtr& K, const std::string& text, const char* flag) {
  require(!text.empty(), std::string(flag) + " is required");
  return parse_poly(K, text);
}

Elem element_or_zero(const Field& F, const std::string& text) { return text.empty() ? 0 : parse_element(F, text); }

std::vector<Elem> parse_elements(const Field& F, const std::string& text) {
  std::vector<Elem> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_element(F, item));
  return out;
}

SubgroupSpec::Shape parse_shape(const std::string& s) {
  using S = SubgroupSpec::Shape;
  if (s == "trivial") return S::Trivial;
  if (s == "cyclic") return S::Cyclic;
  if (s == "shift") return S::Shift;
  if (s == "shift-cyclic") return S::ShiftCyclic;
  if (s == "torus") return S::Torus;
  if (s == "full") return S::Full;
  throw DomainError("unsupported subgroup shape '" + s + "'");
}

json cmd_eigengroup(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  if (c.closure) {
    ClosedResult r = eigengroup_closed(f);
    j["closure_field"] = r.group.field->name();
    put_group(j, r.group);
  } else {
    put_group(j, eigengroup(f));
  }
  return j;
}

json cmd_eigenform(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  ClosedResult r = eigengroup_closed(f);
  const Eigenform& e = r.form;
  const Field& L = *r.group.field;
  json j;
  j["field"] = K->name();
  j["closure_field"] = L.name();
  j["f"] = format_poly(f);
  j["case"] = form_case_name(e.kase);
  if (e.kase != FormCase::None) {
    j["i"] = e.i;
    j["nu"] = elt(L, e.nu);
    j["n"] = e.n;
    j["g"] = e.g.field() ? format_poly(e.g) : "1";
    j["s"] = e.s;
    j["V_basis"] = elts(L, e.V_basis);
    if (e.kase == FormCase::SingleRoot) j["d"] = e.d;
    auto ex = expand(e);
    j["expands_to_f"] = ex && *ex == r.f_L;
    j["eigenvalue_law"] = eigenvalue_law_holds(e, r.f_L);
  }
  return j;
}

json cmd_centre(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  OreAlgebra A(f);
  CentreGens g = centre_generators(A);
  const unsigned p = K->p();
  bool delta_ok = delta_power(f, Poly::x(K), p) == g.c * f;
  ensure(delta_ok, "δ^p(x) differs from (δ^{p-2}(f))'·f");
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  j["z1"] = A.format(g.z1);
  j["z2"] = A.format(g.z2);
  j["c"] = format_poly(g.c);
  j["delta_p_check"] = delta_ok;
  j["free_basis"] = "x^i y^j, 0 <= i, j < " + std::to_string(p);
  return j;
}

json cmd_aut_group(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  const Field& F = *K;
  AutGroupDesc G = aut_group(f);
  OreAlgebra A(f);
  json gens = json::array();
  for (const LambdaAut& s : aut_generators(G, c.degree_bound)) {
    ensure(is_homomorphism(A, s), "generator fails the homomorphism check");
    gens.push_back({{"lambda", elt(F, s.lambda)}, {"mu", elt(F, s.mu)}, {"p", format_poly(s.p)}});
  }
  std::vector<AffineAut> members = group_elements(G.eigen);
  std::mt19937_64 rng(c.seed);
  unsigned agree = 0;
  for (unsigned t = 0; t < c.samples; ++t) {
    LambdaAut s;
    s.lambda = static_cast<Elem>(1 + rng() % (F.size() - 1));
    s.mu = static_cast<Elem>(rng() % F.size());
    std::vector<Elem> pc(c.degree_bound + 1);
    for (Elem& e : pc) e = static_cast<Elem>(rng() % F.size());
    s.p = Poly(K, pc);
    bool member = std::binary_search(members.begin(), members.end(), AffineAut{s.lambda, s.mu});
    ensure(is_homomorphism(A, s) == member, "sampled map disagrees with G_f membership");
    ++agree;
  }
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  j["shift_part"] = G.shift_part;
  j["eigen"] = group_json(G.eigen);
  j["degree_bound"] = c.degree_bound;
  j["generators"] = gens;
  j["samples_checked"] = agree;
  j["seed"] = c.seed;
  return j;
}

json cmd_isomorphic(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  Poly g = need_poly(K, c.g, "--g");
  auto w = are_isomorphic(f, g);
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  j["g"] = format_poly(g);
  j["isomorphic"] = w.has_value();
  if (w) {
    j["lambda"] = elt(*K, w->lambda);
    j["alpha"] = elt(*K, w->alpha);
    j["beta"] = elt(*K, w->beta);
    j["y_scale"] = elt(*K, w->y_scale);
    j["y_exponent"] = w->y_exponent;
  }
  return j;
}

json cmd_simple_module(const JobConfig& c, const FieldPtr& K) {
  Poly f = need_poly(K, c.f, "--f");
  SimpleModule M;
  json j;
  if (!c.pi.empty()) {
    Poly pi = parse_poly(K, c.pi);
    FieldPtr Fi = residue_field(pi);
    std::string qt = c.q;
    std::replace(qt.begin(), qt.end(), 'y', 'x');
    M = simple_module_on_f(f, pi, need_poly(Fi, qt, "--q"));
  } else {
    require(!c.xi.empty() && !c.rho.empty(), "off-f modules need --xi and --rho (or give --pi and --q)");
    M = simple_module_off_f(f, parse_element(*K, c.xi), parse_element(*K, c.rho));
    auto [X2, Y2] = rederive_off_f(f, M.xi, M.rho);
    ensure(X2 == M.X && Y2 == M.Y, "action table disagrees with the ideal-reduction derivation");
  }
  const Field& F = *M.field;
  const bool on = M.kind == SimpleModule::Kind::OnF;
  j["kind"] = on ? "on_f" : "off_f";
  j["field"] = F.name();
  j["f"] = format_poly(f);
  j["dim"] = M.dim;
  j["X"] = matrix_json(F, M.X);
  j["Y"] = matrix_json(F, M.Y);
  if (on) {
    j["p_i"] = format_poly(M.p_i);
    j["q"] = format_poly(M.q);
    j["theta"] = elt(F, M.theta);
  } else {
    j["xi"] = elt(F, M.xi);
    j["rho"] = elt(F, M.rho);
    j["rho_convention"] = M.rho_convention;
    j["rederived_agrees"] = true;
  }
  j["relation"] = relation_holds(M, f);
  j["central_character"] = central_character_holds(M, f);
  j["span_dim"] = word_span_dim(M);
  j["burnside_full"] = burnside_span_full(M);
  return j;
}

json cmd_spectrum(const JobConfig& c, const FieldPtr& K, std::uint64_t cap) {
  Poly f = need_poly(K, c.f, "--f");
  SpectrumDesc S = spectrum(f, c.degree_bound, cap);
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  json mp = json::array();
  for (const auto& m : S.min_primes) mp.push_back({{"poly", format_poly(m.poly)}, {"mult", m.mult}});
  j["min_primes"] = mp;
  json ht = json::array();
  for (const Poly& p : S.ht1) ht.push_back(format_poly(p));
  j["ht1"] = ht;
  j["spec_c"] = S.spec_c;
  json pts = json::array();
  for (const auto& pt : S.max_off_f)
    pts.push_back({{"field", pt.field->name()}, {"xi", elt(*pt.field, pt.xi)}, {"rho", elt(*pt.field, pt.rho)}, {"degree", pt.degree}});
  j["degree_bound"] = c.degree_bound;
  j["max_off_f"] = pts;
  j["krull_dim"] = S.krull_dim;
  j["global_dim"] = S.global_dim;
  return j;
}

json cmd_inverse_group(const JobConfig& c, const FieldPtr& K) {
  SubgroupSpec H;
  H.field = K;
  H.shape = parse_shape(c.shape);
  H.n = c.n;
  H.nu = element_or_zero(*K, c.nu);
  H.V_basis = parse_elements(*K, c.V);
  if (c.witness == "two-cosets")
    H.witness = SubgroupSpec::ShiftWitness::TwoCosets;
  else
    require(c.witness == "off-image", "--witness must be off-image or two-cosets");
  Poly fH = inverse_eigengroup(H);
  EigengroupDesc want = subgroup_desc(H);
  EigengroupDesc got = eigengroup(fH);
  bool ok = group_elements(want) == group_elements(got);
  ensure(ok, "eigengroup of the witness differs from H");
  json j;
  j["field"] = K->name();
  j["shape"] = c.shape;
  j["f_H"] = format_poly(fH);
  j["group"] = group_json(got);
  j["round_trip"] = ok;
  return j;
}

struct OracleMismatch {
  json body;
};

json cmd_oracle(const JobConfig& c, const FieldPtr& K, std::uint64_t cap) {
  Poly f = need_poly(K, c.f, "--f");
  auto structured = group_elements(eigengroup(f));
  auto brute = eigengroup_bruteforce(f, cap);
  json j;
  j["field"] = K->name();
  j["f"] = format_poly(f);
  j["structured_order"] = structured.size();
  j["bruteforce_order"] = brute.size();
  j["match"] = structured == brute;
  if (structured != brute) throw OracleMismatch{j};
  return j;
}

std::string render_text(const json& j, const std::string& indent = "") {
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += indent + it.key() + ": ";
    if (it->is_string())
      out += it->get<std::string>() + "\n";
    else if (it->is_object())
      out += "\n" + render_text(*it, indent + "  ");
    else
      out += it->dump() + "\n";
  }
  return out;
}

std::string emit(const JobConfig& c, const json& j) {
  if (c.format == "text") return render_text(j);
  return j.dump(2) + "\n";
}

}  // namespace

std::uint64_t default_cap() {
  if (const char* env = std::getenv("OREAUT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 20;
}

std::vector<std::string> JobConfig::to_args() const {
  const JobConfig d;
  std::vector<std::string> a{command};
  auto str = [&](const char* flag, const std::string& v, const std::string& def) {
    if (v != def) a.insert(a.end(), {flag, v});
  };
  auto num = [&](const char* flag, std::uint64_t v, std::uint64_t def) {
    if (v != def) a.insert(a.end(), {flag, std::to_string(v)});
  };
  str("--field", field, d.field);
  str("--f", f, d.f);
  str("--g", g, d.g);
  str("--nu", nu, d.nu);
  str("--xi", xi, d.xi);
  str("--rho", rho, d.rho);
  str("--pi", pi, d.pi);
  str("--q", q, d.q);
  str("--shape", shape, d.shape);
  str("--V", V, d.V);
  str("--witness", witness, d.witness);
  num("--n", n, d.n);
  num("--degree-bound", degree_bound, d.degree_bound);
  num("--samples", samples, d.samples);
  str("--format", format, d.format);
  num("--seed", seed, d.seed);
  num("--cap", cap, d.cap);
  if (closure) a.push_back("--closure");
  return a;
}

namespace {

struct Parser {
  CLI::App app{"Eigengroups, automorphisms and simple modules of Ore extensions K[x][y; f d/dx]", "oreaut"};
  JobConfig cfg;
  Parser() {
    app.require_subcommand(1);
    for (const std::string& name : kCommands) add_options(*app.add_subcommand(name, describe(name)), cfg);
  }
  static std::string describe(const std::string& name) {
    if (name == "eigengroup") return "G_f over K (or over the splitting field with --closure)";
    if (name == "eigenform") return "eigenform of f over its splitting field";
    if (name == "centre") return "generators x^p and y^p - c(x)y of the centre of Λ(f)";
    if (name == "aut-group") return "Aut_K Λ(f) = S(K) ⋊ G_f(K) with bounded shift generators";
    if (name == "isomorphic") return "decide Λ(f) ≅ Λ(g) and print a witness";
    if (name == "simple-module") return "simple module from (ξ, ρ) off V(f) or (p_i, q) on V(f)";
    if (name == "spectrum") return "minimal primes, Spec_c and central maximal ideals off V(f^p)";
    if (name == "inverse-group") return "a polynomial whose eigengroup is the given subgroup";
    return "compare the structured eigengroup with exhaustive enumeration";
  }
  void parse(const std::vector<std::string>& args) {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    for (CLI::App* s : app.get_subcommands()) cfg.command = s->get_name();
  }
};

}  // namespace

JobConfig parse_args(const std::vector<std::string>& args) {
  Parser p;
  p.parse(args);
  return p.cfg;
}

RunResult run(const JobConfig& c) {
  RunResult r;
  try {
    const std::uint64_t cap = c.cap ? c.cap : default_cap();
    FieldLimits lim = field_limits();
    lim.max_size = cap;
    set_field_limits(lim);
    FieldPtr K = parse_field(c.field);
    json j;
    if (c.command == "eigengroup") j = cmd_eigengroup(c, K);
    else if (c.command == "eigenform") j = cmd_eigenform(c, K);
    else if (c.command == "centre") j = cmd_centre(c, K);
    else if (c.command == "aut-group") j = cmd_aut_group(c, K);
    else if (c.command == "isomorphic") j = cmd_isomorphic(c, K);
    else if (c.command == "simple-module") j = cmd_simple_module(c, K);
    else if (c.command == "spectrum") j = cmd_spectrum(c, K, cap);
    else if (c.command == "inverse-group") j = cmd_inverse_group(c, K);
    else if (c.command == "oracle") j = cmd_oracle(c, K, cap);
    else throw DomainError("unknown command '" + c.command + "'");
    r.out = emit(c, j);
  } catch (const OracleMismatch& m) {
    r.out = emit(c, m.body);
    r.err = "internal error: structured eigengroup differs from exhaustive enumeration\n";
    r.exit_code = 2;
  } catch (const ParseError& e) {
    r.err = std::string("parse error: ") + e.what() + "\n";
    r.exit_code = 1;
  } catch (const DomainError& e) {
    r.err = std::string("error: ") + e.what() + "\n";
    r.exit_code = 1;
  } catch (const InternalError& e) {
    r.err = std::string("internal error: ") + e.what() + "\n";
    r.exit_code = 2;
  } catch (const std::exception& e) {
    r.err = std::string("internal error: ") + e.what() + "\n";
    r.exit_code = 2;
  }
  return r;
}

RunResult run_args(const std::vector<std::string>& args) {
  Parser p;
  try {
    p.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    RunResult r;
    r.exit_code = p.app.exit(e, out, err) == 0 ? 0 : 1;
    r.out = out.str();
    r.err = err.str();
    return r;
  }
  return run(p.cfg);
}

}  // namespace oreaut::cli
