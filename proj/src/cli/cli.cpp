#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "kirwanlab/bdc.hpp"
#include "kirwanlab/diagonal.hpp"
#include "kirwanlab/error.hpp"
#include "kirwanlab/io.hpp"
#include "kirwanlab/kalkman.hpp"
#include "kirwanlab/traintrack.hpp"
#include "paper_check.hpp"

namespace kirwanlab::cli {

namespace {

using io::json;

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KIRWANLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw ValidationError("KIRWANLAB_THREADS must be a positive integer");
    n = std::min<unsigned long>(n, static_cast<unsigned long>(v));
  }
  return n;
}

std::string rational_text(const Rational& r, int decimals) {
  return decimals < 0 ? to_string(r) : to_decimal(r, decimals);
}

json matrix_json(const ExactMatrix& m, int decimals = -1) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_text(m(i, j), decimals));
    rows.push_back(std::move(row));
  }
  return rows;
}

json monomials_json(const std::vector<Monomial>& basis, const ManifoldSpec& spec) {
  json out = json::array();
  for (const auto& m : basis) out.push_back(format_monomial(m, spec.variable_names()));
  return out;
}

json chamber_json(const Chamber& c) {
  return {{"index", c.index}, {"lower", to_string(c.lower)}, {"upper", to_string(c.upper)},
          {"representative", to_string(c.representative)}};
}

/// "all" or a comma-separated list of 1-based chamber indices.
std::vector<Chamber> select_chambers(const ManifoldSpec& spec, const std::string& selector) {
  const auto all = chambers(spec);
  if (selector == "all") return all;
  std::vector<Chamber> out;
  std::stringstream ss(selector);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw ParseError("chamber selector '" + item + "' is not an index");
    if (idx < 1 || idx > all.size())
      throw ValidationError("chamber " + item + " out of range 1.." + std::to_string(all.size()));
    out.push_back(all[idx - 1]);
  }
  if (out.empty()) throw ParseError("empty chamber selector");
  return out;
}

/// Applies "--basis DEG=m1,m2,..." overrides to the standard bases.
BasisSet bases_from(const ManifoldSpec& spec, const std::vector<std::string>& overrides) {
  BasisSet bases = BasisSet::standard(spec);
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ParseError("basis override '" + o + "' must look like DEG=m1,m2,...");
    std::uint32_t degree = 0;
    try {
      std::size_t pos = 0;
      degree = static_cast<std::uint32_t>(std::stoul(o.substr(0, eq), &pos));
      if (pos != eq) throw std::invalid_argument("degree");
    } catch (const std::exception&) {
      throw ParseError("basis override '" + o + "' has no valid degree");
    }
    std::vector<Monomial> basis;
    std::stringstream ss(o.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ',');) basis.push_back(parse_monomial(item, spec.variable_names()));
    bases = bases.with(spec, degree, std::move(basis));
  }
  return bases;
}

Polynomial doubled_class(const json& j, const DoubledRing& ring, const std::string& where) {
  if (j.is_object() && j.contains("expression")) {
    if (!j["expression"].is_string()) throw ParseError(where + ": 'expression' must be a string");
    return ring.parse(j["expression"].get<std::string>());
  }
  if (j.is_object() && j.contains("terms"))
    return normal_form(io::polynomial_from_json(j["terms"], ring.nvars(), where + ".terms"), ring.relations());
  throw ParseError(where + ": expected an object with 'expression' or 'terms'");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string spec_path;
  std::string alpha;
  std::string c;
  std::string chamber = "all";
  std::string class_path;
  std::string format = "csv";
  std::string table = "both";
  std::vector<std::string> basis;
  int decimals = -1;
  unsigned q = 0;
  int truncate = -1;
  std::string spec_m, spec_n, lm1, lmu, ln1, lnu, out_one, out_u;
  std::string track_path;
  std::string out_path;
};

int cmd_ring(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  json rels = json::array();
  for (const auto& r : spec.relations().relations()) rels.push_back(spec.format(r.polynomial()));
  json bases = json::object();
  const BasisSet standard = BasisSet::standard(spec);
  for (const auto& [q, basis] : standard.all()) bases[std::to_string(q)] = monomials_json(basis, spec);
  emit(out, {{"variables", spec.variable_names()},
             {"relations", rels},
             {"m", spec.m()},
             {"top_degree", spec.top_degree()},
             {"bases", bases}});
  return 0;
}

int cmd_fixed_points(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  json pts = json::array();
  for (const auto& p : fixed_points(spec)) {
    json per = json::array();
    for (const auto& v : p.per_factor_mu) per.push_back(to_string(v));
    pts.push_back({{"choice", p.choice},
                   {"mu", to_string(p.mu)},
                   {"weight_product", to_string(p.weight_product)},
                   {"per_factor_mu", per}});
  }
  emit(out, pts);
  return 0;
}

int cmd_chambers(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  json cv = json::array();
  for (const auto& c : critical_values(spec)) cv.push_back(to_string(c));
  json ch = json::array();
  for (const auto& c : chambers(spec)) ch.push_back(chamber_json(c));
  emit(out, {{"critical_values", cv}, {"chambers", ch}});
  return 0;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const Polynomial alpha = spec.parse(o.alpha);
  const Rational c = parse_rational(o.c);
  emit(out, {{"c", to_string(c)}, {"value", to_string(integrate(alpha, c, spec))}});
  return 0;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const BasisSet bases = bases_from(spec, o.basis);
  const ContributionTable t1 = contribution_table(spec, bases.at(spec.top_degree()));
  const TableStyle style{o.decimals};
  const bool pretty = o.format == "pretty";
  if (o.table == "t1" || o.table == "both") {
    pretty ? write_pretty(out, t1, spec, style) : write_csv(out, t1, spec, style);
  }
  if (o.table == "both") out << '\n';
  if (o.table == "t2" || o.table == "both") {
    const SuffixTable t2 = suffix_table(t1, chambers(spec));
    pretty ? write_pretty(out, t2, spec, style) : write_csv(out, t2, spec, style);
  }
  return 0;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const BasisSet bases = bases_from(spec, o.basis);
  const KalkmanIntegrator integrator(spec);
  json list = json::array();
  for (const auto& c : select_chambers(spec, o.chamber)) {
    const PairingMatrix pm = pairing_matrix(integrator, o.q, c, bases);
    list.push_back({{"q", pm.q},
                    {"chamber", chamber_json(c)},
                    {"rows", monomials_json(pm.row_basis, spec)},
                    {"cols", monomials_json(pm.col_basis, spec)},
                    {"matrix", matrix_json(pm.matrix, o.decimals)}});
  }
  emit(out, list);
  return 0;
}

int cmd_bdc(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const BasisSet bases = bases_from(spec, o.basis);
  const auto selected = select_chambers(spec, o.chamber);
  const BdcFamily family = global_bdc(spec, bases, selected, thread_cap());

  json degrees = json::array();
  for (const auto& f : family.degrees) {
    json null = json::array();
    for (const auto& n : f.space.nullspace_basis) null.push_back(matrix_json(coefficients_from_unknowns(n, f.rows, f.cols)));
    degrees.push_back({{"q", f.q},
                       {"dimension", f.space.dimension()},
                       {"particular", matrix_json(coefficients_from_unknowns(f.space.particular, f.rows, f.cols))},
                       {"nullspace", null}});
  }
  json indices = json::array();
  for (const auto& c : selected) indices.push_back(c.index);
  const BdcClass rep = family.representative();
  const json rep_json = io::to_json(rep, spec);
  if (!o.out_path.empty()) io::write_json(o.out_path, rep_json);
  emit(out, {{"chambers", indices},
             {"dimension", family.dimension()},
             {"degrees", degrees},
             {"representative", rep_json},
             {"class", format_class(rep, spec)}});
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const BdcClass beta = io::class_from_json(io::read_json(o.class_path), spec);
  const KalkmanIntegrator integrator(spec);
  json results = json::object();
  bool all = true;
  for (const auto& c : select_chambers(spec, o.chamber)) {
    const bool ok = is_bdc(beta, integrator, c);
    results[std::to_string(c.index)] = ok;
    all = all && ok;
  }
  emit(out, {{"chambers", results}, {"is_bdc", all}});
  return all ? 0 : 1;
}

int cmd_rinv(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = io::load_spec(o.spec_path);
  const BdcClass beta = io::class_from_json(io::read_json(o.class_path), spec);
  const Polynomial alpha = spec.parse(o.alpha);
  const auto selected = select_chambers(spec, o.chamber);
  if (selected.size() != 1) throw ValidationError("rinv needs exactly one chamber");
  const Polynomial r = apply_right_inverse(beta, alpha, spec, selected.front());
  emit(out, {{"chamber", selected.front().index}, {"result", spec.format(r)}, {"terms", io::to_json(r)}});
  return 0;
}

int cmd_diagonal_cp1(const Options& o, std::ostream& out) {
  const PolyMatrix z = graham_z_matrix();
  json zj = json::array();
  for (std::size_t i = 0; i < z.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < z.cols(); ++j) row.push_back(format_polynomial(z(i, j), bundle::base_names()));
    zj.push_back(row);
  }
  auto show = [&](const TensorClass& x) { return format(o.truncate < 0 ? x : truncate(x, o.truncate)); };
  json j = {{"Z", zj},
            {"diagonal", show(graham_diagonal())},
            {"shriek",
             {{"1", show(shriek(BundleClass::one()))},
              {"u", show(shriek(BundleClass::u()))},
              {"t1", show(shriek(BundleClass::base(bundle::t1())))},
              {"t2", show(shriek(BundleClass::base(bundle::t2())))}}}};
  if (o.truncate >= 0) j["truncate"] = o.truncate;
  emit(out, j);
  return 0;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const DoubledRing m_ring(io::load_spec(o.spec_m));
  const DoubledRing n_ring(io::load_spec(o.spec_n));
  const ProductLambda lambda = compose_product_lambda(
      m_ring, doubled_class(io::read_json(o.lm1), m_ring, "lm1"), doubled_class(io::read_json(o.lmu), m_ring, "lmu"),
      n_ring, doubled_class(io::read_json(o.ln1), n_ring, "ln1"), doubled_class(io::read_json(o.lnu), n_ring, "lnu"));
  const DoubledRing ring(lambda.spec);
  auto class_json = [&](const Polynomial& p) {
    return json{{"spec", io::to_json(lambda.spec)},
                {"variables", ring.names()},
                {"expression", ring.format(p)},
                {"terms", io::to_json(p)}};
  };
  const json one = class_json(lambda.lambda_one);
  const json u = class_json(lambda.lambda_u);
  if (!o.out_one.empty()) io::write_json(o.out_one, one);
  if (!o.out_u.empty()) io::write_json(o.out_u, u);
  emit(out, {{"lambda_one", one["expression"]}, {"lambda_u", u["expression"]}});
  return 0;
}

int cmd_traintrack_verify(const Options& o, std::ostream& out) {
  const io::WeightedTrack wt = io::track_from_json(io::read_json(o.track_path));
  // Missing or non-positive weights still raise; a conservation failure is a verdict.
  if (!validate_weighting(wt.track, wt.weights)) {
    emit(out, {{"weighting", false}, {"balanced", false}});
    return 1;
  }
  const auto [heads, tails] = boundary_balance(wt.track, wt.weights);
  const bool balanced = heads == tails;
  emit(out, {{"weighting", true}, {"boundary_heads", to_string(heads)}, {"boundary_tails", to_string(tails)},
             {"balanced", balanced}});
  return balanced ? 0 : 1;
}

int cmd_paper_check(std::ostream& out) {
  out << "# (CP^1)^3, weights {0,1},{0,2},{0,4}; degree-4 basis t^2, x0^2, x0x1, x0x2, x1^2, x1x2, x2^2\n"
         "# conventions: A^q is d_q x d_(2m-2-q), so A^4 and B^4 are columns where the published\n"
         "# tables show rows (A^4 = row^t, B^4 = published^t). Degree-2 data is published with\n"
         "# x_i -> -mu_i at fixed points; it is compared through D = diag(1,-1,-1,-1): A -> D A D, B -> D B D.\n";
  bool all = true;
  for (const auto& r : run_paper_check()) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "paper-check: all checks match\n" : "paper-check: mismatches found\n");
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant cohomology and biinvariant diagonal classes of circle actions on products of "
               "projective spaces"};
  app.name("kirwanlab");
  app.require_subcommand(1);
  Options o;

  auto spec_opt = [&](CLI::App* c) { c->add_option("--spec", o.spec_path, "manifold spec JSON")->required(); };
  auto basis_opt = [&](CLI::App* c) {
    c->add_option("--basis", o.basis, "custom basis DEG=mono,mono,... (repeatable)");
  };
  auto chamber_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--chamber", o.chamber, "1-based chamber index, comma list, or 'all'");
    if (required) opt->required();
  };
  auto decimal_opt = [&](CLI::App* c) {
    c->add_option("--decimal", o.decimals, "render N decimal digits instead of exact p/q")->check(CLI::NonNegativeNumber);
  };

  auto* ring = app.add_subcommand("ring", "relations and standard bases of the equivariant ring");
  spec_opt(ring);
  auto* fps = app.add_subcommand("fixed-points", "fixed points, moment values and weight products");
  spec_opt(fps);
  auto* chs = app.add_subcommand("chambers", "critical values and chambers of regular values");
  spec_opt(chs);

  auto* integ = app.add_subcommand("integrate", "integral of a degree 2m-2 class over the quotient at level c");
  spec_opt(integ);
  integ->add_option("--alpha", o.alpha, "class, e.g. 't*x0 + x1^2'")->required();
  integ->add_option("--c", o.c, "regular value p/q")->required();

  auto* tables = app.add_subcommand("tables", "fixed-point contribution table T1 and chamber table T2");
  spec_opt(tables);
  basis_opt(tables);
  decimal_opt(tables);
  tables->add_option("--format", o.format)->check(CLI::IsMember({"csv", "pretty"}));
  tables->add_option("--table", o.table)->check(CLI::IsMember({"t1", "t2", "both"}));

  auto* pairing = app.add_subcommand(
      "pairing", "pairing matrices A^q (rows: degree q basis, columns: degree 2m-2-q basis)");
  spec_opt(pairing);
  basis_opt(pairing);
  decimal_opt(pairing);
  chamber_opt(pairing, false);
  pairing->add_option("--q", o.q, "even degree")->required();

  auto* bdc = app.add_subcommand("bdc", "affine family of biinvariant diagonal classes over the chosen chambers");
  spec_opt(bdc);
  basis_opt(bdc);
  chamber_opt(bdc, false);
  bdc->add_option("--out", o.out_path, "write the representative class JSON here");

  auto* verify = app.add_subcommand("verify", "check a class against the pairing matrices (exit 1 if not)");
  spec_opt(verify);
  chamber_opt(verify, false);
  verify->add_option("--class", o.class_path, "class JSON")->required();

  auto* rinv = app.add_subcommand("rinv", "apply the right inverse of the Kirwan map induced by a class");
  spec_opt(rinv);
  chamber_opt(rinv, true);
  rinv->add_option("--class", o.class_path, "class JSON")->required();
  rinv->add_option("--alpha", o.alpha, "class of even degree")->required();

  auto* diag = app.add_subcommand("diagonal-cp1", "equivariant diagonal of CP^1 by Graham's method");
  diag->add_option("--truncate", o.truncate, "drop t1, t2 powers above K")->check(CLI::NonNegativeNumber);

  auto* compose = app.add_subcommand("compose", "product formula for lambda(1), lambda(u) on M x N");
  compose->add_option("--spec-m", o.spec_m)->required();
  compose->add_option("--spec-n", o.spec_n)->required();
  compose->add_option("--lm1", o.lm1, "lambda_M(1) class file")->required();
  compose->add_option("--lmu", o.lmu, "lambda_M(u) class file")->required();
  compose->add_option("--ln1", o.ln1, "lambda_N(1) class file")->required();
  compose->add_option("--lnu", o.lnu, "lambda_N(u) class file")->required();
  compose->add_option("--out-one", o.out_one);
  compose->add_option("--out-u", o.out_u);

  auto* track = app.add_subcommand("traintrack", "weighted train tracks");
  track->require_subcommand(1);
  auto* track_verify = track->add_subcommand("verify", "check a weighting and its boundary balance");
  track_verify->add_option("--track", o.track_path, "track JSON")->required();

  auto* paper = app.add_subcommand("paper-check", "reproduce the worked CP^2 and (CP^1)^3 examples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    if (ring->parsed()) return cmd_ring(o, out);
    if (fps->parsed()) return cmd_fixed_points(o, out);
    if (chs->parsed()) return cmd_chambers(o, out);
    if (integ->parsed()) return cmd_integrate(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    if (pairing->parsed()) return cmd_pairing(o, out);
    if (bdc->parsed()) return cmd_bdc(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (rinv->parsed()) return cmd_rinv(o, out);
    if (diag->parsed()) return cmd_diagonal_cp1(o, out);
    if (compose->parsed()) return cmd_compose(o, out);
    if (track_verify->parsed()) return cmd_traintrack_verify(o, out);
    if (paper->parsed()) return cmd_paper_check(out);
  } catch (const Error& e) {
    err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace kirwanlab::cli
