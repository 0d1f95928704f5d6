#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "generators.hpp"
#include "kirwanlab/bdc.hpp"
#include "kirwanlab/error.hpp"
#include "kirwanlab/kalkman.hpp"

namespace testsupport {

namespace {

// Runs `body` per case; a false return or an exception counts as a failure.
PropertyReport run_cases(std::string name, unsigned cases, std::uint64_t seed,
                         const std::function<bool(Rng&, std::string&)>& body) {
  PropertyReport report{std::move(name), 0, 0, {}};
  Rng rng(seed);
  for (unsigned k = 0; k < cases; ++k) {
    std::string why;
    bool ok = false;
    try {
      ok = body(rng, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++report.cases;
    if (!ok) {
      if (report.failures++ == 0) report.first_failure = "case " + std::to_string(k) + ": " + why;
    }
  }
  return report;
}

std::string describe(const ManifoldSpec& spec) {
  std::ostringstream os;
  for (const auto& f : spec.factors()) {
    os << "CP" << f.n << "(";
    for (std::size_t a = 0; a < f.weights.size(); ++a) os << (a ? "," : "") << f.weights[a];
    os << ")";
  }
  return os.str();
}

// Oracle: every fixed point with its moment value, weight product and the
// substitution vector (1, mu_1, ..., mu_k), computed straight from the weights.
struct OraclePoint {
  Rational mu;
  Rational w;
  std::vector<Rational> values;
  std::vector<unsigned> choice;
};

std::vector<OraclePoint> oracle_points(const ManifoldSpec& spec) {
  std::vector<OraclePoint> pts{{0, 1, {Rational(1)}, {}}};
  for (const auto& f : spec.factors()) {
    std::vector<OraclePoint> next;
    for (const auto& p : pts)
      for (std::size_t a = 0; a < f.weights.size(); ++a) {
        OraclePoint q = p;
        const Rational ja(static_cast<long>(f.weights[a]));
        q.mu += ja;
        for (std::size_t b = 0; b < f.weights.size(); ++b)
          if (b != a) q.w *= Rational(static_cast<long>(f.weights[b])) - ja;
        q.values.push_back(ja);
        q.choice.push_back(static_cast<unsigned>(a));
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

std::uint32_t random_even_degree(Rng& rng, std::uint32_t top) {
  return 2 * static_cast<std::uint32_t>(rng.integer(0, top / 2));
}

BdcClass random_member(Rng& rng, const BdcFamily& family) {
  std::vector<Vector> params;
  for (const auto& f : family.degrees) {
    Vector v;
    for (std::size_t k = 0; k < f.space.dimension(); ++k) v.push_back(rng.rational(5, 3));
    params.push_back(std::move(v));
  }
  return family.member(params);
}

// ------------------------------------------------ brute-force pseudoinverse

using Dense = std::vector<std::vector<Rational>>;

// Independent Gauss-Jordan elimination; returns pivot columns and reduces in place.
std::vector<std::size_t> oracle_rref(Dense& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t oracle_rank(Dense m, std::size_t cols) { return oracle_rref(m, cols).size(); }

// A (r x s) times X (s x r, row-major vector) times A.
Dense axa(const Dense& a, const std::vector<Rational>& x) {
  const std::size_t r = a.size(), s = a[0].size();
  Dense out(r, std::vector<Rational>(s));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t l = 0; l < r; ++l) out[i][k] += a[i][j] * x[j * r + l] * a[l][k];
  return out;
}

}  // namespace

PropertyReport full_sum_vanishes(unsigned cases, std::uint64_t seed) {
  return run_cases("full fixed-point sum of a degree 2m-2 class vanishes", cases, seed, [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const Polynomial alpha = random_homogeneous(rng, spec.nvars(), spec.top_degree(), 4);
    Rational oracle = 0;
    for (const auto& p : oracle_points(spec)) oracle += alpha.evaluate(p.values) / p.w;
    const Rational lib = KalkmanIntegrator(spec).full_sum(alpha);
    why = describe(spec) + " alpha=" + spec.format(alpha) + " sum=" + to_string(lib);
    return lib == 0 && oracle == 0;
  });
}

PropertyReport wall_crossing(unsigned cases, std::uint64_t seed) {
  return run_cases("wall-crossing difference equals the wall contributions", cases, seed,
                   [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const auto ch = chambers(spec);
    const Polynomial alpha = random_homogeneous(rng, spec.nvars(), spec.top_degree(), 4);
    const KalkmanIntegrator integrator(spec);
    const auto pts = oracle_points(spec);
    for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
      const Rational wall = ch[k].upper;
      Rational oracle = 0;
      for (const auto& p : pts)
        if (p.mu == wall) oracle += alpha.evaluate(p.values) / p.w;
      const Rational diff = integrator.integrate(alpha, ch[k]) - integrator.integrate(alpha, ch[k + 1]);
      if (diff != oracle) {
        why = describe(spec) + " wall " + to_string(wall) + ": " + to_string(diff) + " vs " + to_string(oracle);
        return false;
      }
    }
    return true;
  });
}

PropertyReport pairing_transpose_symmetry(unsigned cases, std::uint64_t seed) {
  return run_cases("A_c^(2m-2-q) equals (A_c^q)^t", cases, seed, [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const KalkmanIntegrator integrator(spec);
    const BasisSet bases = BasisSet::standard(spec);
    const Chamber c = rng.pick(chambers(spec));
    const std::uint32_t top = spec.top_degree();
    for (std::uint32_t q = 0; q <= top; q += 2) {
      const auto a = pairing_matrix(integrator, q, c, bases).matrix;
      const auto b = pairing_matrix(integrator, top - q, c, bases).matrix;
      if (!(b == a.transpose())) {
        why = describe(spec) + " q=" + std::to_string(q) + " chamber " + std::to_string(c.index);
        return false;
      }
    }
    return true;
  });
}

PropertyReport solver_soundness(unsigned cases, std::uint64_t seed) {
  return run_cases("solver output satisfies A B^t A = A and A N^t A = 0", cases, seed,
                   [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const KalkmanIntegrator integrator(spec);
    const BasisSet bases = BasisSet::standard(spec);
    const std::uint32_t q = random_even_degree(rng, spec.top_degree());
    std::vector<ExactMatrix> as;
    for (const auto& c : chambers(spec)) as.push_back(pairing_matrix(integrator, q, c, bases).matrix);
    const auto space = solve_common_pseudoinverse(as);
    const std::size_t r = as[0].rows(), s = as[0].cols();
    const ExactMatrix p = coefficients_from_unknowns(space.particular, r, s);
    why = describe(spec) + " q=" + std::to_string(q);
    for (const auto& a : as) {
      if (!(a * p.transpose() * a == a)) return false;
      for (const auto& n : space.nullspace_basis)
        if (!is_zero(a * coefficients_from_unknowns(n, r, s).transpose() * a)) return false;
    }
    return true;
  });
}

PropertyReport representative_is_bdc(unsigned cases, std::uint64_t seed) {
  return run_cases("assembled representative passes is_bdc at every chamber", cases, seed,
                   [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const KalkmanIntegrator integrator(spec);
    const BdcFamily family = global_bdc(spec, BasisSet::standard(spec));
    const BdcClass rep = family.representative();
    const BdcClass other = random_member(rng, family);
    for (const auto& c : family.chambers)
      if (!is_bdc(rep, integrator, c) || !is_bdc(other, integrator, c)) {
        why = describe(spec) + " chamber " + std::to_string(c.index);
        return false;
      }
    return true;
  });
}

PropertyReport restriction_is_ring_map(unsigned cases, std::uint64_t seed) {
  return run_cases("restriction to fixed points is a ring homomorphism", cases, seed, [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const auto& rels = spec.relations();
    const Polynomial a = normal_form(random_polynomial(rng, spec.nvars(), 8, 4), rels);
    const Polynomial b = normal_form(random_polynomial(rng, spec.nvars(), 8, 4), rels);
    const Polynomial ab = ring_product(a, b, rels);
    const auto pts = fixed_points(spec);
    const auto oracle = oracle_points(spec);
    if (pts.size() != oracle.size()) return false;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& o = *std::find_if(oracle.begin(), oracle.end(), [&](const OraclePoint& q) { return q.choice == pts[k].choice; });
      const Rational lhs = restrict(ab, pts[k]);
      if (lhs != restrict(a, pts[k]) * restrict(b, pts[k]) || lhs != a.evaluate(o.values) * b.evaluate(o.values)) {
        why = describe(spec) + " a=" + spec.format(a) + " b=" + spec.format(b);
        return false;
      }
    }
    return true;
  });
}

PropertyReport right_inverse_pairing(unsigned cases, std::uint64_t seed) {
  return run_cases("right inverse preserves pairings with every complementary basis class", cases, seed,
                   [](Rng& rng, std::string& why) {
    const ManifoldSpec spec = random_spec(rng);
    const KalkmanIntegrator integrator(spec);
    const BdcFamily family = global_bdc(spec, BasisSet::standard(spec));
    const BdcClass beta = random_member(rng, family);
    const Chamber c = rng.pick(family.chambers);
    const std::uint32_t top = spec.top_degree();
    const std::uint32_t p = random_even_degree(rng, top);
    const Polynomial alpha = normal_form(random_homogeneous(rng, spec.nvars(), p, 3), spec.relations());
    const Polynomial lifted = apply_right_inverse(beta, alpha, integrator, c);
    if (!lifted.is_homogeneous_of(p)) {
      why = "result not of degree " + std::to_string(p);
      return false;
    }
    for (const auto& g : standard_basis(spec.relations(), top - p)) {
      const Polynomial gamma = Polynomial::monomial(g);
      const Rational lhs = integrator.integrate(ring_product(lifted, gamma, spec.relations()), c);
      const Rational rhs = integrator.integrate(ring_product(alpha, gamma, spec.relations()), c);
      if (lhs != rhs) {
        why = describe(spec) + " alpha=" + spec.format(alpha) + " gamma=" + spec.format(gamma);
        return false;
      }
    }
    return true;
  });
}

PropertyReport solver_matches_brute_force(unsigned cases, std::uint64_t seed) {
  return run_cases("solver agrees with a brute-force generic-unknown oracle (2x2, 2x3)", cases, seed,
                   [](Rng& rng, std::string& why) {
    const std::size_t r = 2, s = rng.coin() ? 2 : 3;
    Dense a(r, std::vector<Rational>(s));
    for (auto& row : a)
      for (auto& v : row) v = rng.integer(-3, 3);
    if (rng.integer(0, 2) == 0)  // rank-deficient instance
      for (std::size_t j = 0; j < s; ++j) a[1][j] = a[0][j] * rng.integer(-2, 2);

    // Column u of the oracle system is vec(A E_u A); X = B^t is s x r, row-major.
    const std::size_t n = s * r;
    Dense system(r * s, std::vector<Rational>(n + 1));
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<Rational> e(n);
      e[u] = 1;
      const Dense col = axa(a, e);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < s; ++k) system[i * s + k][u] = col[i][k];
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < s; ++k) system[i * s + k][n] = a[i][k];

    Dense reduced = system;
    const auto pivots = oracle_rref(reduced, n + 1);
    const bool oracle_consistent = pivots.empty() || pivots.back() != n;

    std::vector<Rational> flat;
    for (const auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
    const ExactMatrix am(r, s, flat);
    AffineSolutionSpace space;
    try {
      space = solve_common_pseudoinverse(std::span<const ExactMatrix>(&am, 1));
    } catch (const Inconsistent&) {
      why = "solver inconsistent";
      return !oracle_consistent;
    }
    if (!oracle_consistent) {
      why = "oracle inconsistent";
      return false;
    }
    // Oracle particular: free variables zero.
    std::vector<Rational> particular(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) particular[pivots[k]] = reduced[k][n];
    const std::size_t oracle_dim = n - pivots.size();

    auto satisfies = [&](const std::vector<Rational>& x, bool homogeneous) {
      const Dense got = axa(a, x);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < s; ++k)
          if (got[i][k] != (homogeneous ? Rational(0) : a[i][k])) return false;
      return true;
    };
    why = "dimension " + std::to_string(space.dimension()) + " vs " + std::to_string(oracle_dim);
    if (space.dimension() != oracle_dim) return false;
    if (!satisfies(space.particular, false) || !space.contains(particular)) return false;
    for (const auto& v : space.nullspace_basis)
      if (!satisfies(v, true)) return false;
    // Independence of the returned nullspace basis.
    Dense basis(space.nullspace_basis.begin(), space.nullspace_basis.end());
    return basis.empty() || oracle_rank(basis, n) == basis.size();
  });
}

PropertyReport flow_track_balance(unsigned cases, std::uint64_t seed) {
  return run_cases("train-track boundary balance on flow-generated weightings", cases, seed,
                   [](Rng& rng, std::string& why) {
    const FlowTrack ft = random_flow_track(rng);
    if (!validate_weighting(ft.track, ft.weights)) {
      why = "weighting rejected";
      return false;
    }
    const auto [heads, tails] = boundary_balance(ft.track, ft.weights);
    const auto [rheads, rtails] = boundary_balance(ft.track.reversed(), ft.weights);
    why = "heads " + to_string(heads) + " tails " + to_string(tails) + " flow " + to_string(ft.through_flow);
    return heads == tails && heads == ft.through_flow && rheads == tails && rtails == heads;
  });
}

}  // namespace testsupport
