#include "kirwanlab/bdc.hpp"

#include "kirwanlab/error.hpp"
#include "kirwanlab/parallel.hpp"

namespace kirwanlab {

// ----------------------------------------------------------------- BasisSet

BasisSet BasisSet::standard(const ManifoldSpec& spec) {
  BasisSet b;
  for (std::uint32_t q = 0; q <= spec.top_degree(); q += 2) b.bases_[q] = standard_basis(spec.relations(), q);
  return b;
}

BasisSet BasisSet::with(const ManifoldSpec& spec, std::uint32_t degree, std::vector<Monomial> basis) const {
  if (degree % 2 != 0 || degree > spec.top_degree())
    throw CustomBasisNotABasis("no basis is needed in degree " + std::to_string(degree));
  BasisSet out = *this;
  out.bases_[degree] = validate_basis(spec.relations(), degree, std::move(basis));
  return out;
}

const std::vector<Monomial>& BasisSet::at(std::uint32_t degree) const {
  auto it = bases_.find(degree);
  if (it == bases_.end()) throw BasisMismatch("no basis in degree " + std::to_string(degree));
  return it->second;
}

// ---------------------------------------------------------- pairing matrices

PairingMatrix pairing_matrix(const KalkmanIntegrator& integrator, std::uint32_t q, const Chamber& chamber,
                             const BasisSet& bases) {
  const auto& spec = integrator.spec();
  const std::uint32_t top = spec.top_degree();
  if (q % 2 != 0 || q > top) throw WrongDegree("pairing degree must be even and at most " + std::to_string(top));
  PairingMatrix pm{q, chamber, bases.at(q), bases.at(top - q), {}};
  pm.matrix = ExactMatrix(pm.row_basis.size(), pm.col_basis.size());
  for (std::size_t i = 0; i < pm.row_basis.size(); ++i)
    for (std::size_t j = 0; j < pm.col_basis.size(); ++j) {
      const Polynomial product = ring_product(Polynomial::monomial(pm.row_basis[i]),
                                              Polynomial::monomial(pm.col_basis[j]), spec.relations());
      pm.matrix(i, j) = integrator.integrate(product, chamber);
    }
  return pm;
}

PairingMatrix pairing_matrix(const ManifoldSpec& spec, std::uint32_t q, const Chamber& chamber,
                             const BasisSet& bases) {
  return pairing_matrix(KalkmanIntegrator(spec), q, chamber, bases);
}

// ------------------------------------------------------------ pseudoinverses

AffineSolutionSpace solve_common_pseudoinverse(std::span<const ExactMatrix> matrices) {
  if (matrices.empty()) throw std::invalid_argument("solve_common_pseudoinverse: no matrices");
  const std::size_t r = matrices.front().rows();
  const std::size_t s = matrices.front().cols();
  for (const auto& a : matrices)
    if (a.rows() != r || a.cols() != s) throw std::invalid_argument("solve_common_pseudoinverse: shape mismatch");

  // With a rank factorization A = C R (C: r x k of full column rank, R: k x s
  // of full row rank), A X A = A is equivalent to R X C = I_k: only k^2
  // equations per matrix instead of r s.
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : matrices) {
    const Rref f = rref(a);
    const std::size_t k = f.pivot_columns.size();
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t b = 0; b < k; ++b) {
        // (R X C)(p, b) = sum_{j, l} R(p, j) X(j, l) A(l, pivot_b).
        std::vector<Rational> eq(s * r + 1);
        const std::size_t cb = f.pivot_columns[b];
        for (std::size_t j = 0; j < s; ++j) {
          if (f.reduced(p, j) == 0) continue;
          for (std::size_t l = 0; l < r; ++l)
            if (a(l, cb) != 0) eq[j * r + l] = f.reduced(p, j) * a(l, cb);
        }
        eq[s * r] = p == b ? 1 : 0;
        rows.push_back(std::move(eq));
      }
  }

  ExactMatrix system(rows.size(), s * r);
  Vector rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t u = 0; u < s * r; ++u) system(i, u) = std::move(rows[i][u]);
    rhs[i] = std::move(rows[i][s * r]);
  }
  return solve_affine(system, rhs);
}

ExactMatrix coefficients_from_unknowns(std::span<const Rational> unknowns, std::size_t r, std::size_t s) {
  if (unknowns.size() != r * s) throw std::invalid_argument("coefficients_from_unknowns: size mismatch");
  ExactMatrix b(r, s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) b(i, j) = unknowns[j * r + i];
  return b;
}

Vector unknowns_from_coefficients(const ExactMatrix& b) {
  Vector v(b.rows() * b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) v[j * b.rows() + i] = b(i, j);
  return v;
}

// --------------------------------------------------------------- families

std::size_t BdcFamily::dimension() const {
  std::size_t d = 0;
  for (const auto& f : degrees) d += f.space.dimension();
  return d;
}

BdcClass BdcFamily::member(const std::vector<Vector>& coefficients) const {
  if (coefficients.size() != degrees.size()) throw std::invalid_argument("BdcFamily::member: one vector per degree");
  BdcClass beta{bases, {}};
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const auto& f = degrees[k];
    beta.blocks[f.q] = coefficients_from_unknowns(f.space.member(coefficients[k]), f.rows, f.cols);
  }
  return beta;
}

BdcClass BdcFamily::representative() const {
  std::vector<Vector> zeros;
  for (const auto& f : degrees) zeros.emplace_back(f.space.dimension());
  return member(zeros);
}

BdcFamily global_bdc(const ManifoldSpec& spec, const BasisSet& bases, std::span<const Chamber> chambers,
                     unsigned threads) {
  const KalkmanIntegrator integrator(spec);
  const std::uint32_t top = spec.top_degree();
  BdcFamily family{bases, {chambers.begin(), chambers.end()}, {}};
  for (std::uint32_t q = 0; q <= top; q += 2) {
    std::vector<ExactMatrix> matrices(chambers.size());
    parallel_for(chambers.size(), threads, [&](std::size_t c) {
      matrices[c] = pairing_matrix(integrator, q, chambers[c], bases).matrix;
    });
    family.degrees.push_back({q, bases.dim(q), bases.dim(top - q), solve_common_pseudoinverse(matrices)});
  }
  return family;
}

BdcFamily global_bdc(const ManifoldSpec& spec, const BasisSet& bases, unsigned threads) {
  const auto all = chambers(spec);
  return global_bdc(spec, bases, all, threads);
}

// ------------------------------------------------------------ verification

namespace {

void check_fits(const BdcClass& beta, const ManifoldSpec& spec) {
  const std::uint32_t top = spec.top_degree();
  for (std::uint32_t q = 0; q <= top; q += 2) {
    const auto& basis = beta.bases.at(q);
    if (basis.size() != standard_basis(spec.relations(), q).size())
      throw BasisMismatch("basis in degree " + std::to_string(q) + " has the wrong size for this manifold");
    for (const auto& m : basis)
      if (m.nvars() != spec.nvars() || m.degree() != q)
        throw BasisMismatch("basis in degree " + std::to_string(q) + " does not belong to this manifold");
    auto it = beta.blocks.find(q);
    if (it == beta.blocks.end()) throw BasisMismatch("missing block B^" + std::to_string(q));
    if (it->second.rows() != basis.size() || it->second.cols() != beta.bases.dim(top - q))
      throw BasisMismatch("block B^" + std::to_string(q) + " has the wrong shape");
  }
  for (const auto& [q, block] : beta.blocks)
    if (q % 2 != 0 || q > top) throw BasisMismatch("unexpected block B^" + std::to_string(q));
}

}  // namespace

bool is_bdc(const BdcClass& beta, const KalkmanIntegrator& integrator, const Chamber& chamber) {
  const auto& spec = integrator.spec();
  check_fits(beta, spec);
  for (std::uint32_t q = 0; q <= spec.top_degree(); q += 2) {
    const ExactMatrix a = pairing_matrix(integrator, q, chamber, beta.bases).matrix;
    if (!(a * beta.blocks.at(q).transpose() * a == a)) return false;
  }
  return true;
}

bool is_bdc(const BdcClass& beta, const ManifoldSpec& spec, const Chamber& chamber) {
  return is_bdc(beta, KalkmanIntegrator(spec), chamber);
}

Polynomial apply_right_inverse(const BdcClass& beta, const Polynomial& alpha, const KalkmanIntegrator& integrator,
                               const Chamber& chamber) {
  const auto& spec = integrator.spec();
  const std::uint32_t top = spec.top_degree();
  if (alpha.is_zero()) return Polynomial(spec.nvars());
  if (alpha.nvars() != spec.nvars()) throw WrongDegree("class is not over the ring of this manifold");
  const auto p = alpha.homogeneous_degree();
  if (!p || *p > top) throw WrongDegree("alpha must be homogeneous of even degree at most " + std::to_string(top));
  check_fits(beta, spec);

  const std::uint32_t dual = top - *p;
  const auto& eps = beta.bases.at(dual);
  const auto& eta = beta.bases.at(*p);
  const ExactMatrix& block = beta.blocks.at(dual);
  Polynomial result(spec.nvars());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const Rational pairing =
        integrator.integrate(ring_product(alpha, Polynomial::monomial(eps[i]), spec.relations()), chamber);
    if (pairing == 0) continue;
    for (std::size_t j = 0; j < eta.size(); ++j)
      if (block(i, j) != 0) result.add_term(eta[j], block(i, j) * pairing);
  }
  return normal_form(result, spec.relations());
}

Polynomial apply_right_inverse(const BdcClass& beta, const Polynomial& alpha, const ManifoldSpec& spec,
                               const Chamber& chamber) {
  return apply_right_inverse(beta, alpha, KalkmanIntegrator(spec), chamber);
}

std::string format_class(const BdcClass& beta, const ManifoldSpec& spec) {
  const auto& names = spec.variable_names();
  const std::uint32_t top = spec.top_degree();
  std::string out;
  for (const auto& [q, block] : beta.blocks) {
    const auto& left = beta.bases.at(q);
    const auto& right = beta.bases.at(top - q);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) {
        const Rational& c = block(i, j);
        if (c == 0) continue;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        const Rational mag = abs(c);
        if (mag != 1) out += to_string(mag) + "*";
        out += format_monomial(left[i], names) + "⊗" + format_monomial(right[j], names);
      }
  }
  return out.empty() ? "0" : out;
}

}  // namespace kirwanlab
