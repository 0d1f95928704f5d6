#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kirwanlab/hamspace.hpp"
#include "kirwanlab/kalkman.hpp"
#include "kirwanlab/matrix.hpp"

namespace kirwanlab {

/// One basis e^q_1..e^q_{d_q} of H^q_{S^1}(M) per even degree 0 <= q <= 2m-2.
class BasisSet {
 public:
  /// Standard monomials in every degree.
  static BasisSet standard(const ManifoldSpec& spec);

  /// Replaces the basis in one degree after validating it (CustomBasisNotABasis).
  BasisSet with(const ManifoldSpec& spec, std::uint32_t degree, std::vector<Monomial> basis) const;

  /// Throws BasisMismatch for a degree without a basis.
  const std::vector<Monomial>& at(std::uint32_t degree) const;
  std::size_t dim(std::uint32_t degree) const { return at(degree).size(); }
  const std::map<std::uint32_t, std::vector<Monomial>>& all() const noexcept { return bases_; }

  friend bool operator==(const BasisSet&, const BasisSet&) = default;

 private:
  std::map<std::uint32_t, std::vector<Monomial>> bases_;
};

/// A_c^q: d_q x d_{2m-2-q} matrix of int_{M//_c} kappa(e^q_i) kappa(e^{2m-2-q}_j).
struct PairingMatrix {
  std::uint32_t q = 0;
  Chamber chamber;
  std::vector<Monomial> row_basis;
  std::vector<Monomial> col_basis;
  ExactMatrix matrix;
};

PairingMatrix pairing_matrix(const KalkmanIntegrator& integrator, std::uint32_t q, const Chamber& chamber,
                             const BasisSet& bases);
PairingMatrix pairing_matrix(const ManifoldSpec& spec, std::uint32_t q, const Chamber& chamber,
                             const BasisSet& bases);

/// All r x s matrices B with A_i B^t A_i = A_i for every A_i (each r x s).
/// Unknowns are the entries of X = B^t (s x r), vectorized row-major:
/// X(j, l) is unknown j * r + l. Throws Inconsistent.
AffineSolutionSpace solve_common_pseudoinverse(std::span<const ExactMatrix> matrices);

/// B (r x s) from a vector of X = B^t unknowns, and back.
ExactMatrix coefficients_from_unknowns(std::span<const Rational> unknowns, std::size_t r, std::size_t s);
Vector unknowns_from_coefficients(const ExactMatrix& b);

/// beta = sum_q sum_{ij} B^q(i, j) e^q_i (x) e^{2m-2-q}_j.
struct BdcClass {
  BasisSet bases;
  std::map<std::uint32_t, ExactMatrix> blocks;
};

struct DegreeFamily {
  std::uint32_t q = 0;
  std::size_t rows = 0;  // d_q
  std::size_t cols = 0;  // d_{2m-2-q}
  AffineSolutionSpace space;
};

/// Affine space of classes that are biinvariant diagonal at every chamber
/// considered; blocks are solved independently per degree.
struct BdcFamily {
  BasisSet bases;
  std::vector<Chamber> chambers;
  std::vector<DegreeFamily> degrees;

  std::size_t dimension() const;
  /// The member with every free parameter set to zero.
  BdcClass representative() const;
  /// coefficients[k] parametrizes degrees[k].
  BdcClass member(const std::vector<Vector>& coefficients) const;
};

BdcFamily global_bdc(const ManifoldSpec& spec, const BasisSet& bases, std::span<const Chamber> chambers,
                     unsigned threads = 1);
/// Every chamber of the spec.
BdcFamily global_bdc(const ManifoldSpec& spec, const BasisSet& bases, unsigned threads = 1);

/// True iff A_c^q (B^q)^t A_c^q = A_c^q for every even q. Throws BasisMismatch
/// when the blocks do not fit the bases or the bases do not fit the spec.
bool is_bdc(const BdcClass& beta, const KalkmanIntegrator& integrator, const Chamber& chamber);
bool is_bdc(const BdcClass& beta, const ManifoldSpec& spec, const Chamber& chamber);

/// The right inverse of the Kirwan map induced by beta: for alpha of degree p,
/// sum_{ij} B^{2m-2-p}(i, j) * int_c(alpha e_i) * eta_j, a class of degree p.
/// Throws WrongDegree.
Polynomial apply_right_inverse(const BdcClass& beta, const Polynomial& alpha, const KalkmanIntegrator& integrator,
                               const Chamber& chamber);
Polynomial apply_right_inverse(const BdcClass& beta, const Polynomial& alpha, const ManifoldSpec& spec,
                               const Chamber& chamber);

/// "3*1⊗x + 3*x⊗1 - 3*1⊗t - 3*t⊗1" style rendering, one term per nonzero entry.
std::string format_class(const BdcClass& beta, const ManifoldSpec& spec);

}  // namespace kirwanlab
