#pragma once

#include <string>
#include <vector>

#include "kirwanlab/hamspace.hpp"
#include "kirwanlab/matrix.hpp"
#include "kirwanlab/polynomial.hpp"

namespace kirwanlab {

/// H*_{S^1 x S^1}(CP^1) = Q[t1, t2, u] / ((u - t1)(u - t2)), as a free module of
/// rank 2 over the base Q[t1, t2] with basis {1, u}.
namespace bundle {

inline constexpr std::size_t kBaseVars = 2;  // t1, t2
inline constexpr std::size_t kU = 2;         // index of u in the 3-variable alphabet

const std::vector<std::string>& base_names();    // t1, t2
const std::vector<std::string>& bundle_names();  // t1, t2, u

/// u^2 -> (t1 + t2) u - t1 t2 over the alphabet (t1, t2, u).
const RelationSet& bundle_relations();

Polynomial t1();
Polynomial t2();

}  // namespace bundle

/// a + b*u with a, b in Q[t1, t2].
struct BundleClass {
  Polynomial a{bundle::kBaseVars};
  Polynomial b{bundle::kBaseVars};

  static BundleClass one();
  static BundleClass u();
  static BundleClass base(const Polynomial& p);
  /// Reduces a polynomial in (t1, t2, u) to canonical form.
  static BundleClass from_polynomial(const Polynomial& p);
  static BundleClass parse(std::string_view expr);

  Polynomial to_polynomial() const;

  friend BundleClass operator+(const BundleClass& x, const BundleClass& y);
  friend BundleClass operator*(const BundleClass& x, const BundleClass& y);
  friend BundleClass operator*(const Polynomial& base, const BundleClass& x);
  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// Fibered tensor square over Q[t1, t2]: coefficients of 1⊗1, u⊗1, 1⊗u, u⊗u.
struct TensorClass {
  Polynomial one_one{bundle::kBaseVars};
  Polynomial u_one{bundle::kBaseVars};
  Polynomial one_u{bundle::kBaseVars};
  Polynomial u_u{bundle::kBaseVars};

  bool is_zero() const;

  friend TensorClass operator+(const TensorClass& x, const TensorClass& y);
  friend TensorClass operator-(const TensorClass& x, const TensorClass& y);
  friend TensorClass operator*(const Polynomial& base, const TensorClass& x);
  friend bool operator==(const TensorClass&, const TensorClass&) = default;
};

/// left ⊗ right, both slots already canonical.
TensorClass tensor(const BundleClass& left, const BundleClass& right);

/// Integration along the CP^1 fibre: 1 -> 0, u -> -1, Q[t1, t2]-linear.
Polynomial fiber_integrate(const BundleClass& c);

/// Z(i, j) = fiber_integrate(x_i y_j) for x = (u, 1), y = (1, u).
PolyMatrix graham_z_matrix();

/// sum a_ij x_i ⊗ y_j with (a_ij) = (Z^{-1})^t: the equivariant diagonal class
/// (t1 + t2)(1⊗1) - u⊗1 - 1⊗u.
TensorClass graham_diagonal();

/// Shriek of the diagonal inclusion on p + q u:
/// p * diagonal + q * (t1 t2 (1⊗1) - u⊗u).
TensorClass shriek(const BundleClass& c);

/// Drops every monomial with t1 or t2 exponent above k (comparison with the
/// finite approximations H*(CP^1_k)).
TensorClass truncate(const TensorClass& x, unsigned k);

std::string format(const BundleClass& c);
std::string format(const TensorClass& x);
std::string format(const PolyMatrix& m);

/// H*_{S^1 x S^1}(M x M) for a product of projective spaces: alphabet
/// (t1, t2, x(first copy)..., x(second copy)...), first copy relations use t1,
/// second copy relations use t2.
class DoubledRing {
 public:
  explicit DoubledRing(ManifoldSpec spec);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  std::size_t nvars() const noexcept { return 2 + 2 * spec_.num_factors(); }
  std::size_t first(std::size_t factor) const { return 2 + factor; }
  std::size_t second(std::size_t factor) const { return 2 + spec_.num_factors() + factor; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const RelationSet& relations() const noexcept { return relations_; }

  Polynomial parse(std::string_view expr) const;
  std::string format(const Polynomial& p) const { return format_polynomial(p, names_); }

 private:
  ManifoldSpec spec_;
  std::vector<std::string> names_;
  RelationSet relations_;
};

struct ProductLambda {
  ManifoldSpec spec;  // M x N
  Polynomial lambda_one;
  Polynomial lambda_u;
};

/// lambda^{MxN}(1) = (t1+t2) lm1⊗ln1 - lmu⊗ln1 - lm1⊗lnu
/// lambda^{MxN}(u) = t1 t2 lm1⊗ln1 - lmu⊗lnu
/// lm1 must be homogeneous of degree 2m-2 and lmu of degree 2m (same for N).
/// Throws WrongDegree.
ProductLambda compose_product_lambda(const DoubledRing& m_ring, const Polynomial& lm1, const Polynomial& lmu,
                                     const DoubledRing& n_ring, const Polynomial& ln1, const Polynomial& lnu);

/// Embeds a class of M⊗M (or N⊗N) into the doubled ring of M x N.
Polynomial embed_left(const DoubledRing& m_ring, const DoubledRing& product_ring, const Polynomial& p);
Polynomial embed_right(const DoubledRing& n_ring, const DoubledRing& product_ring, const Polynomial& p);

}  // namespace kirwanlab
