#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kirwanlab/polynomial.hpp"
#include "kirwanlab/rational.hpp"

namespace kirwanlab {

/// One projective factor CP^n acted on by theta.[z_0:...:z_n] =
/// [theta^{j_0} z_0 : ... : theta^{j_n} z_n].
struct ProjectiveFactor {
  unsigned n = 1;
  std::vector<std::int64_t> weights;
};

/// A product CP^{n_1} x ... x CP^{n_k} with a circle action. Ring alphabet is
/// (t, x_1, ..., x_k); factor i contributes the relation prod_a (x_i - j_{i,a} t).
class ManifoldSpec {
 public:
  /// Throws ValidationError naming the offending factor.
  explicit ManifoldSpec(std::vector<ProjectiveFactor> factors);

  const std::vector<ProjectiveFactor>& factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  /// Complex dimension; the quotient integrates classes of degree 2m - 2.
  unsigned m() const noexcept { return m_; }
  unsigned top_degree() const noexcept { return 2 * m_ - 2; }

  std::size_t nvars() const noexcept { return factors_.size() + 1; }
  static constexpr std::size_t t_index = 0;
  static std::size_t x_index(std::size_t factor) { return factor + 1; }

  /// "t" and "x" for a single factor; "t", "x0", "x1", ... otherwise.
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const RelationSet& relations() const noexcept { return relations_; }

  Polynomial parse(std::string_view expr) const { return parse_polynomial(expr, names_); }
  std::string format(const Polynomial& p) const { return format_polynomial(p, names_); }

  /// Concatenation of factor lists (M x N).
  friend ManifoldSpec product(const ManifoldSpec& a, const ManifoldSpec& b);
  friend bool operator==(const ManifoldSpec& a, const ManifoldSpec& b);

 private:
  std::vector<ProjectiveFactor> factors_;
  unsigned m_ = 0;
  std::vector<std::string> names_;
  RelationSet relations_;
};

/// The (CP^1)^n family with weights {0, 2^i} on factor i.
ManifoldSpec power_of_two_cp1(unsigned n);
ManifoldSpec projective_space(std::vector<std::int64_t> weights);

struct FixedPoint {
  std::vector<unsigned> choice;        // coordinate index per factor
  Rational mu;                         // sum_i j_{i, choice_i}
  Rational weight_product;             // prod_i prod_{b != a_i} (j_{i,b} - j_{i,a_i})
  std::vector<Rational> per_factor_mu;
};

/// prod (n_i + 1) points, lexicographic in `choice`.
std::vector<FixedPoint> fixed_points(const ManifoldSpec& spec);

/// Sorted distinct moment values of the fixed points.
std::vector<Rational> critical_values(const ManifoldSpec& spec);
bool is_critical(const ManifoldSpec& spec, const Rational& c);

/// Open interval between consecutive critical values.
struct Chamber {
  std::size_t index = 0;  // 1-based, increasing
  Rational lower;
  Rational upper;
  Rational representative;  // midpoint
};

/// Throws DegenerateSpec if there is a single critical value.
std::vector<Chamber> chambers(const ManifoldSpec& spec);

/// The chamber containing the regular value c. Throws CriticalLevel when c is
/// critical and ValidationError when c lies outside [min, max] of the moment image.
Chamber chamber_containing(const ManifoldSpec& spec, const Rational& c);

/// Value of a class at a fixed point: t -> 1, x_i -> mu_i(p).
Rational restrict(const Polynomial& alpha, const FixedPoint& p);

}  // namespace kirwanlab
