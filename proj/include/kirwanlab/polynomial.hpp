#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kirwanlab/rational.hpp"

namespace kirwanlab {

/// Exponent vector over a fixed, ordered alphabet of degree-2 generators.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  /// Sum of exponents (polynomial degree).
  std::uint32_t total_degree() const noexcept;
  /// Cohomological degree: every generator sits in degree 2.
  std::uint32_t degree() const noexcept { return 2 * total_degree(); }

  Monomial operator*(const Monomial& other) const;
  bool is_one() const noexcept { return total_degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Degree first, then lexicographic on the sorted variable word with the
/// alphabet order of the exponent vector (t < x0 < x1 < ...). For equal
/// degree this puts larger leading exponents first: t^2, t*x0, ..., x0^2, x0*x1.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact coefficients; no zero coefficients stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Cohomological degree if homogeneous and nonzero.
  std::optional<std::uint32_t> homogeneous_degree() const;
  /// Zero is homogeneous of every degree.
  bool is_homogeneous_of(std::uint32_t degree) const;

  /// Substitutes values for the variables (values.size() == nvars()).
  Rational evaluate(std::span<const Rational> values) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// `variable`^`degree` is rewritten to `tail`. The tail may only involve the
/// variable itself below `degree` and variables that lead no relation.
struct Relation {
  std::size_t variable = 0;
  std::uint32_t degree = 0;
  Polynomial tail;

  /// The monic relation polynomial variable^degree - tail.
  Polynomial polynomial() const;

  /// prod_a (x - roots[a] * param), leading monomial x^{roots.size()}.
  static Relation from_roots(std::size_t nvars, std::size_t variable, std::size_t param,
                             std::span<const Rational> roots);
};

/// A set of monic relations with pairwise distinct leading variables. Since
/// the leading monomials are pure powers of distinct variables, plain
/// rewriting is confluent and defines the quotient normal form.
class RelationSet {
 public:
  RelationSet() = default;
  /// Throws ValidationError if the relations are not well-formed.
  RelationSet(std::size_t nvars, std::vector<Relation> relations);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  /// Exponent bound of variable i in standard monomials, if it leads a relation.
  std::optional<std::uint32_t> bound(std::size_t var) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Relation> relations_;
  std::vector<std::optional<std::uint32_t>> bounds_;
};

Polynomial normal_form(const Polynomial& p, const RelationSet& rels);
Polynomial ring_product(const Polynomial& a, const Polynomial& b, const RelationSet& rels);

/// Monomials that survive the rewriting: every leading variable has exponent
/// below its relation degree.
bool is_standard(const Monomial& m, const RelationSet& rels);

/// Standard monomials of the given (even) cohomological degree, in GradedOrder.
std::vector<Monomial> standard_basis(const RelationSet& rels, std::uint32_t degree);

/// Returns `custom` unchanged after checking it is a basis of the degree
/// piece: right degree, right cardinality, full rank of its normal forms.
/// Throws CustomBasisNotABasis.
std::vector<Monomial> validate_basis(const RelationSet& rels, std::uint32_t degree,
                                     std::vector<Monomial> custom);

enum class BasisStyle { standard, custom };

std::vector<Monomial> graded_basis(const RelationSet& rels, std::uint32_t degree,
                                   BasisStyle style, std::vector<Monomial> custom = {});

// Text form, terms in increasing order: "1 - 3/2*x1 + t^2*x0". Variable names
// index the exponent vector.
std::string format_monomial(const Monomial& m, std::span<const std::string> names);
std::string format_polynomial(const Polynomial& p, std::span<const std::string> names);

/// Parses +, -, *, ^ (non-negative integer exponents), parentheses, rational
/// literals and the given variable names. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);
Monomial parse_monomial(std::string_view text, std::span<const std::string> names);

}  // namespace kirwanlab
