#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "kirwanlab/hamspace.hpp"
#include "kirwanlab/matrix.hpp"

namespace kirwanlab {

/// Localization integrals over the reduced spaces M//_c S^1 for isolated
/// fixed points:
///
///   int_{M//_c} kappa_c(alpha) = sum_{mu(p) > c} alpha(p) / w(p)
///
/// where alpha(p) is the restriction of alpha to p and w(p) the product of the
/// isotropy weights. Only classes of the top degree 2m - 2 are accepted.
class KalkmanIntegrator {
 public:
  explicit KalkmanIntegrator(ManifoldSpec spec);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  /// Ordered by increasing mu, then enumeration order.
  const std::vector<FixedPoint>& points() const noexcept { return points_; }

  /// Throws CriticalLevel or WrongDegree.
  Rational integrate(const Polynomial& alpha, const Rational& c) const;
  Rational integrate(const Polynomial& alpha, const Chamber& chamber) const {
    return integrate(alpha, chamber.representative);
  }

  /// alpha(p) / w(p), no degree gate.
  static Rational contribution(const Polynomial& alpha, const FixedPoint& p);
  /// Sum over every fixed point, no degree gate.
  Rational full_sum(const Polynomial& alpha) const;

 private:
  ManifoldSpec spec_;
  std::vector<FixedPoint> points_;
  std::vector<Rational> critical_;
};

Rational integrate(const Polynomial& alpha, const Rational& c, const ManifoldSpec& spec);

/// Row per fixed point, column per basis monomial of degree 2m - 2;
/// entry restrict(e_j, p) / w(p).
struct ContributionTable {
  std::vector<FixedPoint> points;
  std::vector<Monomial> columns;
  ExactMatrix entries;
};

/// Row per chamber: the sum of contribution rows with mu(p) above the chamber.
struct SuffixTable {
  std::vector<Chamber> chambers;
  std::vector<Monomial> columns;
  ExactMatrix entries;
};

/// `basis` is validated as a degree-(2m-2) basis (CustomBasisNotABasis).
ContributionTable contribution_table(const ManifoldSpec& spec, std::span<const Monomial> basis);
SuffixTable suffix_table(const ContributionTable& t1, std::span<const Chamber> chambers);

struct TableStyle {
  int decimals = -1;  // < 0: exact "p/q"
};

void write_csv(std::ostream& os, const ContributionTable& t, const ManifoldSpec& spec, TableStyle style = {});
void write_csv(std::ostream& os, const SuffixTable& t, const ManifoldSpec& spec, TableStyle style = {});
void write_pretty(std::ostream& os, const ContributionTable& t, const ManifoldSpec& spec, TableStyle style = {});
void write_pretty(std::ostream& os, const SuffixTable& t, const ManifoldSpec& spec, TableStyle style = {});

std::string point_label(const FixedPoint& p);

}  // namespace kirwanlab
