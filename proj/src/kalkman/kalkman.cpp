#include "kirwanlab/kalkman.hpp"

#include <algorithm>
#include <ostream>

#include "kirwanlab/error.hpp"

namespace kirwanlab {

KalkmanIntegrator::KalkmanIntegrator(ManifoldSpec spec)
    : spec_(std::move(spec)), points_(fixed_points(spec_)), critical_(critical_values(spec_)) {
  std::stable_sort(points_.begin(), points_.end(),
                   [](const FixedPoint& a, const FixedPoint& b) { return a.mu < b.mu; });
}

Rational KalkmanIntegrator::contribution(const Polynomial& alpha, const FixedPoint& p) {
  return restrict(alpha, p) / p.weight_product;
}

Rational KalkmanIntegrator::full_sum(const Polynomial& alpha) const {
  Rational sum = 0;
  for (const auto& p : points_) sum += contribution(alpha, p);
  return sum;
}

Rational KalkmanIntegrator::integrate(const Polynomial& alpha, const Rational& c) const {
  if (std::binary_search(critical_.begin(), critical_.end(), c))
    throw CriticalLevel("level " + to_string(c) + " is a critical value");
  if (!alpha.is_zero() && alpha.nvars() != spec_.nvars())
    throw WrongDegree("class is not over the ring of this manifold");
  if (!alpha.is_homogeneous_of(spec_.top_degree()))
    throw WrongDegree("class must be homogeneous of degree " + std::to_string(spec_.top_degree()));
  Rational sum = 0;
  for (const auto& p : points_)
    if (p.mu > c) sum += contribution(alpha, p);
  return sum;
}

Rational integrate(const Polynomial& alpha, const Rational& c, const ManifoldSpec& spec) {
  return KalkmanIntegrator(spec).integrate(alpha, c);
}

ContributionTable contribution_table(const ManifoldSpec& spec, std::span<const Monomial> basis) {
  auto columns = validate_basis(spec.relations(), spec.top_degree(), {basis.begin(), basis.end()});
  KalkmanIntegrator integrator(spec);
  ContributionTable t{integrator.points(), std::move(columns), {}};
  t.entries = ExactMatrix(t.points.size(), t.columns.size());
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = 0; j < t.columns.size(); ++j)
      t.entries(i, j) = KalkmanIntegrator::contribution(Polynomial::monomial(t.columns[j]), t.points[i]);
  return t;
}

SuffixTable suffix_table(const ContributionTable& t1, std::span<const Chamber> chambers) {
  SuffixTable t2{{chambers.begin(), chambers.end()}, t1.columns, ExactMatrix(chambers.size(), t1.columns.size())};
  for (std::size_t r = 0; r < chambers.size(); ++r)
    for (std::size_t i = 0; i < t1.points.size(); ++i) {
      if (!(t1.points[i].mu > chambers[r].representative)) continue;
      for (std::size_t j = 0; j < t1.columns.size(); ++j) t2.entries(r, j) += t1.entries(i, j);
    }
  return t2;
}

// ------------------------------------------------------------------ output

std::string point_label(const FixedPoint& p) {
  std::string s;
  for (auto a : p.choice) s += std::to_string(a);
  return s;
}

namespace {

std::string cell(const Rational& r, TableStyle style) {
  return style.decimals < 0 ? to_string(r) : to_decimal(r, style.decimals);
}

void csv_header(std::ostream& os, const char* a, const char* b, const std::vector<Monomial>& cols,
                const ManifoldSpec& spec) {
  os << a << ',' << b;
  for (const auto& m : cols) os << ',' << format_monomial(m, spec.variable_names());
  os << '\n';
}

void pretty(std::ostream& os, const std::string& corner, const std::vector<std::string>& labels,
            const std::vector<Monomial>& cols, const ExactMatrix& entries, const ManifoldSpec& spec,
            TableStyle style) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({corner});
  for (const auto& m : cols) grid.back().push_back(format_monomial(m, spec.variable_names()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    grid.push_back({labels[i]});
    for (std::size_t j = 0; j < cols.size(); ++j) grid.back().push_back(cell(entries(i, j), style));
  }
  std::vector<std::size_t> width(cols.size() + 1, 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t j = 0; j < grid[r].size(); ++j) {
      const auto& s = grid[r][j];
      os << std::string(width[j] - s.size(), ' ') << s << (j == 0 ? " |" : " ");
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 2;
      for (auto w : width) total += w + 1;
      os << std::string(total, '=') << '\n';
    }
  }
}

}  // namespace

void write_csv(std::ostream& os, const ContributionTable& t, const ManifoldSpec& spec, TableStyle style) {
  csv_header(os, "point", "mu", t.columns, spec);
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    os << point_label(t.points[i]) << ',' << to_string(t.points[i].mu);
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << ',' << cell(t.entries(i, j), style);
    os << '\n';
  }
}

void write_csv(std::ostream& os, const SuffixTable& t, const ManifoldSpec& spec, TableStyle style) {
  csv_header(os, "chamber", "c", t.columns, spec);
  for (std::size_t i = 0; i < t.chambers.size(); ++i) {
    os << t.chambers[i].index << ',' << to_string(t.chambers[i].representative);
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << ',' << cell(t.entries(i, j), style);
    os << '\n';
  }
}

void write_pretty(std::ostream& os, const ContributionTable& t, const ManifoldSpec& spec, TableStyle style) {
  std::vector<std::string> labels;
  for (const auto& p : t.points) labels.push_back(to_string(p.mu));
  pretty(os, "T1 (mu)", labels, t.columns, t.entries, spec, style);
}

void write_pretty(std::ostream& os, const SuffixTable& t, const ManifoldSpec& spec, TableStyle style) {
  std::vector<std::string> labels;
  for (const auto& c : t.chambers) labels.push_back(std::to_string(c.index));
  pretty(os, "T2 (j)", labels, t.columns, t.entries, spec, style);
}

}  // namespace kirwanlab
