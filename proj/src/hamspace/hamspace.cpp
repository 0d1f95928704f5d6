#include "kirwanlab/hamspace.hpp"

#include <algorithm>
#include <set>

#include "kirwanlab/error.hpp"

namespace kirwanlab {

namespace {

std::vector<std::string> make_names(std::size_t k) {
  std::vector<std::string> names{"t"};
  if (k == 1) {
    names.emplace_back("x");
  } else {
    for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

}  // namespace

ManifoldSpec::ManifoldSpec(std::vector<ProjectiveFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("manifold needs at least one factor");
  const std::size_t nvars = factors_.size() + 1;
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::string where = "factor " + std::to_string(i) + ": ";
    if (f.n < 1) throw ValidationError(where + "dimension n must be positive");
    if (f.weights.size() != f.n + 1)
      throw ValidationError(where + "expected " + std::to_string(f.n + 1) + " weights, got " +
                            std::to_string(f.weights.size()));
    std::set<std::int64_t> seen(f.weights.begin(), f.weights.end());
    if (seen.size() != f.weights.size()) throw ValidationError(where + "weights must be pairwise distinct");
    m_ += f.n;
    std::vector<Rational> roots;
    for (auto w : f.weights) roots.emplace_back(static_cast<long>(w));
    rels.push_back(Relation::from_roots(nvars, x_index(i), t_index, roots));
  }
  names_ = make_names(factors_.size());
  relations_ = RelationSet(nvars, std::move(rels));
}

ManifoldSpec product(const ManifoldSpec& a, const ManifoldSpec& b) {
  auto fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return ManifoldSpec(std::move(fs));
}

bool operator==(const ManifoldSpec& a, const ManifoldSpec& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (a.factors_[i].n != b.factors_[i].n || a.factors_[i].weights != b.factors_[i].weights) return false;
  return true;
}

ManifoldSpec power_of_two_cp1(unsigned n) {
  std::vector<ProjectiveFactor> fs;
  for (unsigned i = 0; i < n; ++i) fs.push_back({1, {0, std::int64_t{1} << i}});
  return ManifoldSpec(std::move(fs));
}

ManifoldSpec projective_space(std::vector<std::int64_t> weights) {
  const auto n = static_cast<unsigned>(weights.empty() ? 0 : weights.size() - 1);
  return ManifoldSpec({{n, std::move(weights)}});
}

std::vector<FixedPoint> fixed_points(const ManifoldSpec& spec) {
  const auto& fs = spec.factors();
  std::vector<FixedPoint> out;
  std::vector<unsigned> choice(fs.size(), 0);
  for (;;) {
    FixedPoint p;
    p.choice = choice;
    p.mu = 0;
    p.weight_product = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& w = fs[i].weights;
      const Rational here(static_cast<long>(w[choice[i]]));
      p.per_factor_mu.push_back(here);
      p.mu += here;
      for (std::size_t b = 0; b < w.size(); ++b)
        if (b != choice[i]) p.weight_product *= Rational(static_cast<long>(w[b])) - here;
    }
    out.push_back(std::move(p));
    // Odometer, last factor fastest.
    std::size_t i = fs.size();
    while (i > 0) {
      --i;
      if (++choice[i] <= fs[i].n) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<Rational> critical_values(const ManifoldSpec& spec) {
  std::vector<Rational> values;
  for (const auto& p : fixed_points(spec)) values.push_back(p.mu);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool is_critical(const ManifoldSpec& spec, const Rational& c) {
  const auto values = critical_values(spec);
  return std::binary_search(values.begin(), values.end(), c);
}

std::vector<Chamber> chambers(const ManifoldSpec& spec) {
  const auto values = critical_values(spec);
  if (values.size() < 2) throw DegenerateSpec("moment map has a single critical value");
  std::vector<Chamber> out;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    Rational mid = (values[i] + values[i + 1]) / 2;
    out.push_back({i + 1, values[i], values[i + 1], mid});
  }
  return out;
}

Chamber chamber_containing(const ManifoldSpec& spec, const Rational& c) {
  if (is_critical(spec, c)) throw CriticalLevel("level " + to_string(c) + " is a critical value");
  for (const auto& ch : chambers(spec))
    if (ch.lower < c && c < ch.upper) return ch;
  throw ValidationError("level " + to_string(c) + " lies outside the moment image");
}

Rational restrict(const Polynomial& alpha, const FixedPoint& p) {
  std::vector<Rational> values;
  values.reserve(p.per_factor_mu.size() + 1);
  values.emplace_back(1);
  values.insert(values.end(), p.per_factor_mu.begin(), p.per_factor_mu.end());
  return alpha.evaluate(values);
}

}  // namespace kirwanlab
