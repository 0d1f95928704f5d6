#include "kirwanlab/diagonal.hpp"

#include "kirwanlab/error.hpp"

namespace kirwanlab {

namespace bundle {

const std::vector<std::string>& base_names() {
  static const std::vector<std::string> names{"t1", "t2"};
  return names;
}

const std::vector<std::string>& bundle_names() {
  static const std::vector<std::string> names{"t1", "t2", "u"};
  return names;
}

const RelationSet& bundle_relations() {
  static const RelationSet rels = [] {
    // (u - t1)(u - t2) has two parameters, so the tail is written out.
    Polynomial tail(3);
    tail.add_term(Monomial({1, 0, 1}), 1);
    tail.add_term(Monomial({0, 1, 1}), 1);
    tail.add_term(Monomial({1, 1, 0}), -1);
    return RelationSet(3, {Relation{kU, 2, tail}});
  }();
  return rels;
}

Polynomial t1() { return Polynomial::variable(kBaseVars, 0); }
Polynomial t2() { return Polynomial::variable(kBaseVars, 1); }

}  // namespace bundle

namespace {

Polynomial lift(const Polynomial& base, std::uint32_t u_power) {
  Polynomial out(3);
  for (const auto& [m, c] : base.terms()) out.add_term(Monomial({m[0], m[1], u_power}), c);
  return out;
}

bool is_constant(const Polynomial& p, const Rational& value) {
  return p.size() == 1 && p.terms().begin()->first.is_one() && p.terms().begin()->second == value;
}

std::string coefficient_times(const Polynomial& coeff, const std::string& slot, bool first) {
  std::string out;
  if (is_constant(coeff, 1)) return (first ? "" : " + ") + slot;
  if (is_constant(coeff, -1)) return (first ? "-" : " - ") + slot;
  if (coeff.size() == 1) {
    const auto& [m, c] = *coeff.terms().begin();
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    return out + format_polynomial(Polynomial::monomial(m, abs(c)), bundle::base_names()) + "*" + slot;
  }
  return (first ? "" : " + ") + ("(" + format_polynomial(coeff, bundle::base_names()) + ")*" + slot);
}

}  // namespace

// ------------------------------------------------------------- BundleClass

BundleClass BundleClass::one() { return {Polynomial::constant(bundle::kBaseVars, 1), Polynomial(bundle::kBaseVars)}; }

BundleClass BundleClass::u() { return {Polynomial(bundle::kBaseVars), Polynomial::constant(bundle::kBaseVars, 1)}; }

BundleClass BundleClass::base(const Polynomial& p) { return {p, Polynomial(bundle::kBaseVars)}; }

BundleClass BundleClass::from_polynomial(const Polynomial& p) {
  BundleClass out;
  if (p.is_zero()) return out;
  if (p.nvars() != 3) throw std::invalid_argument("BundleClass: expected the alphabet (t1, t2, u)");
  const Polynomial reduced = normal_form(p, bundle::bundle_relations());
  for (const auto& [m, c] : reduced.terms()) {
    Monomial base({m[0], m[1]});
    (m[bundle::kU] == 0 ? out.a : out.b).add_term(base, c);
  }
  return out;
}

BundleClass BundleClass::parse(std::string_view expr) {
  return from_polynomial(parse_polynomial(expr, bundle::bundle_names()));
}

Polynomial BundleClass::to_polynomial() const { return lift(a, 0) + lift(b, 1); }

BundleClass operator+(const BundleClass& x, const BundleClass& y) { return {x.a + y.a, x.b + y.b}; }

BundleClass operator*(const BundleClass& x, const BundleClass& y) {
  // u^2 = (t1 + t2) u - t1 t2
  const Polynomial bd = x.b * y.b;
  return {x.a * y.a - bd * bundle::t1() * bundle::t2(),
          x.a * y.b + x.b * y.a + bd * (bundle::t1() + bundle::t2())};
}

BundleClass operator*(const Polynomial& base, const BundleClass& x) { return {base * x.a, base * x.b}; }

// ------------------------------------------------------------- TensorClass

bool TensorClass::is_zero() const {
  return one_one.is_zero() && u_one.is_zero() && one_u.is_zero() && u_u.is_zero();
}

TensorClass operator+(const TensorClass& x, const TensorClass& y) {
  return {x.one_one + y.one_one, x.u_one + y.u_one, x.one_u + y.one_u, x.u_u + y.u_u};
}

TensorClass operator-(const TensorClass& x, const TensorClass& y) {
  return {x.one_one - y.one_one, x.u_one - y.u_one, x.one_u - y.one_u, x.u_u - y.u_u};
}

TensorClass operator*(const Polynomial& base, const TensorClass& x) {
  return {base * x.one_one, base * x.u_one, base * x.one_u, base * x.u_u};
}

TensorClass tensor(const BundleClass& left, const BundleClass& right) {
  return {left.a * right.a, left.b * right.a, left.a * right.b, left.b * right.b};
}

// ------------------------------------------------------ Graham's matrix method

Polynomial fiber_integrate(const BundleClass& c) { return -c.b; }

namespace {

const std::vector<BundleClass>& left_fibre_basis() {
  static const std::vector<BundleClass> xs{BundleClass::u(), BundleClass::one()};
  return xs;
}

const std::vector<BundleClass>& right_fibre_basis() {
  static const std::vector<BundleClass> ys{BundleClass::one(), BundleClass::u()};
  return ys;
}

}  // namespace

PolyMatrix graham_z_matrix() {
  const auto& xs = left_fibre_basis();
  const auto& ys = right_fibre_basis();
  PolyMatrix z(xs.size(), ys.size(), Polynomial(bundle::kBaseVars));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) z(i, j) = fiber_integrate(xs[i] * ys[j]);
  return z;
}

TensorClass graham_diagonal() {
  PolyMatrix coeffs;
  try {
    coeffs = invert(graham_z_matrix()).transpose();
  } catch (const Singular&) {
    throw std::logic_error("Graham matrix of CP^1 is singular");
  }
  const auto& xs = left_fibre_basis();
  const auto& ys = right_fibre_basis();
  TensorClass out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) out = out + coeffs(i, j) * tensor(xs[i], ys[j]);
  return out;
}

TensorClass shriek(const BundleClass& c) {
  TensorClass u_image;
  u_image.one_one = bundle::t1() * bundle::t2();
  u_image.u_u = Polynomial::constant(bundle::kBaseVars, -1);
  return c.a * graham_diagonal() + c.b * u_image;
}

TensorClass truncate(const TensorClass& x, unsigned k) {
  auto cut = [k](const Polynomial& p) {
    Polynomial out(bundle::kBaseVars);
    for (const auto& [m, c] : p.terms())
      if (m[0] <= k && m[1] <= k) out.add_term(m, c);
    return out;
  };
  return {cut(x.one_one), cut(x.u_one), cut(x.one_u), cut(x.u_u)};
}

std::string format(const BundleClass& c) {
  return format_polynomial(c.to_polynomial(), bundle::bundle_names());
}

std::string format(const TensorClass& x) {
  std::string out;
  const std::pair<const Polynomial*, const char*> slots[] = {
      {&x.one_one, "1⊗1"}, {&x.u_one, "u⊗1"}, {&x.one_u, "1⊗u"}, {&x.u_u, "u⊗u"}};
  for (const auto& [coeff, slot] : slots) {
    if (coeff->is_zero()) continue;
    out += coefficient_times(*coeff, slot, out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string format(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += format_polynomial(m(i, j), bundle::base_names());
    }
    out += "]";
  }
  return out + "]";
}

// ----------------------------------------------------------- product lambda

DoubledRing::DoubledRing(ManifoldSpec spec) : spec_(std::move(spec)) {
  const std::size_t k = spec_.num_factors();
  names_ = {"t1", "t2"};
  for (int copy = 1; copy <= 2; ++copy)
    for (std::size_t i = 0; i < k; ++i)
      names_.push_back(spec_.variable_names()[ManifoldSpec::x_index(i)] + "_" + std::to_string(copy));
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> roots;
    for (auto w : spec_.factors()[i].weights) roots.emplace_back(static_cast<long>(w));
    rels.push_back(Relation::from_roots(nvars(), first(i), 0, roots));
    rels.push_back(Relation::from_roots(nvars(), second(i), 1, roots));
  }
  relations_ = RelationSet(nvars(), std::move(rels));
}

Polynomial DoubledRing::parse(std::string_view expr) const {
  return normal_form(parse_polynomial(expr, names_), relations_);
}

namespace {

Polynomial remap(const Polynomial& p, std::size_t nvars, const std::vector<std::size_t>& target) {
  Polynomial out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial mapped(nvars);
    for (std::size_t v = 0; v < m.nvars(); ++v) mapped[target[v]] += m[v];
    out.add_term(mapped, c);
  }
  return out;
}

void check_class(const DoubledRing& ring, const Polynomial& p, std::uint32_t degree, const char* what) {
  if (!p.is_zero() && p.nvars() != ring.nvars())
    throw WrongDegree(std::string(what) + " is not over the doubled ring of its manifold");
  if (!p.is_homogeneous_of(degree))
    throw WrongDegree(std::string(what) + " must be homogeneous of degree " + std::to_string(degree));
}

}  // namespace

Polynomial embed_left(const DoubledRing& m_ring, const DoubledRing& product_ring, const Polynomial& p) {
  std::vector<std::size_t> target{0, 1};
  const std::size_t k = m_ring.spec().num_factors();
  for (std::size_t i = 0; i < k; ++i) target.push_back(product_ring.first(i));
  for (std::size_t i = 0; i < k; ++i) target.push_back(product_ring.second(i));
  return remap(p, product_ring.nvars(), target);
}

Polynomial embed_right(const DoubledRing& n_ring, const DoubledRing& product_ring, const Polynomial& p) {
  const std::size_t offset = product_ring.spec().num_factors() - n_ring.spec().num_factors();
  std::vector<std::size_t> target{0, 1};
  const std::size_t k = n_ring.spec().num_factors();
  for (std::size_t i = 0; i < k; ++i) target.push_back(product_ring.first(offset + i));
  for (std::size_t i = 0; i < k; ++i) target.push_back(product_ring.second(offset + i));
  return remap(p, product_ring.nvars(), target);
}

ProductLambda compose_product_lambda(const DoubledRing& m_ring, const Polynomial& lm1, const Polynomial& lmu,
                                     const DoubledRing& n_ring, const Polynomial& ln1, const Polynomial& lnu) {
  const unsigned m = m_ring.spec().m();
  const unsigned n = n_ring.spec().m();
  check_class(m_ring, lm1, 2 * m - 2, "lambda^M(1)");
  check_class(m_ring, lmu, 2 * m, "lambda^M(u)");
  check_class(n_ring, ln1, 2 * n - 2, "lambda^N(1)");
  check_class(n_ring, lnu, 2 * n, "lambda^N(u)");

  const DoubledRing prod(product(m_ring.spec(), n_ring.spec()));
  const std::size_t nv = prod.nvars();
  const Polynomial a1 = embed_left(m_ring, prod, lm1);
  const Polynomial au = embed_left(m_ring, prod, lmu);
  const Polynomial b1 = embed_right(n_ring, prod, ln1);
  const Polynomial bu = embed_right(n_ring, prod, lnu);
  const Polynomial t1 = Polynomial::variable(nv, 0);
  const Polynomial t2 = Polynomial::variable(nv, 1);

  const Polynomial both = a1 * b1;
  ProductLambda out{prod.spec(), Polynomial(nv), Polynomial(nv)};
  out.lambda_one = normal_form((t1 + t2) * both - au * b1 - a1 * bu, prod.relations());
  out.lambda_u = normal_form(t1 * t2 * both - au * bu, prod.relations());
  return out;
}

}  // namespace kirwanlab
