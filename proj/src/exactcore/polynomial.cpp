#include "kirwanlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kirwanlab/error.hpp"
#include "kirwanlab/matrix.hpp"

namespace kirwanlab {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint32_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("Monomial: alphabet mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (nvars_ == 0 && terms_.empty()) nvars_ = m.nvars();
  if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial: alphabet mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint32_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous_of(std::uint32_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& term) { return term.first.degree() == degree; });
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (!terms_.empty() && values.size() != nvars_)
    throw std::invalid_argument("Polynomial::evaluate: wrong number of values");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) term *= values[i];
    sum += term;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars_ == 0 && other.terms_.empty()) return;
  if (nvars_ == 0 && terms_.empty()) return;
  if (other.nvars_ != nvars_) throw std::invalid_argument("Polynomial: alphabet mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_ != 0 ? a.nvars_ : b.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

// --------------------------------------------------------------- Relations

Polynomial Relation::polynomial() const {
  return Polynomial::monomial(Monomial::variable(tail.nvars(), variable, degree)) - tail;
}

Relation Relation::from_roots(std::size_t nvars, std::size_t variable, std::size_t param,
                              std::span<const Rational> roots) {
  if (roots.empty()) throw ValidationError("relation needs at least one root");
  Polynomial product = Polynomial::constant(nvars, 1);
  const Polynomial x = Polynomial::variable(nvars, variable);
  const Polynomial s = Polynomial::variable(nvars, param);
  for (const auto& r : roots) product = product * (x - s * r);
  const auto degree = static_cast<std::uint32_t>(roots.size());
  Relation rel{variable, degree, Polynomial(nvars)};
  rel.tail = Polynomial::monomial(Monomial::variable(nvars, variable, degree)) - product;
  return rel;
}

RelationSet::RelationSet(std::size_t nvars, std::vector<Relation> relations)
    : nvars_(nvars), relations_(std::move(relations)), bounds_(nvars) {
  for (const auto& rel : relations_) {
    if (rel.variable >= nvars_) throw ValidationError("relation on unknown variable");
    if (rel.degree == 0) throw ValidationError("relation of degree 0");
    if (bounds_[rel.variable]) throw ValidationError("two relations share a leading variable");
    bounds_[rel.variable] = rel.degree;
  }
  for (const auto& rel : relations_) {
    if (!rel.tail.is_zero() && rel.tail.nvars() != nvars_)
      throw ValidationError("relation tail has the wrong alphabet");
    for (const auto& [m, c] : rel.tail.terms()) {
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (v == rel.variable) {
          if (m[v] >= rel.degree) throw ValidationError("relation tail is not below its leading power");
        } else if (bounds_[v] && m[v] != 0) {
          throw ValidationError("relation tail involves another leading variable");
        }
      }
    }
  }
}

std::optional<std::uint32_t> RelationSet::bound(std::size_t var) const {
  return var < bounds_.size() ? bounds_[var] : std::nullopt;
}

namespace {

using Memo = std::map<Monomial, Polynomial, GradedOrder>;

Polynomial reduce_monomial(const Monomial& m, const RelationSet& rels, Memo& memo) {
  const Relation* hit = nullptr;
  for (const auto& rel : rels.relations())
    if (m[rel.variable] >= rel.degree) {
      hit = &rel;
      break;
    }
  if (hit == nullptr) return Polynomial::monomial(m);
  if (auto it = memo.find(m); it != memo.end()) return it->second;

  Monomial rest = m;
  rest[hit->variable] -= hit->degree;
  Polynomial acc(m.nvars());
  for (const auto& [tm, tc] : hit->tail.terms()) acc += reduce_monomial(rest * tm, rels, memo) * tc;
  memo.emplace(m, acc);
  return acc;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const RelationSet& rels) {
  if (p.is_zero()) return p;
  if (p.nvars() != rels.nvars()) throw std::invalid_argument("normal_form: alphabet mismatch");
  Memo memo;
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) out += reduce_monomial(m, rels, memo) * c;
  return out;
}

Polynomial ring_product(const Polynomial& a, const Polynomial& b, const RelationSet& rels) {
  return normal_form(a * b, rels);
}

bool is_standard(const Monomial& m, const RelationSet& rels) {
  for (const auto& rel : rels.relations())
    if (m[rel.variable] >= rel.degree) return false;
  return true;
}

// ------------------------------------------------------------------ Bases

namespace {

void enumerate(const RelationSet& rels, std::size_t var, std::uint32_t remaining, Monomial& current,
               std::vector<Monomial>& out) {
  const std::size_t n = rels.nvars();
  if (var + 1 == n) {
    const auto b = rels.bound(var);
    if (!b || remaining < *b) {
      current[var] = remaining;
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  const auto b = rels.bound(var);
  const std::uint32_t top = b ? std::min(remaining, *b - 1) : remaining;
  for (std::uint32_t e = 0; e <= top; ++e) {
    current[var] = e;
    enumerate(rels, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_basis(const RelationSet& rels, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (degree % 2 != 0 || rels.nvars() == 0) return out;
  Monomial current(rels.nvars());
  enumerate(rels, 0, degree / 2, current, out);
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

std::vector<Monomial> validate_basis(const RelationSet& rels, std::uint32_t degree,
                                     std::vector<Monomial> custom) {
  const auto standard = standard_basis(rels, degree);
  if (custom.size() != standard.size())
    throw CustomBasisNotABasis("degree " + std::to_string(degree) + " needs " +
                               std::to_string(standard.size()) + " elements, got " +
                               std::to_string(custom.size()));
  for (const auto& m : custom)
    if (m.nvars() != rels.nvars() || m.degree() != degree)
      throw CustomBasisNotABasis("basis element has the wrong degree or alphabet");

  std::map<Monomial, std::size_t, GradedOrder> column;
  for (std::size_t j = 0; j < standard.size(); ++j) column.emplace(standard[j], j);
  ExactMatrix coords(custom.size(), standard.size());
  for (std::size_t i = 0; i < custom.size(); ++i) {
    const Polynomial nf = normal_form(Polynomial::monomial(custom[i]), rels);
    for (const auto& [m, c] : nf.terms()) coords(i, column.at(m)) = c;
  }
  if (rank(coords) != standard.size())
    throw CustomBasisNotABasis("degree " + std::to_string(degree) + " elements are linearly dependent");
  return custom;
}

std::vector<Monomial> graded_basis(const RelationSet& rels, std::uint32_t degree, BasisStyle style,
                                   std::vector<Monomial> custom) {
  if (style == BasisStyle::standard) return standard_basis(rels, degree);
  return validate_basis(rels, degree, std::move(custom));
}

// ----------------------------------------------------------------- Text I/O

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += format_monomial(m, names);
    }
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                     ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      const auto d = digits();
      if (d.empty()) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(d))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string literal(digits());
      // "p/q" is read as one literal when both sides are integers.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        literal += '/';
        literal += digits();
      }
      return Polynomial::constant(names_.size(), parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  Polynomial p = ExprParser(text, names).parse();
  if (p.is_zero()) return Polynomial(names.size());
  return p;
}

Monomial parse_monomial(std::string_view text, std::span<const std::string> names) {
  const Polynomial p = parse_polynomial(text, names);
  if (p.size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("'" + std::string(text) + "' is not a monomial");
  return p.terms().begin()->first;
}

}  // namespace kirwanlab
