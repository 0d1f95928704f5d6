#include "kirwanlab/io.hpp"

#include <fstream>
#include <sstream>

#include "kirwanlab/error.hpp"

namespace kirwanlab::io {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field_of(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(field + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what());
  }
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m.exponents()}, {"coefficient", to_string(c)}});
  return terms;
}

Polynomial polynomial_from_json(const json& j, std::size_t nvars, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected a list of terms");
  Polynomial p(nvars);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string where = field + "[" + std::to_string(k) + "]";
    const auto& exps = field_of(j[k], "exponents", where);
    if (!exps.is_array() || exps.size() != nvars)
      throw ParseError(where + ": expected " + std::to_string(nvars) + " exponents");
    std::vector<std::uint32_t> e;
    for (const auto& x : exps) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long>() >= 0))
        throw ParseError(where + ": exponents must be non-negative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    p.add_term(Monomial(std::move(e)), rational_from_json(field_of(j[k], "coefficient", where), where + ".coefficient"));
  }
  return p;
}

json to_json(const ManifoldSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors()) factors.push_back({{"n", f.n}, {"weights", f.weights}});
  return {{"factors", factors}};
}

ManifoldSpec spec_from_json(const json& j) {
  const auto& factors = field_of(j, "factors", "spec");
  if (!factors.is_array()) throw ParseError("spec.factors: expected a list");
  std::vector<ProjectiveFactor> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string where = "spec.factors[" + std::to_string(i) + "]";
    const auto& n = field_of(factors[i], "n", where);
    const auto& weights = field_of(factors[i], "weights", where);
    if (!n.is_number_integer()) throw ParseError(where + ".n: expected an integer");
    if (n.get<long>() < 1) throw ValidationError("factor " + std::to_string(i) + ": dimension n must be positive");
    if (!weights.is_array()) throw ParseError(where + ".weights: expected a list of integers");
    ProjectiveFactor f{static_cast<unsigned>(n.get<long>()), {}};
    for (const auto& w : weights) {
      if (!w.is_number_integer())
        throw ValidationError("factor " + std::to_string(i) + ": weights must be integers");
      f.weights.push_back(w.get<std::int64_t>());
    }
    out.push_back(std::move(f));
  }
  return ManifoldSpec(std::move(out));
}

ManifoldSpec load_spec(const std::filesystem::path& path) { return spec_from_json(read_json(path)); }

json to_json(const BdcClass& beta, const ManifoldSpec& spec) {
  json bases = json::object();
  for (const auto& [q, basis] : beta.bases.all()) {
    json list = json::array();
    for (const auto& m : basis) list.push_back(format_monomial(m, spec.variable_names()));
    bases[std::to_string(q)] = list;
  }
  json blocks = json::object();
  for (const auto& [q, b] : beta.blocks) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(to_string(b(i, k)));
      rows.push_back(row);
    }
    blocks[std::to_string(q)] = rows;
  }
  return {{"bases", bases}, {"blocks", blocks}};
}

namespace {

std::uint32_t degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw ParseError(where + ": degree key '" + key + "' is not an integer");
  }
}

}  // namespace

BdcClass class_from_json(const json& j, const ManifoldSpec& spec) {
  BdcClass beta{BasisSet::standard(spec), {}};
  const auto& bases = field_of(j, "bases", "class");
  for (const auto& [key, list] : bases.items()) {
    const std::string where = "class.bases." + key;
    const auto q = degree_key(key, where);
    if (!list.is_array()) throw ParseError(where + ": expected a list of monomials");
    std::vector<Monomial> basis;
    for (const auto& s : list) {
      if (!s.is_string()) throw ParseError(where + ": monomials are strings");
      basis.push_back(parse_monomial(s.get<std::string>(), spec.variable_names()));
    }
    try {
      beta.bases = beta.bases.with(spec, q, std::move(basis));
    } catch (const CustomBasisNotABasis& e) {
      throw BasisMismatch(where + ": " + e.what());
    }
  }
  const auto& blocks = field_of(j, "blocks", "class");
  for (const auto& [key, rows] : blocks.items()) {
    const std::string where = "class.blocks." + key;
    const auto q = degree_key(key, where);
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) throw ParseError(where + ": expected a matrix");
    ExactMatrix b(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != b.cols()) throw ParseError(where + ": ragged matrix");
      for (std::size_t c = 0; c < b.cols(); ++c)
        b(r, c) = rational_from_json(rows[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    beta.blocks[q] = std::move(b);
  }
  return beta;
}

WeightedTrack track_from_json(const json& j) {
  const auto& vs = field_of(j, "vertices", "track");
  const auto& bs = field_of(j, "branches", "track");
  if (!vs.is_array() || !bs.is_array()) throw ParseError("track: vertices and branches must be lists");
  std::vector<VertexKind> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto tag = vs[i].is_string() ? vs[i].get<std::string>() : std::string();
    if (tag == "boundary")
      vertices.push_back(VertexKind::boundary);
    else if (tag == "branch" || tag == "branch-point")
      vertices.push_back(VertexKind::branch_point);
    else
      throw ParseError("track.vertices[" + std::to_string(i) + "]: expected \"boundary\" or \"branch\"");
  }
  std::vector<Branch> branches;
  Weighting weights;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const std::string where = "track.branches[" + std::to_string(i) + "]";
    if (bs[i].is_object() && bs[i].value("loop", false)) {
      branches.emplace_back(ClosedLoop{});
    } else {
      const auto& tail = field_of(bs[i], "tail", where);
      const auto& head = field_of(bs[i], "head", where);
      if (!tail.is_number_unsigned() || !head.is_number_unsigned())
        throw ParseError(where + ": tail and head are vertex indices");
      branches.emplace_back(Arc{tail.get<std::size_t>(), head.get<std::size_t>()});
    }
    if (bs[i].contains("weight")) weights[i] = rational_from_json(bs[i].at("weight"), where + ".weight");
  }
  return {TrainTrack(std::move(vertices), std::move(branches)), std::move(weights)};
}

}  // namespace kirwanlab::io
