#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kirwanlab/bdc.hpp"
#include "kirwanlab/hamspace.hpp"
#include "kirwanlab/polynomial.hpp"
#include "kirwanlab/traintrack.hpp"

namespace kirwanlab::io {

using nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError (with line and column).
json read_json(const std::filesystem::path& path);
json parse_json(const std::string& text);
void write_json(const std::filesystem::path& path, const json& j);

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

/// [{"exponents": [..], "coefficient": "p/q"}, ...] in term order.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, std::size_t nvars, const std::string& field);

/// {"factors": [{"n": 2, "weights": [0, 1, 3]}, ...]}
json to_json(const ManifoldSpec& spec);
ManifoldSpec spec_from_json(const json& j);
ManifoldSpec load_spec(const std::filesystem::path& path);

/// {"bases": {"0": ["1"], ...}, "blocks": {"0": [["p/q", ...], ...], ...}}
/// Monomials are written in the spec's variable names.
json to_json(const BdcClass& beta, const ManifoldSpec& spec);
BdcClass class_from_json(const json& j, const ManifoldSpec& spec);

/// {"vertices": ["boundary" | "branch", ...],
///  "branches": [{"tail": 0, "head": 1, "weight": "1/2"} | {"loop": true, "weight": "1"}]}
struct WeightedTrack {
  TrainTrack track;
  Weighting weights;
};
WeightedTrack track_from_json(const json& j);

}  // namespace kirwanlab::io
