#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kirwanlab/matrix.hpp"

namespace kirwanlab::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden reproduction of the worked examples: (CP^1)^3 with weights
/// {0,1},{0,2},{0,4} and CP^2 with weights (0,1,3).
std::vector<CheckResult> run_paper_check();

/// Degree-2 basis change x_i -> -x_i on {t, x0, x1, x2}. The published
/// (CP^1)^3 degree-2 displays use the sign convention x_i |-> -mu_i at fixed
/// points (relations (x_i + 2^i t) x_i); this toolkit uses x_i |-> mu_i. A
/// pairing matrix A maps to D A D and a coefficient block B to D B D.
ExactMatrix sign_flip(std::size_t dim);

/// The published B^2 family -[[8,8,4,a],[8,0,4,2],[4,4,0,1],[b,2,1,a/4+b/4-1]].
ExactMatrix published_b2(const Rational& a, const Rational& b);
/// (a, b) if B has the published form, otherwise nullopt.
std::optional<std::pair<Rational, Rational>> published_b2_parameters(const ExactMatrix& b);

}  // namespace kirwanlab::cli
