#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "kirwanlab/rational.hpp"

namespace kirwanlab {

enum class VertexKind { boundary, branch_point };

struct ClosedLoop {};

/// Oriented tail -> head.
struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
};

using Branch = std::variant<ClosedLoop, Arc>;

/// Compact oriented 1-dimensional branched manifold with boundary, given
/// combinatorially by its boundary points, branch points and branches.
class TrainTrack {
 public:
  /// Throws ValidationError when a boundary vertex is not the endpoint of
  /// exactly one arc, or a branch point has fewer than two arc ends.
  TrainTrack(std::vector<VertexKind> vertices, std::vector<Branch> branches);

  const std::vector<VertexKind>& vertices() const noexcept { return vertices_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }

  /// Same track with every arc reversed.
  TrainTrack reversed() const;

 private:
  std::vector<VertexKind> vertices_;
  std::vector<Branch> branches_;
};

/// Branch index -> positive weight.
using Weighting = std::map<std::size_t, Rational>;

/// Conservation at every branch point: inflow (heads) equals outflow (tails).
/// Throws MissingBranch for a partial weighting and InvalidWeighting for a
/// non-positive weight.
bool validate_weighting(const TrainTrack& track, const Weighting& w);

/// (sum over boundary heads, sum over boundary tails). Throws InvalidWeighting
/// when w is not a weighting.
std::pair<Rational, Rational> boundary_balance(const TrainTrack& track, const Weighting& w);

/// prod_j 1/o_j over the stabilizer orders a perturbed gradient line crosses.
Rational line_weight(const std::vector<unsigned>& orders);

/// Rank of the reduced local homology H_k(X, X \ {x}; Q) at a boundary point of
/// a smooth ramification of dimension n and rank r.
unsigned ramification_local_homology(unsigned n, unsigned r, unsigned k);

}  // namespace kirwanlab
