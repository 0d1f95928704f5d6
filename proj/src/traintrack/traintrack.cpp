#include "kirwanlab/traintrack.hpp"

#include <stdexcept>
#include <string>

#include "kirwanlab/error.hpp"

namespace kirwanlab {

TrainTrack::TrainTrack(std::vector<VertexKind> vertices, std::vector<Branch> branches)
    : vertices_(std::move(vertices)), branches_(std::move(branches)) {
  std::vector<unsigned> ends(vertices_.size(), 0);
  for (std::size_t b = 0; b < branches_.size(); ++b) {
    const auto* arc = std::get_if<Arc>(&branches_[b]);
    if (arc == nullptr) continue;
    if (arc->tail >= vertices_.size() || arc->head >= vertices_.size())
      throw ValidationError("branch " + std::to_string(b) + " references an unknown vertex");
    ++ends[arc->tail];
    ++ends[arc->head];
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v] == VertexKind::boundary && ends[v] != 1)
      throw ValidationError("boundary vertex " + std::to_string(v) + " must end exactly one arc");
    if (vertices_[v] == VertexKind::branch_point && ends[v] < 2)
      throw ValidationError("branch point " + std::to_string(v) + " needs at least two arc ends");
  }
}

TrainTrack TrainTrack::reversed() const {
  std::vector<Branch> flipped = branches_;
  for (auto& b : flipped)
    if (auto* arc = std::get_if<Arc>(&b)) std::swap(arc->tail, arc->head);
  return TrainTrack(vertices_, std::move(flipped));
}

namespace {

void check_weights(const TrainTrack& track, const Weighting& w) {
  for (std::size_t b = 0; b < track.branches().size(); ++b) {
    auto it = w.find(b);
    if (it == w.end()) throw MissingBranch("no weight for branch " + std::to_string(b));
    if (it->second <= 0) throw InvalidWeighting("weight of branch " + std::to_string(b) + " is not positive");
  }
  for (const auto& [b, value] : w)
    if (b >= track.branches().size()) throw InvalidWeighting("weight for unknown branch " + std::to_string(b));
}

}  // namespace

bool validate_weighting(const TrainTrack& track, const Weighting& w) {
  check_weights(track, w);
  std::vector<Rational> balance(track.vertices().size(), Rational(0));
  for (std::size_t b = 0; b < track.branches().size(); ++b) {
    const auto* arc = std::get_if<Arc>(&track.branches()[b]);
    if (arc == nullptr) continue;
    balance[arc->head] += w.at(b);
    balance[arc->tail] -= w.at(b);
  }
  for (std::size_t v = 0; v < balance.size(); ++v)
    if (track.vertices()[v] == VertexKind::branch_point && balance[v] != 0) return false;
  return true;
}

std::pair<Rational, Rational> boundary_balance(const TrainTrack& track, const Weighting& w) {
  if (!validate_weighting(track, w)) throw InvalidWeighting("weights are not conserved at a branch point");
  Rational into = 0;
  Rational out_of = 0;
  for (std::size_t b = 0; b < track.branches().size(); ++b) {
    const auto* arc = std::get_if<Arc>(&track.branches()[b]);
    if (arc == nullptr) continue;
    if (track.vertices()[arc->head] == VertexKind::boundary) into += w.at(b);
    if (track.vertices()[arc->tail] == VertexKind::boundary) out_of += w.at(b);
  }
  return {into, out_of};
}

Rational line_weight(const std::vector<unsigned>& orders) {
  Rational w = 1;
  for (auto o : orders) {
    if (o == 0) throw std::invalid_argument("stabilizer order must be positive");
    w /= o;
  }
  return w;
}

unsigned ramification_local_homology(unsigned n, unsigned r, unsigned k) {
  if (n < 1 || r < 1) throw std::invalid_argument("ramification needs n >= 1 and r >= 1");
  return k == n ? r : 0;
}

}  // namespace kirwanlab
