#pragma once

#include "ballspace/point_set.hpp"
#include "ballspace/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ballspace {

/// Ordered list of point labels shared by spaces, families, maps and
/// sequences.  Labels are unique nonempty tokens.
struct Universe {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  const std::string& label(std::size_t i) const { return labels.at(i); }
  bool operator==(const Universe&) const = default;
};

Universe canonical_universe(std::size_t n);  // "a", "b", ... for test instances

std::string set_to_string(const PointSet& s, const Universe& u);

struct SemimetricViolation {
  enum class Kind { nonzero_diagonal, zero_off_diagonal, asymmetry };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct SemimetricReport {
  bool valid = false;
  std::vector<SemimetricViolation> violations;
};

/// Checks the two semimetric axioms on a raw table: zero diagonal with
/// positivity off the diagonal, and symmetry.  Every violation is reported
/// with the offending index pair.  A non-square table or a negative/infinite
/// entry is malformed input and throws std::invalid_argument.
SemimetricReport verify_semimetric(const std::vector<std::vector<ExactScalar>>& table);

/// Finite point set with a symmetric, positive off-diagonal distance table.
class SemimetricSpace {
 public:
  SemimetricSpace(Universe points, std::vector<std::vector<ExactScalar>> table);

  std::size_t size() const { return points_.size(); }
  const Universe& points() const { return points_; }
  const ExactScalar& distance(std::size_t i, std::size_t j) const {
    return dist_[i * points_.size() + j];
  }
  /// Distinct positive distances, ascending.
  std::vector<ExactScalar> realized_distances() const;

 private:
  Universe points_;
  std::vector<ExactScalar> dist_;
};

/// Least K such that d(x,z) <= K (d(x,y) + d(y,z)) for all triples, floored
/// at 1.  Spaces with fewer than three points report 1 (the condition is
/// vacuous there, so "holds for K iff K >= result" stays true).
ExactScalar min_b_constant(const SemimetricSpace& space);

enum class BallMode { closed, open, open_complement };

enum class BallKind { closed_ball, open_ball_complement, closed_set, explicit_set };

struct BallMeta {
  BallKind kind = BallKind::explicit_set;
  std::optional<std::size_t> center;
  std::optional<ExactScalar> radius;
};

struct Ball {
  PointSet members;
  std::optional<BallMeta> meta;
};

/// Exact member set for the requested mode: d(x,.) <= r, < r, or >= r.
/// Closed and open modes require r > 0 (std::domain_error otherwise).
Ball ball(const SemimetricSpace& space, std::size_t center, const ExactScalar& radius,
          BallMode mode);

}  // namespace ballspace
