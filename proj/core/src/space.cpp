#include "ballspace/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ballspace {

std::vector<std::size_t> set_indices(const PointSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

bool canonical_less(const PointSet& a, const PointSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  std::size_t i = a.find_first();
  std::size_t j = b.find_first();
  while (i != PointSet::npos && j != PointSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

Universe canonical_universe(std::size_t n) {
  Universe u;
  u.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label(1, static_cast<char>('a' + i % 26));
    if (i >= 26) label += std::to_string(i / 26);
    u.labels.push_back(std::move(label));
  }
  return u;
}

std::string set_to_string(const PointSet& s, const Universe& u) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : set_indices(s)) {
    if (!first) os << ',';
    os << u.label(i);
    first = false;
  }
  os << '}';
  return os.str();
}

SemimetricReport verify_semimetric(const std::vector<std::vector<ExactScalar>>& table) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("distance table is not square");
    for (const auto& v : row) {
      if (v.is_infinite()) throw std::invalid_argument("distance entries must be finite");
      if (v.sign() < 0) throw std::invalid_argument("distance entries must be nonnegative");
    }
  }
  SemimetricReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i][i].is_zero()) {
      report.violations.push_back({SemimetricViolation::Kind::nonzero_diagonal, i, i});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table[i][j] != table[j][i]) {
        report.violations.push_back({SemimetricViolation::Kind::asymmetry, i, j});
      }
      if (table[i][j].is_zero()) {
        report.violations.push_back({SemimetricViolation::Kind::zero_off_diagonal, i, j});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

SemimetricSpace::SemimetricSpace(Universe points,
                                 std::vector<std::vector<ExactScalar>> table)
    : points_(std::move(points)) {
  if (points_.size() == 0) throw std::invalid_argument("space must have at least one point");
  if (table.size() != points_.size()) {
    throw std::invalid_argument("distance table does not match the point list");
  }
  {
    std::set<std::string> seen(points_.labels.begin(), points_.labels.end());
    if (seen.size() != points_.labels.size()) {
      throw std::invalid_argument("duplicate point label");
    }
  }
  const auto report = verify_semimetric(table);
  if (!report.valid) {
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << "semimetric axiom violated at (" << points_.label(v.i) << ','
       << points_.label(v.j) << ')';
    throw std::invalid_argument(os.str());
  }
  dist_.reserve(points_.size() * points_.size());
  for (const auto& row : table) {
    for (const auto& v : row) dist_.push_back(v);
  }
}

std::vector<ExactScalar> SemimetricSpace::realized_distances() const {
  std::vector<ExactScalar> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      const ExactScalar& d = distance(i, j);
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactScalar min_b_constant(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  ExactScalar best(1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == y) continue;
        const ExactScalar ratio =
            space.distance(x, z) / (space.distance(x, y) + space.distance(y, z));
        if (ratio > best) best = ratio;
      }
    }
  }
  return best;
}

Ball ball(const SemimetricSpace& space, std::size_t center, const ExactScalar& radius,
          BallMode mode) {
  if (radius.is_infinite()) throw std::domain_error("ball radius must be finite");
  if (mode != BallMode::open_complement && radius.sign() <= 0) {
    throw std::domain_error("ball radius must be positive");
  }
  Ball b;
  b.members.resize(space.size());
  for (std::size_t y = 0; y < space.size(); ++y) {
    const ExactScalar& d = space.distance(center, y);
    const bool in = mode == BallMode::closed            ? d <= radius
                    : mode == BallMode::open            ? d < radius
                                                        : d >= radius;
    if (in) b.members.set(y);
  }
  BallMeta meta;
  meta.kind = mode == BallMode::open_complement ? BallKind::open_ball_complement
                                                : BallKind::closed_ball;
  if (mode == BallMode::open) meta.kind = BallKind::explicit_set;
  meta.center = center;
  meta.radius = radius;
  b.meta = meta;
  return b;
}

}  // namespace ballspace
