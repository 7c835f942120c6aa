#pragma once

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace ballspace {

/// Subsets of a finite point universe are bitsets indexed by point position.
using PointSet = boost::dynamic_bitset<>;

inline PointSet make_set(std::size_t n, std::initializer_list<std::size_t> indices) {
  PointSet s(n);
  for (std::size_t i : indices) s.set(i);
  return s;
}

inline PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

std::vector<std::size_t> set_indices(const PointSet& s);

inline bool subset_of(const PointSet& a, const PointSet& b) { return a.is_subset_of(b); }
inline bool proper_subset_of(const PointSet& a, const PointSet& b) {
  return a.is_proper_subset_of(b);
}

/// Deterministic witness order: fewer elements first, then lexicographic on
/// the sorted index list.
bool canonical_less(const PointSet& a, const PointSet& b);

/// Total order usable as a map/set comparator (numeric bitset order).
struct PointSetLess {
  bool operator()(const PointSet& a, const PointSet& b) const { return a < b; }
};

}  // namespace ballspace
