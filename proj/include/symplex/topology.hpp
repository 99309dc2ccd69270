#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace symplex {

/// Subset of the points of a finite space, one bit per point (at most 64 points).
using PointSet = std::uint64_t;

/// Index of an open set inside FiniteSpace::opens().
struct OpenRef {
  std::size_t index = 0;
  friend bool operator==(OpenRef, OpenRef) = default;
};

/// A finite topological space given extensionally by its list of open sets.
/// Immutable once validated; share it through SpacePtr.
class FiniteSpace {
 public:
  /// Checks the topology axioms and precomputes the connected components of
  /// every open. Duplicate opens are merged; first occurrence fixes the index.
  static FiniteSpace validate(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& opens);
  static FiniteSpace validate_masks(std::vector<std::string> points, const std::vector<PointSet>& opens);

  const std::vector<std::string>& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  const std::vector<PointSet>& opens() const noexcept { return opens_; }
  std::size_t open_count() const noexcept { return opens_.size(); }

  PointSet full_set() const noexcept;
  PointSet set_of(OpenRef u) const;
  OpenRef top() const noexcept { return top_; }
  OpenRef empty() const noexcept { return empty_; }

  /// Throws InvalidOpen if `set` is not open.
  OpenRef find(PointSet set) const;
  OpenRef find(const std::vector<std::string>& names) const;
  bool is_open(PointSet set) const;
  bool contains(OpenRef outer, OpenRef inner) const;

  /// Connected components of U ordered by least contained point.
  const std::vector<PointSet>& components(OpenRef u) const;
  std::size_t component_count(OpenRef u) const { return components(u).size(); }

  /// For V inside U: entry i is the index of the U-component containing the
  /// i-th V-component. Throws NotASubset otherwise.
  std::vector<std::size_t> component_refinement(OpenRef v, OpenRef u) const;
  /// Shorthand for component_refinement(v, top()).
  std::vector<std::size_t> to_global_components(OpenRef v) const;

  /// Open subsets of U, including the empty set and U itself.
  std::vector<OpenRef> opens_inside(OpenRef u) const;

  std::vector<std::string> names_of(PointSet set) const;
  std::string describe(PointSet set) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

 private:
  FiniteSpace() = default;
  void check_ref(OpenRef u) const;

  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
  std::vector<std::vector<PointSet>> components_;
  OpenRef top_;
  OpenRef empty_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

inline SpacePtr share(FiniteSpace space) { return std::make_shared<const FiniteSpace>(std::move(space)); }

/// Same space by identity or by value.
inline bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

namespace fixtures {
SpacePtr point();               ///< {x}
SpacePtr sierpinski();          ///< {a,b} with opens {}, {a}, {a,b}
SpacePtr discrete_two_point();  ///< {a,b} discrete
SpacePtr three_point();         ///< {a,b,c} with opens {}, {a}, {b}, {a,b}, {a,b,c}
}  // namespace fixtures

}  // namespace symplex
