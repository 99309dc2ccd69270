#include "symplex/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "symplex/error.hpp"

namespace symplex {

namespace {

constexpr std::size_t kMaxPoints = 64;

std::size_t least_point(PointSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

}  // namespace

FiniteSpace FiniteSpace::validate(std::vector<std::string> points,
                                  const std::vector<std::vector<std::string>>& opens) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw Error(ErrorCode::InvalidOpen, "duplicate point '" + points[i] + "'");
    }
  }
  std::vector<PointSet> masks;
  masks.reserve(opens.size());
  for (const auto& open : opens) {
    PointSet m = 0;
    for (const auto& name : open) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::UnknownPoint, "unknown point '" + name + "'");
      m |= PointSet{1} << it->second;
    }
    masks.push_back(m);
  }
  return validate_masks(std::move(points), masks);
}

FiniteSpace FiniteSpace::validate_masks(std::vector<std::string> points, const std::vector<PointSet>& opens) {
  if (points.empty()) throw Error(ErrorCode::InvalidOpen, "a space needs at least one point");
  if (points.size() > kMaxPoints) {
    throw Error(ErrorCode::InvalidOpen, "at most 64 points are supported");
  }
  FiniteSpace space;
  space.points_ = std::move(points);
  const PointSet full = space.full_set();
  for (PointSet m : opens) {
    if ((m & ~full) != 0) throw Error(ErrorCode::UnknownPoint, "open set mentions an unknown point");
    if (std::find(space.opens_.begin(), space.opens_.end(), m) == space.opens_.end()) {
      space.opens_.push_back(m);
    }
  }

  auto has = [&](PointSet m) {
    return std::find(space.opens_.begin(), space.opens_.end(), m) != space.opens_.end();
  };
  if (!has(0)) throw Error(ErrorCode::MissingEmptyOrTotal, "the empty set is not listed as open");
  if (!has(full)) {
    throw Error(ErrorCode::MissingEmptyOrTotal, "the full point set " + space.describe(full) + " is not listed as open");
  }
  for (std::size_t i = 0; i < space.opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < space.opens_.size(); ++j) {
      PointSet a = space.opens_[i];
      PointSet b = space.opens_[j];
      std::string pair = space.describe(a) + ", " + space.describe(b);
      if (!has(a | b)) throw Error(ErrorCode::NotClosedUnderUnion, "union of " + pair + " is not open", pair);
      if (!has(a & b)) {
        throw Error(ErrorCode::NotClosedUnderIntersection, "intersection of " + pair + " is not open", pair);
      }
    }
  }
  space.top_ = space.find(full);
  space.empty_ = space.find(0);

  // Minimal open neighbourhood of each point; components of U are the
  // connected pieces of the specialization graph restricted to U.
  const std::size_t n = space.points_.size();
  std::vector<PointSet> minimal(n, full);
  for (PointSet m : space.opens_) {
    for (std::size_t x = 0; x < n; ++x) {
      if (m & (PointSet{1} << x)) minimal[x] &= m;
    }
  }

  space.components_.reserve(space.opens_.size());
  for (PointSet u : space.opens_) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t x = 0; x < n; ++x) {
      if (!(u & (PointSet{1} << x))) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (minimal[x] & (PointSet{1} << y)) {
          std::size_t rx = root(x), ry = root(y);
          if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
        }
      }
    }
    std::vector<PointSet> comps;
    for (std::size_t x = 0; x < n; ++x) {
      if (!(u & (PointSet{1} << x))) continue;
      std::size_t r = root(x);
      PointSet bit = PointSet{1} << x;
      auto it = std::find_if(comps.begin(), comps.end(),
                             [&](PointSet c) { return root(least_point(c)) == r; });
      if (it == comps.end()) {
        comps.push_back(bit);
      } else {
        *it |= bit;
      }
    }
    for (PointSet c : comps) {
      if (!has(c)) {
        throw Error(ErrorCode::ComponentNotOpen,
                    "component " + space.describe(c) + " of " + space.describe(u) + " is not open");
      }
    }
    space.components_.push_back(std::move(comps));
  }
  return space;
}

PointSet FiniteSpace::full_set() const noexcept {
  return points_.size() == 64 ? ~PointSet{0} : (PointSet{1} << points_.size()) - 1;
}

void FiniteSpace::check_ref(OpenRef u) const {
  if (u.index >= opens_.size()) {
    throw Error(ErrorCode::InvalidOpen, "open index " + std::to_string(u.index) + " out of range");
  }
}

PointSet FiniteSpace::set_of(OpenRef u) const {
  check_ref(u);
  return opens_[u.index];
}

OpenRef FiniteSpace::find(PointSet set) const {
  auto it = std::find(opens_.begin(), opens_.end(), set);
  if (it == opens_.end()) throw Error(ErrorCode::InvalidOpen, describe(set) + " is not open");
  return OpenRef{static_cast<std::size_t>(it - opens_.begin())};
}

OpenRef FiniteSpace::find(const std::vector<std::string>& names) const {
  PointSet m = 0;
  for (const auto& name : names) {
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) throw Error(ErrorCode::UnknownPoint, "unknown point '" + name + "'");
    m |= PointSet{1} << (it - points_.begin());
  }
  return find(m);
}

bool FiniteSpace::is_open(PointSet set) const {
  return std::find(opens_.begin(), opens_.end(), set) != opens_.end();
}

bool FiniteSpace::contains(OpenRef outer, OpenRef inner) const {
  return (set_of(inner) & ~set_of(outer)) == 0;
}

const std::vector<PointSet>& FiniteSpace::components(OpenRef u) const {
  check_ref(u);
  return components_[u.index];
}

std::vector<std::size_t> FiniteSpace::component_refinement(OpenRef v, OpenRef u) const {
  if (!contains(u, v)) {
    throw Error(ErrorCode::NotASubset, describe(set_of(v)) + " is not inside " + describe(set_of(u)));
  }
  const auto& small = components(v);
  const auto& big = components(u);
  std::vector<std::size_t> map;
  map.reserve(small.size());
  for (PointSet c : small) {
    auto it = std::find_if(big.begin(), big.end(), [&](PointSet b) { return (c & ~b) == 0; });
    if (it == big.end()) throw Error(ErrorCode::Internal, "component not contained in any component");
    map.push_back(static_cast<std::size_t>(it - big.begin()));
  }
  return map;
}

std::vector<std::size_t> FiniteSpace::to_global_components(OpenRef v) const {
  return component_refinement(v, top_);
}

std::vector<OpenRef> FiniteSpace::opens_inside(OpenRef u) const {
  std::vector<OpenRef> out;
  PointSet us = set_of(u);
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if ((opens_[i] & ~us) == 0) out.push_back(OpenRef{i});
  }
  return out;
}

std::vector<std::string> FiniteSpace::names_of(PointSet set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (set & (PointSet{1} << i)) out.push_back(points_[i]);
  }
  return out;
}

std::string FiniteSpace::describe(PointSet set) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(set & (PointSet{1} << i))) continue;
    if (!first) s += ",";
    s += points_[i];
    first = false;
  }
  return s + "}";
}

namespace fixtures {

SpacePtr point() {
  static const SpacePtr s = share(FiniteSpace::validate({"x"}, {{}, {"x"}}));
  return s;
}

SpacePtr sierpinski() {
  static const SpacePtr s = share(FiniteSpace::validate({"a", "b"}, {{}, {"a"}, {"a", "b"}}));
  return s;
}

SpacePtr discrete_two_point() {
  static const SpacePtr s = share(FiniteSpace::validate({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}));
  return s;
}

SpacePtr three_point() {
  static const SpacePtr s =
      share(FiniteSpace::validate({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}));
  return s;
}

}  // namespace fixtures

}  // namespace symplex
