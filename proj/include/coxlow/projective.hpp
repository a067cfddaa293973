#ifndef COXLOW_PROJECTIVE_HPP_
#define COXLOW_PROJECTIVE_HPP_

#include <compare>
#include <vector>

#include "coxlow/root_system.hpp"

namespace coxlow {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kDefaultHullTolerance = 1e-6;

// v divided by its coordinate sum: the point of the affine slice
// {Σ coords = 1}. Exact in the rational backend. Throws ZeroSum when the
// coordinate sum vanishes.
template <class T>
Vec<T> projective_coordinates(RootSystem<T> const& rs, Vec<T> const& v);

// Image of a slice point under the fixed chart sending α̂0, α̂1, α̂2 to
// (0,0), (1,0), (1/2, √3/2). Ranks 1 and 2 use the first one or two
// vertices. Higher ranks have no planar chart and throw RankNotThree.
Point2 chart_point(std::vector<double> const& slice_coords);

template <class T>
Point2 normalize_projective(RootSystem<T> const& rs, Vec<T> const& v);

// Vertices of the convex hull of `points`, counter-clockwise starting from
// the lexicographically smallest; points closer than eps are merged and
// collinear boundary points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points,
                                double eps = kDefaultHullTolerance);

// Same vertex set within eps, after lexicographic canonicalization.
bool same_hull(std::vector<Point2> const& a, std::vector<Point2> const& b,
               double eps = kDefaultHullTolerance);

}  // namespace coxlow

#endif  // COXLOW_PROJECTIVE_HPP_
