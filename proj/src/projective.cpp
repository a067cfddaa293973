#include "coxlow/projective.hpp"

#include <algorithm>
#include <cmath>

#include "coxlow/error.hpp"

namespace coxlow {

template <class T>
Vec<T> projective_coordinates(RootSystem<T> const& rs, Vec<T> const& v) {
  T sum(0);
  for (auto const& x : v) sum += x;
  if (rs.sign(sum) == 0) {
    throw Error(ErrorCode::ZeroSum, "vector has coordinate sum 0");
  }
  Vec<T> out(v);
  for (auto& x : out) x /= sum;
  return out;
}

Point2 chart_point(std::vector<double> const& slice_coords) {
  static const Point2 vertices[3] = {
      {0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
  if (slice_coords.size() > 3) {
    throw Error(ErrorCode::RankNotThree, "no planar chart for rank " +
                                             std::to_string(slice_coords.size()));
  }
  Point2 p;
  for (std::size_t i = 0; i < slice_coords.size(); ++i) {
    p.x += slice_coords[i] * vertices[i].x;
    p.y += slice_coords[i] * vertices[i].y;
  }
  return p;
}

template <class T>
Point2 normalize_projective(RootSystem<T> const& rs, Vec<T> const& v) {
  auto slice = projective_coordinates(rs, v);
  std::vector<double> coords;
  for (auto const& x : slice) coords.push_back(ScalarTraits<T>::to_double(x));
  return chart_point(coords);
}

namespace {

bool lex_less(Point2 const& a, Point2 const& b, double eps) {
  if (std::abs(a.x - b.x) > eps) return a.x < b.x;
  if (std::abs(a.y - b.y) > eps) return a.y < b.y;
  return false;
}

double cross(Point2 const& o, Point2 const& a, Point2 const& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> points, double eps) {
  std::sort(points.begin(), points.end(),
            [eps](Point2 const& a, Point2 const& b) { return lex_less(a, b, eps); });
  std::vector<Point2> unique;
  for (auto const& p : points) {
    if (unique.empty() || lex_less(unique.back(), p, eps)) unique.push_back(p);
  }
  if (unique.size() <= 2) return unique;
  // Andrew's monotone chain; strict turns only.
  std::vector<Point2> hull(2 * unique.size());
  std::size_t k = 0;
  for (auto const& p : unique) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, t = k + 1; i-- > 0;) {
    auto const& p = unique[i];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool same_hull(std::vector<Point2> const& a, std::vector<Point2> const& b,
               double eps) {
  auto ca = convex_hull(a, eps), cb = convex_hull(b, eps);
  if (ca.size() != cb.size()) return false;
  auto by_lex = [eps](Point2 const& p, Point2 const& q) { return lex_less(p, q, eps); };
  std::sort(ca.begin(), ca.end(), by_lex);
  std::sort(cb.begin(), cb.end(), by_lex);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (std::abs(ca[i].x - cb[i].x) > eps || std::abs(ca[i].y - cb[i].y) > eps) {
      return false;
    }
  }
  return true;
}

template Vec<double> projective_coordinates(RootSystem<double> const&, Vec<double> const&);
template Vec<Rational> projective_coordinates(RootSystem<Rational> const&, Vec<Rational> const&);
template Point2 normalize_projective(RootSystem<double> const&, Vec<double> const&);
template Point2 normalize_projective(RootSystem<Rational> const&, Vec<Rational> const&);

}  // namespace coxlow
