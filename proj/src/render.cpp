#include "coxlow/render.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "coxlow/error.hpp"

namespace coxlow {

namespace {

constexpr double kMargin = 40.0;

std::string num(double x) {
  if (std::abs(x) < 5e-4) x = 0.0;
  return fmt::format("{:.3f}", x);
}

// Grey level for a root of the given depth: deeper roots are lighter.
std::string depth_fill(int depth, int max_depth) {
  int span = std::max(1, max_depth - 1);
  int level = 40 + (180 * (depth - 1)) / span;
  return fmt::format("#{0:02x}{0:02x}{0:02x}", std::clamp(level, 0, 255));
}

}  // namespace

void validate(RenderOptions const& opts) {
  if (opts.max_depth < 1) {
    throw Error(ErrorCode::ValidationError, "max_depth: must be >= 1");
  }
  if (opts.canvas < 100) {
    throw Error(ErrorCode::ValidationError, "canvas: must be >= 100 pixels");
  }
}

Point2 to_pixel(Point2 chart, int canvas) {
  double side = canvas - 2 * kMargin;
  // The triangle is sqrt(3)/2 tall; centre it vertically.
  double height = side * std::sqrt(3.0) / 2.0;
  double top = (canvas - height) / 2.0;
  return Point2{kMargin + chart.x * side, top + height - chart.y * side};
}

template <class T>
std::vector<RenderedRoot> render_points(RootSystem<T> const& rs,
                                        SmallRootSet<T> const& sigma,
                                        RenderOptions const& opts) {
  validate(opts);
  if (rs.rank() != 3) {
    throw Error(ErrorCode::RankNotThree, "the triangle chart needs rank 3");
  }
  std::vector<RenderedRoot> out;
  for (auto const& root : roots_up_to_depth(rs, opts.max_depth)) {
    RenderedRoot r;
    r.pixel = to_pixel(normalize_projective(rs, root.coords), opts.canvas);
    r.depth = root.depth;
    r.small = sigma.index_of(root.coords).has_value();
    std::string label = "(";
    for (std::size_t i = 0; i < root.coords.size(); ++i) {
      if (i) label += ",";
      label += ScalarTraits<T>::to_string(root.coords[i]);
    }
    r.label = label + ")";
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
std::string render_svg(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
                       Automaton const& lambdas, RenderOptions const& opts) {
  auto points = render_points(rs, sigma, opts);
  int const c = opts.canvas;
  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"0 0 {0} {0}\">\n",
      c);
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n", c);

  Point2 corners[3] = {to_pixel(chart_point({1, 0, 0}), c),
                       to_pixel(chart_point({0, 1, 0}), c),
                       to_pixel(chart_point({0, 0, 1}), c)};
  svg += "<polygon class=\"simplex\" points=\"";
  for (int i = 0; i < 3; ++i) {
    if (i) svg += " ";
    svg += num(corners[i].x) + "," + num(corners[i].y);
  }
  svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  if (opts.show_lambda_polytopes) {
    svg += "<g class=\"lambda\" fill=\"#3070d0\" fill-opacity=\"0.08\" "
           "stroke=\"#3070d0\" stroke-opacity=\"0.6\" stroke-width=\"1\">\n";
    for (std::size_t q = 0; q < lambdas.size(); ++q) {
      std::vector<Point2> pts;
      for (std::size_t i : lambdas.state(q).indices()) {
        pts.push_back(to_pixel(normalize_projective(rs, sigma[i].coords), c));
      }
      auto hull = convex_hull(pts, opts.eps_hull);
      if (hull.size() < 2) continue;
      svg += hull.size() == 2 ? "<polyline points=\"" : "<polygon points=\"";
      for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i) svg += " ";
        svg += num(hull[i].x) + "," + num(hull[i].y);
      }
      svg += fmt::format("\" data-state=\"{}\"/>\n", q);
    }
    svg += "</g>\n";
  }

  svg += "<g class=\"roots\">\n";
  for (auto const& p : points) {
    svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{}\"/>\n",
                       num(p.pixel.x), num(p.pixel.y),
                       depth_fill(p.depth, opts.max_depth));
  }
  svg += "</g>\n";

  if (opts.show_small_roots) {
    svg += "<g class=\"small-roots\" fill=\"#d03020\" stroke=\"black\" stroke-width=\"0.5\">\n";
    for (auto const& p : points) {
      if (!p.small) continue;
      svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"5\"/>\n", num(p.pixel.x),
                         num(p.pixel.y));
    }
    svg += "</g>\n";
  }

  if (opts.show_labels) {
    svg += "<g class=\"labels\" font-family=\"monospace\" font-size=\"9\">\n";
    for (auto const& p : points) {
      if (opts.show_small_roots && !p.small) continue;
      svg += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(p.pixel.x + 6),
                         num(p.pixel.y - 6), p.label);
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

template std::vector<RenderedRoot> render_points(RootSystem<double> const&,
                                                 SmallRootSet<double> const&,
                                                 RenderOptions const&);
template std::vector<RenderedRoot> render_points(RootSystem<Rational> const&,
                                                 SmallRootSet<Rational> const&,
                                                 RenderOptions const&);
template std::string render_svg(RootSystem<double> const&, SmallRootSet<double> const&,
                                Automaton const&, RenderOptions const&);
template std::string render_svg(RootSystem<Rational> const&, SmallRootSet<Rational> const&,
                                Automaton const&, RenderOptions const&);

}  // namespace coxlow
