#ifndef COXLOW_RENDER_HPP_
#define COXLOW_RENDER_HPP_

#include <string>
#include <vector>

#include "coxlow/automaton.hpp"
#include "coxlow/projective.hpp"
#include "coxlow/small_roots.hpp"

namespace coxlow {

struct RenderOptions {
  int max_depth = 3;
  bool show_small_roots = true;
  bool show_lambda_polytopes = false;
  bool show_labels = false;
  int canvas = 600;
  double eps_hull = kDefaultHullTolerance;
};

// Throws ValidationError unless max_depth >= 1 and canvas >= 100.
void validate(RenderOptions const& opts);

struct RenderedRoot {
  Point2 pixel;
  int depth = 1;
  bool small = false;
  std::string label;
};

// Pixel position of a chart point on the canvas (y grows downwards).
Point2 to_pixel(Point2 chart, int canvas);

// Positive roots up to opts.max_depth placed on the canvas, in root order.
template <class T>
std::vector<RenderedRoot> render_points(RootSystem<T> const& rs,
                                        SmallRootSet<T> const& sigma,
                                        RenderOptions const& opts);

// Static picture of the projective slice: the triangle conv(Δ), roots as
// dots shaded by depth, small roots highlighted and optionally the
// polytopes conv(λ), λ ∈ Λ. Output depends only on the inputs.
template <class T>
std::string render_svg(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
                       Automaton const& lambdas, RenderOptions const& opts);

}  // namespace coxlow

#endif  // COXLOW_RENDER_HPP_
