#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "coxlow/error.hpp"
#include "coxlow/render.hpp"
#include "coxlow/report.hpp"

using namespace testing;

namespace {

constexpr unsigned kInf = CoxeterMatrix::kInfinity;

ErrorCode parse_error(std::string const& text, std::string* message = nullptr) {
  try {
    parse_group_file(text);
  } catch (Error const& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected an error for: " << text);
  return ErrorCode::ValidationError;
}

bool near(Point2 a, Point2 b, double tol = 1e-12) {
  return std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol;
}

std::size_t count(std::string const& text, std::string const& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

// Distance from p to the segment ab.
double segment_distance(Point2 p, Point2 a, Point2 b) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

}  // namespace

TEST_CASE("group files") {
  auto spec = parse_group_file(R"({"name": "x", "rank": 3,
      "coxeter": [[1, "inf", 3], ["inf", 1, 2], [3, 2, 1]],
      "gram_overrides": [{"pair": [1, 0], "value": "-5/4"}], "backend": "rational"})");
  CHECK(spec.name == "x");
  CHECK(spec.matrix.is_infinite(0, 1));
  CHECK(spec.matrix.entries()[0][2] == 3);
  REQUIRE(spec.overrides.size() == 1);
  CHECK(spec.overrides[0].value == Rational(-5, 4));
  CHECK(spec.backend == Backend::Rational);

  auto num = parse_group_file(
      R"({"rank": 2, "coxeter": [[1, "inf"], ["inf", 1]], "gram_overrides": [{"pair": [0, 1], "value": -1.5}]})");
  CHECK(num.overrides[0].value == Rational(-3, 2));
  CHECK(num.backend == Backend::Float);

  // Round trip.
  auto again = parse_group_file(group_to_json(spec));
  CHECK(again.matrix.entries() == spec.matrix.entries());
  CHECK(again.overrides[0].value == spec.overrides[0].value);
  CHECK(again.backend == spec.backend);

  for (auto const& file : {"a3", "h3", "universal-override", "hyperbolic-2-3-7", "dihedral-inf"}) {
    CAPTURE(file);
    CHECK_NOTHROW(parse_group_file(read_text(source_path(std::string("groups/") + file + ".json"))));
  }
}

TEST_CASE("invalid group files name the offending field") {
  std::string msg;
  CHECK(parse_error("{\"rank\": 2,", &msg) == ErrorCode::ParseError);
  CHECK(msg.find("line 1") != std::string::npos);
  CHECK(parse_error(read_text(source_path("tests/data/bad_syntax.json"))) == ErrorCode::ParseError);

  CHECK(parse_error(R"({"coxeter": [[1]]})", &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("rank") != std::string::npos);
  CHECK(parse_error(R"({"rank": 2, "coxeter": [[1, 1], [1, 1]]})", &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("coxeter[0][1]") != std::string::npos);
  CHECK(parse_error(read_text(source_path("tests/data/bad_bond.json"))) == ErrorCode::ValidationError);
  CHECK(parse_error(R"({"rank": 2, "coxeter": [[1, 3], [4, 1]]})", &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("symmetric") != std::string::npos);
  CHECK(parse_error(R"({"rank": 2, "coxeter": [[1, "oo"], ["oo", 1]]})", &msg) == ErrorCode::ValidationError);
  CHECK(parse_error(R"({"rank": 2, "coxeter": [[2, 3], [3, 1]]})", &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("diagonal") != std::string::npos);

  std::string finite = R"({"rank": 2, "coxeter": [[1, 3], [3, 1]], "gram_overrides": [{"pair": [0, 1], "value": -2}]})";
  CHECK(parse_error(finite, &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("gram_overrides[0].pair") != std::string::npos);
  std::string above = R"({"rank": 2, "coxeter": [[1, "inf"], ["inf", 1]], "gram_overrides": [{"pair": [0, 1], "value": "-1/2"}]})";
  CHECK(parse_error(above, &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("gram_overrides[0].value") != std::string::npos);
  CHECK(parse_error(R"({"rank": 1, "coxeter": [[1]], "backend": "quad"})", &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("backend") != std::string::npos);
}

TEST_CASE("projective normalization examples") {
  Point2 const v0{0, 0}, v1{1, 0}, v2{0.5, std::sqrt(3.0) / 2};
  RootSystem<double> u(CoxeterMatrix::rank3(kInf, kInf, kInf));
  CHECK(near(normalize_projective(u, {1, 0, 0}), v0));
  CHECK(near(normalize_projective(u, {0, 1, 0}), v1));
  CHECK(near(normalize_projective(u, {0, 0, 1}), v2));
  CHECK(near(normalize_projective(u, {1, 1, 0}), Point2{0.5, 0}));
  CHECK(near(normalize_projective(u, {1, 1, 1}), Point2{0.5, std::sqrt(3.0) / 6}));
  for (double k : {0.5, 3.0, 17.0})
    CHECK(near(normalize_projective(u, {2 * k, 3 * k, k}), normalize_projective(u, {2, 3, 1})));

  RootSystem<double> inf(CoxeterMatrix::dihedral(kInf));
  // (2,1) sits a third of the way from α0 to α1.
  CHECK(near(normalize_projective(inf, {2, 1}), Point2{1.0 / 3, 0}));
  CHECK(near(normalize_projective(inf, {1, 2}), Point2{2.0 / 3, 0}));

  RootSystem<Rational> q(CoxeterMatrix::rank3(3, 3, 3));
  CHECK(projective_coordinates(q, rationals({1, 2, 1})) ==
        Vec<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK_THROWS_AS(projective_coordinates(q, rationals({1, -1, 0})), Error);
}

TEST_CASE("convex hulls") {
  auto h = convex_hull({{0, 0}, {1, 0}, {0.5, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0, 0}});
  CHECK(h.size() == 4);
  CHECK(near(h[0], Point2{0, 0}));
  CHECK(same_hull(h, convex_hull({{1, 1}, {0, 1}, {1, 0}, {0, 0}})));
  CHECK_FALSE(same_hull(h, convex_hull({{1, 1}, {0, 1}, {1, 0}})));
  CHECK(convex_hull({{2, 2}, {2, 2 + 1e-9}}).size() == 1);
  CHECK(convex_hull({}).empty());
}

TEST_CASE("render options") {
  RenderOptions ok;
  CHECK_NOTHROW(validate(ok));
  RenderOptions bad;
  bad.max_depth = 0;
  CHECK_THROWS_AS(validate(bad), Error);
  bad = RenderOptions{};
  bad.canvas = 50;
  CHECK_THROWS_AS(validate(bad), Error);

  Group<double> d(spec_of(CoxeterMatrix::dihedral(3)));
  try {
    render_svg(d.rs, d.sigma, d.aut, ok);
    FAIL("expected RankNotThree");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::RankNotThree);
  }
}

TEST_CASE("render examples") {
  RenderOptions opts;
  opts.max_depth = 1;
  Group<double> u(battery_group("(inf,inf,inf)"));
  auto pts = render_points(u.rs, u.sigma, opts);
  REQUIRE(pts.size() == 3);
  for (auto const& p : pts) CHECK(p.small);
  auto svg = render_svg(u.rs, u.sigma, u.aut, opts);
  CHECK(count(svg, "r=\"5\"") == 3);

  opts.max_depth = 2;
  Group<double> a(battery_group("(3,3,3)"));
  auto pa = render_points(a.rs, a.sigma, opts);
  CHECK(pa.size() == 6);
  CHECK(std::count_if(pa.begin(), pa.end(), [](auto const& p) { return p.small; }) == 6);
  CHECK(count(render_svg(a.rs, a.sigma, a.aut, opts), "r=\"5\"") == 6);

  opts.show_small_roots = false;
  CHECK(count(render_svg(a.rs, a.sigma, a.aut, opts), "r=\"5\"") == 0);
  opts.show_lambda_polytopes = true;
  opts.show_labels = true;
  auto full = render_svg(a.rs, a.sigma, a.aut, opts);
  CHECK(count(full, "class=\"lambda\"") == 1);
  CHECK(count(full, "class=\"labels\"") == 1);
}

TEST_CASE("small roots lie on the triangle boundary under the edge condition") {
  RenderOptions opts;
  std::size_t checked = 0;
  for (auto const& spec : standard_battery()) {
    Group<double> g(spec);
    if (!check_simplex_edge_condition(g.rs, g.sigma)) continue;
    CAPTURE(spec.name);
    opts.max_depth = g.sigma.max_depth();
    Point2 v[3];
    for (Generator s = 0; s < 3; ++s)
      v[s] = to_pixel(normalize_projective(g.rs, g.rs.simple_root(s)), opts.canvas);
    for (auto const& p : render_points(g.rs, g.sigma, opts)) {
      if (!p.small) continue;
      double d = std::min({segment_distance(p.pixel, v[0], v[1]), segment_distance(p.pixel, v[1], v[2]),
                           segment_distance(p.pixel, v[0], v[2])});
      CHECK(d <= 0.5);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("rendering is byte stable") {
  RenderOptions opts;
  opts.show_lambda_polytopes = true;
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    auto a = render_svg(g.rs, g.sigma, g.aut, opts);
    Group<double> h(spec);
    CHECK(a == render_svg(h.rs, h.sigma, h.aut, opts));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.substr(a.size() - 7) == "</svg>\n");
  }
}

TEST_CASE("SVG golden files") {
  RenderOptions opts;
  opts.show_lambda_polytopes = true;
  for (auto [name, file] : {std::pair{"(3,3,3)", "affine_a2"}, {"(inf,3,3)", "inf_3_3"}}) {
    CAPTURE(name);
    Group<double> g(battery_group(name));
    CHECK(matches_golden(std::string("tests/golden/render_") + file + ".svg",
                         render_svg(g.rs, g.sigma, g.aut, opts)));
  }
}

TEST_CASE("JSON reports carry a schema") {
  auto spec = battery_group("(inf,3,3)");
  Group<Rational> g(spec);
  auto sr = small_roots_json(spec, g.sigma);
  CHECK(sr.begin().key() == "schema");
  CHECK(sr["schema"] == "coxlow.small-roots/1");
  CHECK(sr["count"] == 5);
  CHECK(sr["small_roots"][0]["coords"].is_array());

  auto lows = enumerate_low(g.rs, g.sigma, g.aut, 25);
  auto le = low_elements_json(spec, g.sigma, lows);
  CHECK(le["schema"] == "coxlow.low-elements/1");
  CHECK(le["count"] == 10);
  CHECK(le["completeness"]["complete"] == true);

  auto am = automaton_json(spec, g.sigma, g.aut);
  CHECK(am["schema"] == "coxlow.automaton/1");
  CHECK(am["state_count"] == g.aut.size());

  auto gr = growth_json(spec, growth_series(g.aut, 4), count_elements(g.rs, 4));
  CHECK(gr["schema"] == "coxlow.growth/1");
  CHECK(gr["elements"].size() == 5);

  VerifyArtifacts art{verify_bijection(g.rs, g.sigma, g.aut, 25), std::nullopt, {}, std::nullopt};
  auto vj = verify_json(spec, g.sigma, g.aut, art);
  CHECK(vj.begin().key() == "schema");
  CHECK(vj["schema"] == "coxlow.verify/1");
  CHECK(vj["status"] == "bijective");
  CHECK(vj["per_lambda"].size() == g.aut.size());
  CHECK(vj.dump() == verify_json(spec, g.sigma, g.aut, art).dump());
}
