#include <doctest.h>

#include "common.hpp"
#include "coxlow/error.hpp"

using namespace testing;

namespace {

constexpr unsigned kInf = CoxeterMatrix::kInfinity;

Root<double> root(RootSystem<double> const& rs, Vec<double> coords) {
  for (auto const& r : roots_up_to_depth(rs, 8))
    if (rs.same_vector(r.coords, coords)) return r;
  FAIL("not a root of depth <= 8");
  return {};
}

// Σ' is closed when every short edge from a member lands in Σ'.
template <class T>
bool closed(RootSystem<T> const& rs, std::vector<Root<T>> const& set) {
  RootTable<T> table(rs.tolerance());
  for (auto const& r : set) table.insert(r);
  for (auto const& r : set) {
    for (Generator s = 0; s < rs.rank(); ++s) {
      T b = rs.pair_with_simple(s, r.coords);
      if (rs.compare(b, T(-1)) > 0 && rs.sign(b) < 0 && !table.contains(rs.reflect(s, r.coords)))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("small roots of small examples") {
  RootSystem<double> inf(CoxeterMatrix::dihedral(kInf));
  auto s_inf = small_roots(inf);
  REQUIRE(s_inf.size() == 2);
  CHECK(s_inf[0].coords == Vec<double>{0, 1});
  CHECK(s_inf[1].coords == Vec<double>{1, 0});

  RootSystem<Rational> a2(CoxeterMatrix::dihedral(3));
  auto s_a2 = small_roots(a2);
  REQUIRE(s_a2.size() == 3);
  CHECK(s_a2[2].coords == rationals({1, 1}));

  RootSystem<double> universal(CoxeterMatrix::rank3(kInf, kInf, kInf));
  auto s_u = small_roots(universal);
  CHECK(s_u.size() == 3);
  for (Generator s = 0; s < 3; ++s) CHECK(s_u[s_u.simple_index(s)].coords == universal.simple_root(s));
}

TEST_CASE("closure cap") {
  RootSystem<double> a3(CoxeterMatrix::rank3(3, 3, 2));
  CHECK_THROWS_AS(small_roots(a3, 4), Error);
  try {
    small_roots(a3, 4);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ClosureCapExceeded);
  }
  CHECK(small_roots(a3, 6).size() == 6);
}

TEST_CASE("dominance examples") {
  RootSystem<double> inf(CoxeterMatrix::dihedral(kInf));
  auto as = root(inf, {1, 0});
  auto big = root(inf, {2, 1});
  CHECK(dominates(inf, as, as).dominates);
  auto v = dominates(inf, big, as);
  CHECK(v.dominates);
  CHECK(v.decisive);
  CHECK_FALSE(dominates(inf, as, big).dominates);

  // Brute force over every element of length <= 10.
  auto e = oracle::elements(oracle::dihedral(kInf), 10);
  CHECK(oracle::dominates(e, {2, 1}, {1, 0}));
  CHECK_FALSE(oracle::dominates(e, {1, 0}, {2, 1}));

  RootSystem<double> a2(CoxeterMatrix::dihedral(3));
  auto v2 = dominates(a2, root(a2, {1, 1}), root(a2, {1, 0}));
  CHECK_FALSE(v2.dominates);
  CHECK(v2.decisive);
}

TEST_CASE("dominance agrees with brute force on the battery") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    RootSystem<double> rs(spec.matrix, spec.overrides);
    auto roots = roots_up_to_depth(rs, 4);
    auto e = oracle::elements(geometry_of(spec), 9);
    for (auto const& b : roots) {
      for (auto const& a : roots) {
        if (a.depth > b.depth) continue;
        auto v = dominates(rs, b, a);
        CHECK(v.decisive);
        CHECK(v.dominates == oracle::dominates(e, b.coords, a.coords));
      }
    }
  }
}

TEST_CASE("is_small") {
  RootSystem<double> inf(CoxeterMatrix::dihedral(kInf));
  auto sigma = small_roots(inf);
  CHECK(is_small(inf, root(inf, {1, 0}), sigma));
  CHECK(is_small(inf, root(inf, {0, 1}), sigma));
  CHECK_FALSE(is_small(inf, root(inf, {2, 1}), sigma));

  RootSystem<double> a2(CoxeterMatrix::dihedral(3));
  CHECK(is_small(a2, root(a2, {1, 1}), small_roots(a2)));
}

TEST_CASE("bipodality") {
  RootSystem<double> a3(CoxeterMatrix::rank3(3, 3, 2));
  CHECK(is_bipodal(a3, std::vector<Root<double>>{}));
  CHECK(is_bipodal(a3, roots_up_to_depth(a3, 1)));
  // α0+α1+α2 needs a foot with an α2 component.
  std::vector<Root<double>> lame{root(a3, {1, 0, 0}), root(a3, {0, 1, 0}), root(a3, {1, 1, 1})};
  CHECK_FALSE(is_bipodal(a3, lame));
  lame.push_back(root(a3, {0, 1, 1}));
  // α1+α2 itself now lacks the foot α2.
  CHECK_FALSE(is_bipodal(a3, lame));
  lame.push_back(root(a3, {0, 0, 1}));
  CHECK(is_bipodal(a3, lame));

  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    RootSystem<double> rs(spec.matrix, spec.overrides);
    auto sigma = small_roots(rs);
    CHECK(is_bipodal(rs, sigma.roots()));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      CHECK(sigma.supports(i).empty() == (sigma[i].depth == 1));
    }
  }
}

TEST_CASE("removing a non-simple small root breaks closure or bipodality") {
  std::size_t removals = 0;
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    RootSystem<double> rs(spec.matrix, spec.overrides);
    auto sigma = small_roots(rs);
    REQUIRE(closed(rs, sigma.roots()));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i].depth == 1) continue;
      auto rest = sigma.roots();
      rest.erase(rest.begin() + static_cast<long>(i));
      CHECK_FALSE((closed(rs, rest) && is_bipodal(rs, rest)));
      ++removals;
    }
  }
  CHECK(removals > 0);
}

TEST_CASE("closure equals the dominance definition") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    RootSystem<double> rs(spec.matrix, spec.overrides);
    auto sigma = small_roots(rs);
    int depth = sigma.max_depth() + 2;
    auto roots = roots_up_to_depth(rs, depth);
    std::vector<Root<double>> by_dominance;
    for (auto const& b : roots) {
      bool small = true;
      for (auto const& a : roots) {
        if (a.depth > b.depth || rs.same_vector(a.coords, b.coords)) continue;
        auto v = dominates(rs, b, a);
        CHECK(v.decisive);
        if (v.dominates) {
          small = false;
          break;
        }
      }
      if (small) by_dominance.push_back(b);
    }
    REQUIRE(by_dominance.size() == sigma.size());
    for (auto const& r : by_dominance) CHECK(sigma.index_of(r.coords).has_value());
  }
}

TEST_CASE("closure equals the brute-force oracle") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    RootSystem<double> rs(spec.matrix, spec.overrides);
    auto sigma = small_roots(rs);
    int depth = sigma.max_depth() + 2;
    auto e = oracle::elements(geometry_of(spec), 10);
    auto ref = oracle::small_roots(e, depth);
    REQUIRE(ref.size() == sigma.size());
    for (auto const& r : ref) CHECK(sigma.index_of(r.coords).has_value());
  }
}

TEST_CASE("frozen small-root counts") {
  // Counts from the brute-force oracle above.
  std::map<std::string, std::size_t> expected{
      {"(2,2,2)", 3},  {"(3,2,2)", 4},   {"(3,3,2)", 6},   {"(4,3,2)", 9},
      {"(5,3,2)", 15}, {"(3,3,3)", 6},   {"(4,4,2)", 8},   {"(6,3,2)", 12},
      {"(3,3,4)", 7},  {"(2,3,7)", 12},  {"(4,4,4)", 9},   {"(2,2,inf)", 3},
      {"(2,inf,inf)", 3}, {"(inf,inf,inf)", 3}, {"(inf,3,3)", 5},
      {"(inf,inf,inf)+override(0,1)=-3/2", 3}};
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    REQUIRE(expected.count(spec.name));
    Group<double> g(spec);
    CHECK(g.sigma.size() == expected[spec.name]);
  }
}

TEST_CASE("small roots agree across backends") {
  for (auto const& spec : standard_battery()) {
    if (!has_rational_form(spec)) continue;
    CAPTURE(spec.name);
    auto f = small_roots(RootSystem<double>(spec.matrix, spec.overrides));
    auto q = small_roots(RootSystem<Rational>(spec.matrix, spec.overrides));
    REQUIRE(f.size() == q.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(oracle::key(f[i].coords) == oracle::key(as_doubles(q[i].coords)));
      CHECK(f[i].depth == q[i].depth);
    }
  }
}

TEST_CASE("two-term decompositions") {
  RootSystem<Rational> rs(CoxeterMatrix::rank3(3, 3, 2));
  auto c = positive_two_term(rs, rationals({1, 1, 1}), rationals({1, 0, 0}), rationals({0, 1, 1}));
  REQUIRE(c.has_value());
  CHECK(c->first == 1);
  CHECK(c->second == 1);
  CHECK_FALSE(positive_two_term(rs, rationals({1, 1, 1}), rationals({1, 0, 0}), rationals({0, 1, 0})));
  CHECK_FALSE(positive_two_term(rs, rationals({1, 0, 0}), rationals({1, 0, 0}), rationals({0, 1, 0})));
}
