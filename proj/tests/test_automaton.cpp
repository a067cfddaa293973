#include <doctest.h>

#include <set>

#include "common.hpp"

using namespace testing;

namespace {

constexpr unsigned kInf = CoxeterMatrix::kInfinity;

std::vector<std::size_t> counts(std::vector<BigInt> const& xs) {
  std::vector<std::size_t> out;
  for (auto const& x : xs) out.push_back(x.convert_to<std::size_t>());
  return out;
}

// Calls f on every word of length <= max_len over n letters.
template <class F>
void for_each_word(std::size_t n, std::size_t max_len, F f) {
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      f(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] == n - 1) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

std::size_t edge_count(Automaton const& aut) {
  std::size_t n = 0;
  for (std::size_t q = 0; q < aut.size(); ++q)
    for (Generator s = 0; s < aut.rank(); ++s) n += aut.next(q, s).has_value();
  return n;
}

}  // namespace

TEST_CASE("automaton examples") {
  Group<double> inf(spec_of(CoxeterMatrix::dihedral(kInf)));
  REQUIRE(inf.aut.size() == 3);
  CHECK(inf.aut.state(0).empty());
  auto a0 = inf.sigma.index_of({1, 0}).value();
  auto a1 = inf.sigma.index_of({0, 1}).value();
  auto q0 = inf.aut.next(0, 0).value();
  CHECK(inf.aut.state(q0).indices() == std::vector<std::size_t>{a0});
  auto q1 = inf.aut.next(q0, 1).value();
  CHECK(inf.aut.state(q1).indices() == std::vector<std::size_t>{a1});
  CHECK_FALSE(inf.aut.next(q0, 0).has_value());
  CHECK(inf.aut.next(q1, 0).value() == q0);
  CHECK(edge_count(inf.aut) == 4);

  Group<Rational> a2(spec_of(CoxeterMatrix::dihedral(3)));
  CHECK(a2.aut.size() == 6);

  Group<double> u(spec_of(CoxeterMatrix::rank3(kInf, kInf, kInf)));
  REQUIRE(u.aut.size() == 4);
  for (std::size_t q = 1; q < 4; ++q) CHECK(u.aut.state(q).count() == 1);

  Group<double> rank1(spec_of(CoxeterMatrix(std::vector<std::vector<unsigned>>{{1}})));
  CHECK(rank1.aut.size() == 2);
}

TEST_CASE("reduced-word recognition") {
  Group<double> inf(spec_of(CoxeterMatrix::dihedral(kInf)));
  Group<double> a2(spec_of(CoxeterMatrix::dihedral(3)));
  CHECK_FALSE(is_reduced(inf.aut, word("00")));
  CHECK(is_reduced(inf.aut, word("010101")));
  CHECK_FALSE(is_reduced(a2.aut, word("0101")));
  CHECK(is_reduced(a2.aut, word("010")));
  CHECK(is_reduced(a2.aut, {}));
}

TEST_CASE("is_reduced agrees with the matrix oracle") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    auto e = oracle::elements(geometry_of(spec), 6);
    std::size_t disagreements = 0;
    for_each_word(3, 6, [&](Word const& w) {
      if (is_reduced(g.aut, w) != oracle::is_reduced(e, w)) ++disagreements;
    });
    CHECK(disagreements == 0);
  }
}

TEST_CASE("normal forms run through the automaton") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    for (auto const& w : enumerate_elements(g.rs, 8)) {
      auto q = g.aut.run(w.word());
      REQUIRE(q.has_value());
      // The state after w is λ(w⁻¹).
      Word rev(w.word().rbegin(), w.word().rend());
      CHECK(g.aut.state(*q) == small_inversion_set(g.rs, g.sigma, normalize(g.rs, rev)));
    }
  }
}

TEST_CASE("states are exactly the small inversion sets") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    std::size_t longest = 0;
    for (std::size_t q = 0; q < g.aut.size(); ++q) {
      longest = std::max(longest, g.aut.access_word(q).size());
      CHECK(g.aut.run(g.aut.access_word(q)) == q);
    }
    std::set<RootMask> seen;
    for (auto const& w : enumerate_elements(g.rs, longest + 2)) {
      auto l = small_inversion_set(g.rs, g.sigma, w);
      CHECK(g.aut.index_of(l).has_value());
      seen.insert(l);
    }
    CHECK(seen.size() == g.aut.size());
  }
}

TEST_CASE("growth series") {
  Group<double> inf(spec_of(CoxeterMatrix::dihedral(kInf)));
  CHECK(counts(growth_series(inf.aut, 6)) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
  Group<double> a2(spec_of(CoxeterMatrix::dihedral(3)));
  CHECK(counts(growth_series(a2.aut, 4)) == std::vector<std::size_t>{1, 2, 2, 2, 0});
  CHECK(count_elements(a2.rs, 4) == std::vector<std::uint64_t>{1, 2, 2, 1, 0});
  CHECK(count_elements(inf.rs, 5) == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2});
  Group<double> u(spec_of(CoxeterMatrix::rank3(kInf, kInf, kInf)));
  auto cu = count_elements(u.rs, 10);
  CHECK(cu[0] == 1);
  for (std::size_t j = 1; j <= 10; ++j) CHECK(cu[j] == 3u << (j - 1));

  // Word counts grow without bound; counters are arbitrary precision.
  auto big = growth_series(u.aut, 100);
  CHECK(big[100] == BigInt(3) * (BigInt(1) << 99));
}

TEST_CASE("growth series counts reduced words") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    auto e = oracle::elements(geometry_of(spec), 6);
    std::vector<std::size_t> brute(7, 0);
    for_each_word(3, 6, [&](Word const& w) { brute[w.size()] += oracle::is_reduced(e, w); });
    CHECK(counts(growth_series(g.aut, 6)) == brute);
    CHECK(growth_series(g.aut, 1)[1] == 3);
  }
}

TEST_CASE("element counts match the oracle") {
  for (auto const& spec : standard_battery()) {
    CAPTURE(spec.name);
    Group<double> g(spec);
    auto e = oracle::elements(geometry_of(spec), 8);
    auto mine = count_elements(g.rs, 8);
    REQUIRE(mine.size() == e.count_by_length.size());
    for (std::size_t j = 0; j < mine.size(); ++j) CHECK(mine[j] == e.count_by_length[j]);
    auto words = growth_series(g.aut, 8);
    bool equal = true;
    for (std::size_t j = 0; j <= 8; ++j) {
      CHECK(words[j] >= mine[j]);
      equal = equal && words[j] == mine[j];
    }
    // Only free products of order-two groups have one reduced word per element.
    CHECK(equal == (spec.name == "(inf,inf,inf)" ||
                    spec.name == "(inf,inf,inf)+override(0,1)=-3/2"));
  }
}

TEST_CASE("DOT export") {
  Group<double> inf(spec_of(CoxeterMatrix::dihedral(kInf)));
  auto dot = export_dot(inf.aut, root_labels(inf.sigma));
  auto count = [&](std::string const& needle) {
    std::size_t n = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count(" -> ") == 4);
  CHECK(count("[label=\"q") == 3);
  CHECK(count("peripheries=2") == 1);
  CHECK(dot == export_dot(inf.aut, root_labels(inf.sigma)));
}

TEST_CASE("DOT golden files") {
  for (auto name : {"(3,3,3)", "(inf,3,3)"}) {
    CAPTURE(name);
    Group<double> g(battery_group(name));
    std::string file = std::string("tests/golden/automaton_") +
                       (std::string(name) == "(3,3,3)" ? "affine_a2" : "inf_3_3") + ".dot";
    CHECK(matches_golden(file, export_dot(g.aut, root_labels(g.sigma))));
  }
}
