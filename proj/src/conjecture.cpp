#include "coxlow/conjecture.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxlow/error.hpp"

namespace coxlow {

std::string to_string(BijectionStatus status) {
  return status == BijectionStatus::Bijective ? "bijective" : "unresolved";
}

template <class T>
BijectionReport verify_bijection(RootSystem<T> const& rs,
                                 SmallRootSet<T> const& sigma,
                                 Automaton const& aut, std::size_t max_length,
                                 double eps_cone) {
  BijectionReport report;
  report.enumeration = enumerate_low(rs, sigma, aut, max_length, eps_cone);
  auto const& lows = report.enumeration;
  report.lambda_count = aut.size();
  report.low_count = lows.elements.size();

  std::map<std::size_t, std::size_t> hits;
  for (std::size_t i = 0; i < lows.elements.size(); ++i) {
    auto state = aut.index_of(lows.lambdas[i]);
    if (!state) {
      report.lows_outside_lambda.push_back(lows.elements[i]);
      continue;
    }
    report.low_to_state.emplace_back(lows.elements[i], *state);
    ++hits[*state];
  }
  report.injective = std::all_of(hits.begin(), hits.end(),
                                 [](auto const& kv) { return kv.second == 1; });
  report.unmatched_states = lows.unrealized_states;
  report.surjective = report.unmatched_states.empty();
  return report;
}

std::size_t BipGraph::edge_count() const {
  std::size_t total = 0;
  for (auto const& e : out_edges) total += e.size();
  return total;
}

std::size_t BipGraph::add_vertex(BipVertex v) {
  vertices.push_back(v);
  out_edges.emplace_back();
  return vertices.size() - 1;
}

void BipGraph::add_edge(std::size_t from, std::size_t to) {
  out_edges[from].push_back(to);
}

template <class T>
BipGraph build_gbip(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
                    Element const& w) {
  if (rs.rank() != 3) {
    throw Error(ErrorCode::RankNotThree,
                "G_bip needs rank 3, got " + std::to_string(rs.rank()));
  }
  if (normalize(rs, w.word()) != w) {
    throw Error(ErrorCode::HypothesisNotMet,
                "element " + format_element(w) + " is not in normal form");
  }
  RootMask lambda = small_inversion_set(rs, sigma, w);
  BipGraph g;
  std::map<std::size_t, std::size_t> vertex_of;  // Σ index -> vertex id
  for (std::size_t i : lambda.indices()) {
    vertex_of[i] = g.add_vertex(BipVertex{BipVertex::Kind::Root, i, {0, 0}});
  }
  for (std::size_t a : lambda.indices()) {
    for (Support const& feet : sigma.supports(a)) {
      bool first_in = lambda.test(feet.first), second_in = lambda.test(feet.second);
      if (!first_in && !second_in) continue;
      std::size_t p = g.add_vertex(BipVertex{BipVertex::Kind::Support, a, feet});
      if (first_in) g.add_edge(vertex_of.at(feet.first), p);
      if (second_in) g.add_edge(vertex_of.at(feet.second), p);
      g.add_edge(p, vertex_of.at(a));
    }
  }
  return g;
}

AcyclicityResult check_acyclic(BipGraph const& g) {
  enum Color : char { White, Grey, Black };
  std::vector<Color> color(g.size(), White);
  std::vector<std::size_t> parent(g.size(), g.size());
  AcyclicityResult result;
  // Iterative DFS; a grey successor closes a cycle.
  for (std::size_t start = 0; start < g.size() && result.acyclic; ++start) {
    if (color[start] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    color[start] = Grey;
    while (!stack.empty() && result.acyclic) {
      auto& [v, next] = stack.back();
      if (next == g.out_edges[v].size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      std::size_t u = g.out_edges[v][next++];
      if (color[u] == White) {
        color[u] = Grey;
        parent[u] = v;
        stack.emplace_back(u, 0);
      } else if (color[u] == Grey) {
        result.acyclic = false;
        std::vector<std::size_t> cycle{v};
        for (std::size_t x = v; x != u;) {
          x = parent[x];
          cycle.push_back(x);
        }
        std::reverse(cycle.begin(), cycle.end());
        result.cycle = std::move(cycle);
      }
    }
  }
  return result;
}

template <class T>
SourceSet sources(BipGraph const& g, SmallRootSet<T> const& sigma) {
  auto acyclic = check_acyclic(g);
  if (!acyclic.acyclic) {
    throw Error(ErrorCode::CyclicGraph, "graph has a cycle of length " +
                                            std::to_string(acyclic.cycle.size()));
  }
  std::vector<bool> has_incoming(g.size(), false);
  for (auto const& edges : g.out_edges) {
    for (auto to : edges) has_incoming[to] = true;
  }
  std::map<std::size_t, Generator> generator_of;
  for (Generator s = 0; s < sigma[0].coords.size(); ++s) {
    generator_of[sigma.simple_index(s)] = s;
  }
  SourceSet out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (has_incoming[v]) continue;
    out.vertices.push_back(v);
    auto const& vertex = g.vertices[v];
    auto it = generator_of.find(vertex.root);
    if (vertex.kind == BipVertex::Kind::Root && it != generator_of.end()) {
      out.generators.push_back(it->second);
    } else {
      out.unmapped.push_back(v);
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

template <class T>
GbipSummary check_gbip_up_to(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             std::size_t max_length) {
  GbipSummary summary;
  summary.max_length = max_length;
  for (auto const& w : enumerate_elements(rs, max_length)) {
    ++summary.elements_checked;
    BipGraph g = build_gbip(rs, sigma, w);
    if (!check_acyclic(g).acyclic) {
      ++summary.cyclic;
      summary.failures.push_back(w);
      continue;
    }
    SourceSet srcs = sources(g, sigma);
    auto descents = left_descents(rs, w);
    bool ok = srcs.unmapped.empty() &&
              std::includes(descents.begin(), descents.end(),
                            srcs.generators.begin(), srcs.generators.end());
    if (!ok) {
      ++summary.source_violations;
      summary.failures.push_back(w);
    }
  }
  return summary;
}

namespace {

template <class T>
class Peeler {
 public:
  Peeler(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
         Automaton const& aut, double eps_cone)
      : rs_(rs), sigma_(sigma), aut_(aut), eps_cone_(eps_cone) {}

  Construction build(std::size_t state) {
    if (auto it = done_.find(state); it != done_.end()) return it->second;
    if (!active_.insert(state).second) {
      fail(state, "peeling revisits a state");
    }
    RootMask const& lambda = aut_.state(state);
    Construction result;
    if (!lambda.empty()) result = peel(state, lambda);
    active_.erase(state);
    done_.emplace(state, result);
    return result;
  }

 private:
  Construction peel(std::size_t state, RootMask const& lambda) {
    Word access = aut_.access_word(state);
    std::reverse(access.begin(), access.end());
    Element witness = normalize(rs_, access);
    SourceSet srcs = sources(build_gbip(rs_, sigma_, witness), sigma_);
    if (!srcs.unmapped.empty()) {
      fail(state, "G_bip(" + format_element(witness) + ") has a non-descent source");
    }
    std::vector<Vec<T>> generators;
    for (std::size_t i : lambda.indices()) generators.push_back(sigma_[i].coords);

    for (Generator s : srcs.generators) {
      RootMask reduced = sigma_.empty_mask();
      for (std::size_t g = 0; g < sigma_.size(); ++g) {
        if (g == sigma_.simple_index(s)) continue;
        Vec<T> image = rs_.reflect(s, sigma_[g].coords);
        if (cone_membership(rs_, generators, image, eps_cone_)) reduced.set(g);
      }
      auto next = aut_.index_of(reduced);
      if (!next) continue;
      Construction inner = build(*next);
      Element x = multiply_left(rs_, s, inner.element);
      if (x.length() != inner.element.length() + 1) continue;
      auto inv = inversion_set(rs_, x);
      if (small_inversion_set(rs_, sigma_, inv) != lambda) continue;
      if (!is_low(rs_, sigma_, inv, eps_cone_)) continue;
      Construction out;
      out.element = std::move(x);
      out.peeled.push_back(s);
      out.peeled.insert(out.peeled.end(), inner.peeled.begin(), inner.peeled.end());
      return out;
    }
    fail(state, "no source of G_bip(" + format_element(witness) + ") peels");
  }

  [[noreturn]] void fail(std::size_t state, std::string const& why) const {
    throw Error(ErrorCode::ConstructionFailed,
                "state " + std::to_string(state) + " λ=" +
                    aut_.state(state).bits() + ": " + why);
  }

  RootSystem<T> const& rs_;
  SmallRootSet<T> const& sigma_;
  Automaton const& aut_;
  double eps_cone_;
  std::map<std::size_t, Construction> done_;
  std::set<std::size_t> active_;
};

}  // namespace

template <class T>
Construction construct_low_from_lambda(RootSystem<T> const& rs,
                                       SmallRootSet<T> const& sigma,
                                       Automaton const& aut, std::size_t state,
                                       double eps_cone) {
  if (state >= aut.size()) {
    throw Error(ErrorCode::ConstructionFailed,
                "state " + std::to_string(state) + " is not in Λ");
  }
  return Peeler<T>(rs, sigma, aut, eps_cone).build(state);
}

std::optional<Element> find_low_by_search(LowEnumeration const& lows,
                                          RootMask const& lambda) {
  for (std::size_t i = 0; i < lows.elements.size(); ++i) {
    if (lows.lambdas[i] == lambda) return lows.elements[i];
  }
  return std::nullopt;
}

template <class T>
bool check_simplex_edge_condition(RootSystem<T> const& rs,
                                  SmallRootSet<T> const& sigma) {
  for (auto const& r : sigma.roots()) {
    std::size_t support = 0;
    for (auto const& x : r.coords) support += rs.sign(x) != 0;
    if (support > 2) return false;
  }
  return true;
}

bool PolytopeReport::all_matched() const {
  return std::all_of(matches.begin(), matches.end(),
                     [](PolytopeMatch const& m) { return m.witness.has_value(); });
}

template <class T>
PolytopeReport verify_inversion_polytopes(RootSystem<T> const& rs,
                                          SmallRootSet<T> const& sigma,
                                          Automaton const& aut,
                                          LowEnumeration const& lows,
                                          double eps_hull) {
  PolytopeReport report;
  report.hypothesis_holds = check_simplex_edge_condition(rs, sigma);

  std::vector<std::vector<Point2>> low_points;
  for (auto const& x : lows.elements) {
    std::vector<Point2> pts;
    for (auto const& r : inversion_set(rs, x).roots) pts.push_back(normalize_projective(rs, r));
    low_points.push_back(std::move(pts));
  }
  for (std::size_t q = 0; q < aut.size(); ++q) {
    PolytopeMatch match;
    match.state = q;
    std::vector<Point2> pts;
    for (std::size_t i : aut.state(q).indices()) {
      pts.push_back(normalize_projective(rs, sigma[i].coords));
    }
    match.lambda_hull = convex_hull(pts, eps_hull);
    for (std::size_t k = 0; k < lows.elements.size(); ++k) {
      if (same_hull(pts, low_points[k], eps_hull)) {
        match.witness = lows.elements[k];
        break;
      }
    }
    report.matches.push_back(std::move(match));
  }
  return report;
}

template <class T>
PolytopeReport verify_inversion_polytopes(RootSystem<T> const& rs,
                                          SmallRootSet<T> const& sigma,
                                          Automaton const& aut,
                                          std::size_t max_length,
                                          double eps_hull, double eps_cone) {
  auto lows = enumerate_low(rs, sigma, aut, max_length, eps_cone);
  return verify_inversion_polytopes(rs, sigma, aut, lows, eps_hull);
}

#define COXLOW_INSTANTIATE(T)                                                   \
  template BijectionReport verify_bijection(RootSystem<T> const&,              \
                                            SmallRootSet<T> const&,            \
                                            Automaton const&, std::size_t,      \
                                            double);                            \
  template BipGraph build_gbip(RootSystem<T> const&, SmallRootSet<T> const&,   \
                               Element const&);                                 \
  template SourceSet sources(BipGraph const&, SmallRootSet<T> const&);          \
  template GbipSummary check_gbip_up_to(RootSystem<T> const&,                   \
                                        SmallRootSet<T> const&, std::size_t);   \
  template Construction construct_low_from_lambda(                              \
      RootSystem<T> const&, SmallRootSet<T> const&, Automaton const&,           \
      std::size_t, double);                                                     \
  template bool check_simplex_edge_condition(RootSystem<T> const&,             \
                                             SmallRootSet<T> const&);          \
  template PolytopeReport verify_inversion_polytopes(                           \
      RootSystem<T> const&, SmallRootSet<T> const&, Automaton const&,           \
      LowEnumeration const&, double);                                           \
  template PolytopeReport verify_inversion_polytopes(                           \
      RootSystem<T> const&, SmallRootSet<T> const&, Automaton const&,           \
      std::size_t, double, double);

COXLOW_INSTANTIATE(double)
COXLOW_INSTANTIATE(Rational)
#undef COXLOW_INSTANTIATE

}  // namespace coxlow
