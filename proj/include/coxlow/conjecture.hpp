#ifndef COXLOW_CONJECTURE_HPP_
#define COXLOW_CONJECTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlow/automaton.hpp"
#include "coxlow/low.hpp"
#include "coxlow/projective.hpp"

namespace coxlow {

// ---------------------------------------------------------------------------
// Low elements versus small inversion sets
// ---------------------------------------------------------------------------

enum class BijectionStatus { Bijective, Unresolved };

struct BijectionReport {
  std::size_t lambda_count = 0;
  std::size_t low_count = 0;
  // Each low element with the automaton state of λ(x).
  std::vector<std::pair<Element, std::size_t>> low_to_state;
  // States of Λ not realized by a low element found within max_length.
  std::vector<std::size_t> unmatched_states;
  // Low elements whose λ is missing from the automaton (never expected).
  std::vector<Element> lows_outside_lambda;
  bool injective = false;
  bool surjective = false;
  LowEnumeration enumeration;

  bool certified() const { return enumeration.complete(); }
  // "Unresolved" whenever the search could be truncated; a bounded search
  // never refutes the correspondence.
  BijectionStatus status() const {
    return injective && surjective && certified() && lows_outside_lambda.empty()
               ? BijectionStatus::Bijective
               : BijectionStatus::Unresolved;
  }
};

std::string to_string(BijectionStatus status);

template <class T>
BijectionReport verify_bijection(RootSystem<T> const& rs,
                                 SmallRootSet<T> const& sigma,
                                 Automaton const& aut, std::size_t max_length,
                                 double eps_cone = kDefaultConeTolerance);

// ---------------------------------------------------------------------------
// The bipartite support graph of a rank-3 element
// ---------------------------------------------------------------------------
//
// For w with λ = Σ ∩ N(w), the two vertex classes are
//   * root vertices: the members of λ, in Σ order;
//   * support vertices: pairs (α, {β, γ}) where α ∈ λ is non-simple and
//     {β, γ} is a bipodal support of α in Σ (two small roots of smaller
//     depth with α in their open cone) having at least one foot in λ.
// Edges run foot → support for each foot lying in λ, and support → α.
// Since N(w) is biconvex, a non-simple α ∈ λ always has a foot in λ; so a
// root vertex without incoming edges should be a simple root αs, i.e. a
// left descent s of w.

struct BipVertex {
  enum class Kind { Root, Support };
  Kind kind = Kind::Root;
  // The root itself (Root) or the supported root α (Support); Σ indices.
  std::size_t root = 0;
  Support feet{0, 0};
};

struct BipGraph {
  std::vector<BipVertex> vertices;
  std::vector<std::vector<std::size_t>> out_edges;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t edge_count() const;
  std::size_t add_vertex(BipVertex v);
  void add_edge(std::size_t from, std::size_t to);
};

template <class T>
BipGraph build_gbip(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
                    Element const& w);

struct AcyclicityResult {
  bool acyclic = true;
  // Vertex ids of a directed cycle, first vertex not repeated.
  std::vector<std::size_t> cycle;
};

AcyclicityResult check_acyclic(BipGraph const& g);

struct SourceSet {
  std::vector<std::size_t> vertices;
  // Generators of the simple-root sources.
  std::vector<Generator> generators;
  // Sources that do not represent a generator.
  std::vector<std::size_t> unmapped;
};

// Throws CyclicGraph when g has a cycle.
template <class T>
SourceSet sources(BipGraph const& g, SmallRootSet<T> const& sigma);

struct GbipSummary {
  std::size_t elements_checked = 0;
  std::size_t max_length = 0;
  std::size_t cyclic = 0;
  // Elements with a source that is not a left descent.
  std::size_t source_violations = 0;
  std::vector<Element> failures;
  bool clean() const { return cyclic == 0 && source_violations == 0; }
};

// Builds G_bip(w) for every w with ℓ(w) <= max_length and checks that it is
// acyclic with every source a left descent of w.
template <class T>
GbipSummary check_gbip_up_to(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             std::size_t max_length);

// ---------------------------------------------------------------------------
// Building a low element from λ
// ---------------------------------------------------------------------------

struct Construction {
  Element element;
  // Generators peeled off, outermost first; element = peeled[0]⋯peeled[k-1].
  std::vector<Generator> peeled;
};

// Descent peeling: for λ ∈ Λ take a witness w with λ(w) = λ, pick a source s
// of G_bip(w), set λ' = {γ ∈ Σ∖{αs} : sγ ∈ cone(λ)}, build x' for λ' and
// return s·x'. Throws ConstructionFailed with the failing state.
template <class T>
Construction construct_low_from_lambda(RootSystem<T> const& rs,
                                       SmallRootSet<T> const& sigma,
                                       Automaton const& aut, std::size_t state,
                                       double eps_cone = kDefaultConeTolerance);

// Brute-force fallback: the collected low element with λ(x) = λ, if any.
std::optional<Element> find_low_by_search(LowEnumeration const& lows,
                                          RootMask const& lambda);

// ---------------------------------------------------------------------------
// Small roots on the edges of the simplex
// ---------------------------------------------------------------------------

// Every small root has at most two nonzero coordinates.
template <class T>
bool check_simplex_edge_condition(RootSystem<T> const& rs,
                                  SmallRootSet<T> const& sigma);

struct PolytopeMatch {
  std::size_t state = 0;
  std::vector<Point2> lambda_hull;
  std::optional<Element> witness;
};

struct PolytopeReport {
  bool hypothesis_holds = false;
  std::vector<PolytopeMatch> matches;
  bool all_matched() const;
};

// For each λ ∈ Λ, looks for a low x (ℓ(x) <= max_length) whose inversion
// polytope conv(N̂(x)) equals conv(λ̂) in the projective slice.
template <class T>
PolytopeReport verify_inversion_polytopes(RootSystem<T> const& rs,
                                          SmallRootSet<T> const& sigma,
                                          Automaton const& aut,
                                          std::size_t max_length,
                                          double eps_hull = kDefaultHullTolerance,
                                          double eps_cone = kDefaultConeTolerance);

// Same, reusing an enumeration of low elements.
template <class T>
PolytopeReport verify_inversion_polytopes(RootSystem<T> const& rs,
                                          SmallRootSet<T> const& sigma,
                                          Automaton const& aut,
                                          LowEnumeration const& lows,
                                          double eps_hull = kDefaultHullTolerance);

}  // namespace coxlow

#endif  // COXLOW_CONJECTURE_HPP_
