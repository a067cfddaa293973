#ifndef COXLOW_LOW_HPP_
#define COXLOW_LOW_HPP_

#include <cstddef>
#include <vector>

#include "coxlow/automaton.hpp"
#include "coxlow/cone.hpp"
#include "coxlow/element.hpp"

namespace coxlow {

// w is low when every root of N(w) lies in cone(Σ ∩ N(w)).
template <class T>
bool is_low(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
            Element const& w, double eps_cone = kDefaultConeTolerance);

template <class T>
bool is_low(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
            InversionSet<T> const& inversions,
            double eps_cone = kDefaultConeTolerance);

struct LowEnumeration {
  // Sorted by (length, ShortLex), with λ(x) alongside.
  std::vector<Element> elements;
  std::vector<RootMask> lambdas;
  std::vector<std::size_t> count_by_length;
  std::size_t max_length = 0;
  // The search ran out of candidates before max_length.
  bool exhausted = false;
  // Automaton states not realized as λ(x) by a collected element.
  std::vector<std::size_t> unrealized_states;
  bool all_lambdas_realized() const { return unrealized_states.empty(); }
  // Exhausted search plus every λ realized.
  bool complete() const { return exhausted && all_lambdas_realized(); }
};

// Breadth-first search over left extensions s·x of low elements x.
// Low elements are closed under removing a left descent, so every low
// element of length k+1 is s·x for a low x of length k; the search never
// needs to visit non-low elements.
template <class T>
LowEnumeration enumerate_low(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             Automaton const& aut, std::size_t max_length,
                             double eps_cone = kDefaultConeTolerance);

}  // namespace coxlow

#endif  // COXLOW_LOW_HPP_
