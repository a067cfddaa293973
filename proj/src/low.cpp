#include "coxlow/low.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxlow {

template <class T>
bool is_low(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
            InversionSet<T> const& inversions, double eps_cone) {
  RootMask lambda = small_inversion_set(rs, sigma, inversions);
  std::vector<Vec<T>> generators;
  for (std::size_t i : lambda.indices()) generators.push_back(sigma[i].coords);
  for (auto const& beta : inversions.roots) {
    if (sigma.index_of(beta)) continue;
    if (!cone_membership(rs, generators, beta, eps_cone)) return false;
  }
  return true;
}

template <class T>
bool is_low(RootSystem<T> const& rs, SmallRootSet<T> const& sigma,
            Element const& w, double eps_cone) {
  return is_low(rs, sigma, inversion_set(rs, w), eps_cone);
}

template <class T>
LowEnumeration enumerate_low(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             Automaton const& aut, std::size_t max_length,
                             double eps_cone) {
  LowEnumeration out;
  out.max_length = max_length;
  std::vector<Element> layer{Element{}};
  out.elements.push_back(Element{});
  out.lambdas.push_back(sigma.empty_mask());
  out.count_by_length.push_back(1);
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::set<Element> next;
    for (auto const& x : layer) {
      auto descents = left_descents(rs, x);
      for (Generator s = 0; s < rs.rank(); ++s) {
        if (std::binary_search(descents.begin(), descents.end(), s)) continue;
        next.insert(multiply_left(rs, s, x));
      }
    }
    std::vector<Element> kept;
    for (auto const& y : next) {
      auto inv = inversion_set(rs, y);
      if (!is_low(rs, sigma, inv, eps_cone)) continue;
      out.elements.push_back(y);
      out.lambdas.push_back(small_inversion_set(rs, sigma, inv));
      kept.push_back(y);
    }
    if (kept.empty()) {
      out.exhausted = true;
      break;
    }
    out.count_by_length.push_back(kept.size());
    layer = std::move(kept);
  }
  std::set<RootMask> realized(out.lambdas.begin(), out.lambdas.end());
  for (std::size_t q = 0; q < aut.size(); ++q) {
    if (!realized.count(aut.state(q))) out.unrealized_states.push_back(q);
  }
  return out;
}

#define COXLOW_INSTANTIATE(T)                                                  \
  template bool is_low(RootSystem<T> const&, SmallRootSet<T> const&,          \
                       Element const&, double);                                \
  template bool is_low(RootSystem<T> const&, SmallRootSet<T> const&,          \
                       InversionSet<T> const&, double);                        \
  template LowEnumeration enumerate_low(RootSystem<T> const&,                 \
                                        SmallRootSet<T> const&,               \
                                        Automaton const&, std::size_t, double);

COXLOW_INSTANTIATE(double)
COXLOW_INSTANTIATE(Rational)
#undef COXLOW_INSTANTIATE

}  // namespace coxlow
