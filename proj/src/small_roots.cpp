#include "coxlow/small_roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxlow/error.hpp"

namespace coxlow {

template <class T>
SmallRootSet<T>::SmallRootSet(RootSystem<T> const& rs,
                              std::vector<Root<T>> sorted_roots)
    : table_(rs.tolerance()) {
  for (auto& r : sorted_roots) table_.insert(std::move(r));
  std::size_t n = rs.rank();
  simple_index_.resize(n);
  for (Generator s = 0; s < n; ++s) {
    auto id = table_.find(rs.simple_root(s));
    if (!id) {
      throw Error(ErrorCode::ValidationError, "small root set misses a simple root");
    }
    simple_index_[s] = *id;
  }
  reflection_.assign(n, std::vector<std::optional<std::size_t>>(size()));
  for (Generator s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < size(); ++i) {
      reflection_[s][i] = table_.find(rs.reflect(s, table_[i].coords));
    }
  }
  supports_ = bipodal_supports(rs, table_.roots());
}

template <class T>
int SmallRootSet<T>::max_depth() const noexcept {
  int d = 0;
  for (auto const& r : table_.roots()) d = std::max(d, r.depth);
  return d;
}

template <class T>
SmallRootSet<T> small_roots(RootSystem<T> const& rs, std::size_t cap) {
  RootTable<T> table(rs.tolerance());
  std::deque<std::size_t> queue;
  for (Generator s = 0; s < rs.rank(); ++s) {
    queue.push_back(table.insert(Root<T>{rs.simple_root(s), 1, true}));
  }
  T const minus_one(-1);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    for (Generator s = 0; s < rs.rank(); ++s) {
      Root<T> const& beta = table[id];
      T b = rs.pair_with_simple(s, beta.coords);
      bool short_edge = rs.sign(b) < 0 && rs.compare(b, minus_one) > 0;
      if (!short_edge) continue;
      Root<T> image{rs.reflect(s, beta.coords), beta.depth + 1, true};
      std::size_t before = table.size();
      std::size_t got = table.insert(std::move(image));
      if (got != before) continue;
      if (table.size() > cap) {
        throw Error(ErrorCode::ClosureCapExceeded,
                    "short-edge closure exceeded " + std::to_string(cap) +
                        " roots");
      }
      queue.push_back(got);
    }
  }
  std::vector<Root<T>> roots = table.roots();
  sort_roots(roots, rs.tolerance());
  return SmallRootSet<T>(rs, std::move(roots));
}

int default_dominance_cap(int depth_beta, int depth_alpha) {
  return 2 * (depth_alpha + depth_beta) + 4;
}

template <class T>
DominanceVerdict dominates(RootSystem<T> const& rs, Root<T> const& beta,
                           Root<T> const& alpha, std::optional<int> lcap) {
  if (rs.same_vector(beta.coords, alpha.coords)) return {true, true};
  if (rs.compare(rs.bilinear(beta.coords, alpha.coords), T(1)) < 0) {
    return {false, true};
  }
  int cap = lcap.value_or(default_dominance_cap(beta.depth, alpha.depth));
  std::size_t n = rs.rank();

  // A state is the concatenation (wβ, wα).
  auto join = [](Vec<T> const& a, Vec<T> const& b) {
    Vec<T> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  std::set<Vec<T>, LexLess<T>> seen(rs.vector_less());
  std::vector<std::pair<Vec<T>, Vec<T>>> layer{{beta.coords, alpha.coords}};
  seen.insert(join(beta.coords, alpha.coords));
  for (int length = 0; length < cap && !layer.empty(); ++length) {
    std::vector<std::pair<Vec<T>, Vec<T>>> next;
    for (auto const& [g, d] : layer) {
      for (Generator s = 0; s < n; ++s) {
        Vec<T> const simple = rs.simple_root(s);
        bool g_simple = rs.same_vector(g, simple);
        bool d_simple = rs.same_vector(d, simple);
        // s sends exactly the simple root αs from Φ⁺ to Φ⁻.
        if (g_simple && !d_simple) return {false, true};
        if (d_simple && !g_simple) return {true, true};
        Vec<T> g2 = rs.reflect(s, g), d2 = rs.reflect(s, d);
        if (seen.insert(join(g2, d2)).second) next.emplace_back(std::move(g2), std::move(d2));
      }
    }
    layer = std::move(next);
  }
  // An exhausted orbit means every element was checked.
  return {true, layer.empty()};
}

template <class T>
bool is_small(RootSystem<T> const& rs, Root<T> const& beta,
              SmallRootSet<T> const& sigma) {
  (void)rs;
  return sigma.index_of(beta.coords).has_value();
}

template <class T>
std::optional<std::pair<T, T>> positive_two_term(RootSystem<T> const& rs,
                                                  Vec<T> const& alpha,
                                                  Vec<T> const& beta,
                                                  Vec<T> const& gamma) {
  // Normal equations with the Euclidean product; the form B may be
  // degenerate, so it cannot be used here.
  auto dot = [](Vec<T> const& u, Vec<T> const& v) {
    T total(0);
    for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * v[i];
    return total;
  };
  T bb = dot(beta, beta), bg = dot(beta, gamma), gg = dot(gamma, gamma);
  T ab = dot(alpha, beta), ag = dot(alpha, gamma);
  T det = bb * gg - bg * bg;
  T scale = bb * gg;
  if (rs.sign(T(det / scale)) == 0) return std::nullopt;
  T a = (ab * gg - ag * bg) / det;
  T b = (ag * bb - ab * bg) / det;
  if (rs.sign(a) <= 0 || rs.sign(b) <= 0) return std::nullopt;
  Vec<T> combo(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) combo[i] = a * beta[i] + b * gamma[i];
  if (!rs.same_vector(combo, alpha)) return std::nullopt;
  return std::make_pair(a, b);
}

template <class T>
std::vector<std::vector<Support>> bipodal_supports(
    RootSystem<T> const& rs, std::vector<Root<T>> const& roots) {
  std::vector<std::vector<Support>> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (roots[j].depth >= roots[i].depth) continue;
      for (std::size_t k = j + 1; k < roots.size(); ++k) {
        if (roots[k].depth >= roots[i].depth) continue;
        if (positive_two_term(rs, roots[i].coords, roots[j].coords, roots[k].coords)) {
          out[i].push_back(Support{j, k});
        }
      }
    }
  }
  return out;
}

template <class T>
bool is_bipodal(RootSystem<T> const& rs, std::vector<Root<T>> const& gamma) {
  auto supports = bipodal_supports(rs, gamma);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    bool simple = gamma[i].depth == 1;
    if (!simple && supports[i].empty()) return false;
  }
  return true;
}

template class SmallRootSet<double>;
template class SmallRootSet<Rational>;

#define COXLOW_INSTANTIATE(T)                                                  \
  template SmallRootSet<T> small_roots(RootSystem<T> const&, std::size_t);    \
  template DominanceVerdict dominates(RootSystem<T> const&, Root<T> const&,    \
                                      Root<T> const&, std::optional<int>);     \
  template bool is_small(RootSystem<T> const&, Root<T> const&,                 \
                         SmallRootSet<T> const&);                              \
  template std::optional<std::pair<T, T>> positive_two_term(                   \
      RootSystem<T> const&, Vec<T> const&, Vec<T> const&, Vec<T> const&);      \
  template std::vector<std::vector<Support>> bipodal_supports(                 \
      RootSystem<T> const&, std::vector<Root<T>> const&);                      \
  template bool is_bipodal(RootSystem<T> const&, std::vector<Root<T>> const&);

COXLOW_INSTANTIATE(double)
COXLOW_INSTANTIATE(Rational)
#undef COXLOW_INSTANTIATE

}  // namespace coxlow
