#include "coxlow/root_system.hpp"

#include <algorithm>
#include <numbers>

#include "coxlow/error.hpp"

namespace coxlow {

namespace {

std::string pair_name(Generator s, Generator t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

template <class T>
T finite_bond_entry(unsigned m);

template <>
double finite_bond_entry<double>(unsigned m) {
  if (m == 2) return 0.0;
  if (m == 3) return -0.5;
  return -std::cos(std::numbers::pi / static_cast<double>(m));
}

template <>
Rational finite_bond_entry<Rational>(unsigned m) {
  if (m == 2) return Rational(0);
  if (m == 3) return Rational(-1, 2);
  throw Error(ErrorCode::IrrationalEntryForExactBackend,
              "-cos(pi/" + std::to_string(m) + ") is irrational");
}

}  // namespace

template <class T>
RootSystem<T>::RootSystem(CoxeterMatrix matrix,
                          std::vector<GramOverride> overrides, double eps)
    : matrix_(std::move(matrix)), overrides_(std::move(overrides)), eps_(eps) {
  std::size_t n = matrix_.rank();
  gram_.assign(n, std::vector<T>(n, T(0)));
  for (Generator s = 0; s < n; ++s) {
    gram_[s][s] = T(1);
    for (Generator t = s + 1; t < n; ++t) {
      T value = matrix_.is_infinite(s, t) ? T(-1)
                                          : finite_bond_entry<T>(matrix_(s, t));
      gram_[s][t] = gram_[t][s] = value;
    }
  }
  for (auto const& o : overrides_) {
    if (o.s >= n || o.t >= n || o.s == o.t) {
      throw Error(ErrorCode::InvalidBondLabel,
                  "override pair " + pair_name(o.s, o.t) + " out of range");
    }
    if (!matrix_.is_infinite(o.s, o.t)) {
      throw Error(ErrorCode::OverrideOnFiniteBond,
                  "override on finite bond " + pair_name(o.s, o.t));
    }
    if (o.value > -1) {
      throw Error(ErrorCode::OverrideAboveMinusOne,
                  "override value " + o.value.str() + " on " +
                      pair_name(o.s, o.t) + " exceeds -1");
    }
    T value = ScalarTraits<T>::from_rational(o.value);
    gram_[o.s][o.t] = gram_[o.t][o.s] = value;
  }
}

template <class T>
void RootSystem<T>::check_dim(std::span<T const> v) const {
  if (v.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected length " + std::to_string(rank()) + ", got " +
                    std::to_string(v.size()));
  }
}

template <class T>
Vec<T> RootSystem<T>::simple_root(Generator s) const {
  if (s >= rank()) {
    throw Error(ErrorCode::GeneratorOutOfRange, std::to_string(s));
  }
  Vec<T> v(rank(), T(0));
  v[s] = T(1);
  return v;
}

template <class T>
T RootSystem<T>::bilinear(std::span<T const> u, std::span<T const> v) const {
  check_dim(u);
  check_dim(v);
  T total(0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    T row(0);
    for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * v[j];
    total += u[i] * row;
  }
  return total;
}

template <class T>
T RootSystem<T>::pair_with_simple(Generator s, std::span<T const> v) const {
  check_dim(v);
  T total(0);
  for (std::size_t j = 0; j < rank(); ++j) {
    if (v[j] != 0) total += gram_[s][j] * v[j];
  }
  return total;
}

template <class T>
void RootSystem<T>::reflect_in_place(Generator s, Vec<T>& v) const {
  if (s >= rank()) {
    throw Error(ErrorCode::GeneratorOutOfRange, std::to_string(s));
  }
  T c = pair_with_simple(s, v);
  v[s] -= 2 * c;
}

template <class T>
Vec<T> RootSystem<T>::reflect(Generator s, std::span<T const> v) const {
  Vec<T> out(v.begin(), v.end());
  reflect_in_place(s, out);
  return out;
}

template <class T>
Vec<T> RootSystem<T>::act(Word const& word, std::span<T const> v) const {
  Vec<T> out(v.begin(), v.end());
  check_dim(out);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    reflect_in_place(*it, out);
  }
  return out;
}

template <class T>
Orientation RootSystem<T>::orientation(std::span<T const> v) const {
  bool pos = false, neg = false;
  for (auto const& x : v) {
    int c = sign(x);
    pos |= c > 0;
    neg |= c < 0;
  }
  if (pos && neg) return Orientation::Mixed;
  if (pos) return Orientation::Positive;
  if (neg) return Orientation::Negative;
  return Orientation::Zero;
}

template <class T>
std::size_t RootTable<T>::insert(Root<T> root) {
  auto it = index_.find(root.coords);
  if (it != index_.end()) return it->second;
  std::size_t id = roots_.size();
  index_.emplace(root.coords, id);
  roots_.push_back(std::move(root));
  return id;
}

template <class T>
std::optional<std::size_t> RootTable<T>::find(Vec<T> const& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class T>
void sort_roots(std::vector<Root<T>>& roots, double eps) {
  std::sort(roots.begin(), roots.end(), [eps](Root<T> const& a, Root<T> const& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return lex_compare(a.coords, b.coords, eps) < 0;
  });
}

template <class T>
std::vector<Root<T>> roots_up_to_depth(RootSystem<T> const& rs, int max_depth) {
  RootTable<T> table(rs.tolerance());
  std::vector<std::size_t> layer;
  for (Generator s = 0; s < rs.rank(); ++s) {
    layer.push_back(table.insert(Root<T>{rs.simple_root(s), 1, true}));
  }
  // dp(sβ) = dp(β) + 1 exactly when B(αs,β) < 0, and every root of depth
  // d + 1 arises that way from a root of depth d.
  for (int depth = 1; depth < max_depth && !layer.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : layer) {
      for (Generator s = 0; s < rs.rank(); ++s) {
        Vec<T> const& beta = table[id].coords;
        if (rs.sign(rs.pair_with_simple(s, beta)) >= 0) continue;
        Vec<T> image = rs.reflect(s, beta);
        std::size_t before = table.size();
        std::size_t got = table.insert(Root<T>{std::move(image), depth + 1, true});
        if (got == before) next.push_back(got);
      }
    }
    layer = std::move(next);
  }
  std::vector<Root<T>> out = table.roots();
  sort_roots(out, rs.tolerance());
  return out;
}

template class RootSystem<double>;
template class RootSystem<Rational>;
template class RootTable<double>;
template class RootTable<Rational>;
template std::vector<Root<double>> roots_up_to_depth(RootSystem<double> const&, int);
template std::vector<Root<Rational>> roots_up_to_depth(RootSystem<Rational> const&, int);
template void sort_roots(std::vector<Root<double>>&, double);
template void sort_roots(std::vector<Root<Rational>>&, double);

}  // namespace coxlow
