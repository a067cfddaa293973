#ifndef COXLOW_ROOT_SYSTEM_HPP_
#define COXLOW_ROOT_SYSTEM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "coxlow/coxeter_matrix.hpp"
#include "coxlow/scalar.hpp"

namespace coxlow {

enum class Orientation { Positive, Negative, Zero, Mixed };

// A root in coordinates over the simple roots.
//
// Depth convention: dp(β) is the minimal length of a word sending β to a
// negative root, so dp(αs) = 1. Every depth in the library uses this
// normalization; texts that start simple roots at depth 0 differ by one.
template <class T>
struct Root {
  Vec<T> coords;
  int depth = 1;
  bool positive = true;
};

// Based root system of a Coxeter matrix: simple roots are the standard basis
// of R^n and B is the symmetric form with B(αs,αs) = 1,
// B(αs,αt) = -cos(π/m(s,t)) for finite bonds and B(αs,αt) <= -1 on ∞ bonds.
// Immutable after construction.
template <class T>
class RootSystem {
 public:
  RootSystem(CoxeterMatrix matrix, std::vector<GramOverride> overrides = {},
             double eps = kDefaultTolerance);

  std::size_t rank() const noexcept { return matrix_.rank(); }
  CoxeterMatrix const& matrix() const noexcept { return matrix_; }
  std::vector<GramOverride> const& overrides() const noexcept {
    return overrides_;
  }
  double tolerance() const noexcept { return eps_; }
  T const& form(Generator s, Generator t) const { return gram_[s][t]; }

  Vec<T> simple_root(Generator s) const;

  T bilinear(std::span<T const> u, std::span<T const> v) const;
  // B(αs, v); the hot path of every reflection.
  T pair_with_simple(Generator s, std::span<T const> v) const;
  Vec<T> reflect(Generator s, std::span<T const> v) const;
  void reflect_in_place(Generator s, Vec<T>& v) const;
  // Applies the word letter by letter, rightmost letter first.
  Vec<T> act(Word const& word, std::span<T const> v) const;

  int sign(T const& x) const { return coxlow::sign(x, eps_); }
  int compare(T const& a, T const& b) const {
    return coxlow::compare(a, b, eps_);
  }
  Orientation orientation(std::span<T const> v) const;
  bool same_vector(Vec<T> const& a, Vec<T> const& b) const {
    return lex_compare(a, b, eps_) == 0;
  }
  LexLess<T> vector_less() const { return LexLess<T>{eps_}; }

 private:
  void check_dim(std::span<T const> v) const;

  CoxeterMatrix matrix_;
  std::vector<GramOverride> overrides_;
  double eps_;
  std::vector<std::vector<T>> gram_;
};

// Roots ordered by (depth, coordinates) and looked up by coordinates within
// the root system's tolerance.
template <class T>
class RootTable {
 public:
  explicit RootTable(double eps = kDefaultTolerance) : index_(LexLess<T>{eps}) {}

  // Returns the index of an existing root with the same coordinates, or
  // appends and returns the new index.
  std::size_t insert(Root<T> root);
  std::optional<std::size_t> find(Vec<T> const& coords) const;
  bool contains(Vec<T> const& coords) const { return find(coords).has_value(); }

  std::size_t size() const noexcept { return roots_.size(); }
  Root<T> const& operator[](std::size_t i) const { return roots_[i]; }
  std::vector<Root<T>> const& roots() const noexcept { return roots_; }

 private:
  std::vector<Root<T>> roots_;
  std::map<Vec<T>, std::size_t, LexLess<T>> index_;
};

// Every positive root of depth <= max_depth, sorted by (depth, coordinates).
template <class T>
std::vector<Root<T>> roots_up_to_depth(RootSystem<T> const& rs, int max_depth);

// Sorts roots by (depth, lexicographic coordinates).
template <class T>
void sort_roots(std::vector<Root<T>>& roots, double eps);

extern template class RootSystem<double>;
extern template class RootSystem<Rational>;
extern template class RootTable<double>;
extern template class RootTable<Rational>;

}  // namespace coxlow

#endif  // COXLOW_ROOT_SYSTEM_HPP_
