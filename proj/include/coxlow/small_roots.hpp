#ifndef COXLOW_SMALL_ROOTS_HPP_
#define COXLOW_SMALL_ROOTS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxlow/root_mask.hpp"
#include "coxlow/root_system.hpp"

namespace coxlow {

// A pair of lower-depth roots whose open cone contains a given root.
struct Support {
  std::size_t first;
  std::size_t second;
};

// The finite set Σ of small roots with frozen indexing 0..|Σ|-1, ordered by
// (depth, coordinates). Immutable after construction.
template <class T>
class SmallRootSet {
 public:
  SmallRootSet(RootSystem<T> const& rs, std::vector<Root<T>> sorted_roots);

  std::size_t size() const noexcept { return table_.size(); }
  Root<T> const& operator[](std::size_t i) const { return table_[i]; }
  std::vector<Root<T>> const& roots() const noexcept { return table_.roots(); }

  std::optional<std::size_t> index_of(Vec<T> const& coords) const {
    return table_.find(coords);
  }
  std::size_t simple_index(Generator s) const { return simple_index_[s]; }
  int max_depth() const noexcept;

  // Index of s·Σ[i] when it is again a small root.
  std::optional<std::size_t> reflection(Generator s, std::size_t i) const {
    return reflection_[s][i];
  }

  // Bipodal supports of Σ[i] inside Σ (empty for simple roots).
  std::vector<Support> const& supports(std::size_t i) const {
    return supports_[i];
  }

  RootMask empty_mask() const { return RootMask(size()); }

 private:
  RootTable<T> table_;
  std::vector<std::size_t> simple_index_;
  std::vector<std::vector<std::optional<std::size_t>>> reflection_;
  std::vector<std::vector<Support>> supports_;
};

inline constexpr std::size_t kDefaultClosureCap = 100000;

// Closure of Δ under β ↦ sβ for short edges -1 < B(αs,β) < 0.
// Throws ClosureCapExceeded after `cap` insertions.
template <class T>
SmallRootSet<T> small_roots(RootSystem<T> const& rs,
                            std::size_t cap = kDefaultClosureCap);

struct DominanceVerdict {
  bool dominates = false;
  // False when the search stopped at the length cap without a witness.
  bool decisive = true;
};

// Default length cap 2·(dp(α)+dp(β)) + 4.
int default_dominance_cap(int depth_beta, int depth_alpha);

// Whether β dominates α: every w sending β negative also sends α negative.
// B(β,α) < 1 with β ≠ α decides "no" immediately. Otherwise the pair
// (wβ, wα) is explored breadth-first over words of length <= lcap. A word
// sending β negative while keeping α positive refutes dominance; a word
// doing the converse refutes "α dominates β", which settles the comparable
// case B(β,α) >= 1 in favour of β.
template <class T>
DominanceVerdict dominates(RootSystem<T> const& rs, Root<T> const& beta,
                           Root<T> const& alpha, std::optional<int> lcap = {});

template <class T>
bool is_small(RootSystem<T> const& rs, Root<T> const& beta,
              SmallRootSet<T> const& sigma);

// α = a·β + b·γ with a, b > 0, if such a decomposition exists.
template <class T>
std::optional<std::pair<T, T>> positive_two_term(RootSystem<T> const& rs,
                                                  Vec<T> const& alpha,
                                                  Vec<T> const& beta,
                                                  Vec<T> const& gamma);

// For each root of `roots`, the pairs {β, γ} of members of strictly smaller
// depth with the root in the open cone of β and γ.
template <class T>
std::vector<std::vector<Support>> bipodal_supports(
    RootSystem<T> const& rs, std::vector<Root<T>> const& roots);

// Γ is bipodal when every non-simple member stands on two feet: it lies in
// the open cone spanned by two members of strictly smaller depth.
template <class T>
bool is_bipodal(RootSystem<T> const& rs, std::vector<Root<T>> const& gamma);

extern template class SmallRootSet<double>;
extern template class SmallRootSet<Rational>;

}  // namespace coxlow

#endif  // COXLOW_SMALL_ROOTS_HPP_
