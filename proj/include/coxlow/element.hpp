#ifndef COXLOW_ELEMENT_HPP_
#define COXLOW_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coxlow/root_mask.hpp"
#include "coxlow/root_system.hpp"
#include "coxlow/small_roots.hpp"

namespace coxlow {

// A group element, always held as its ShortLex normal form: the
// lexicographically least among its reduced words, generators ordered by
// index. Equality and ordering go through the normal form only.
class Element {
 public:
  Element() = default;

  // The caller guarantees `normal_form` is already ShortLex-normal; use
  // normalize() for arbitrary words.
  static Element from_normal_form(Word normal_form) {
    Element e;
    e.word_ = std::move(normal_form);
    return e;
  }

  Word const& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }

  bool operator==(Element const&) const = default;
  // ShortLex: length first, then lexicographic.
  std::strong_ordering operator<=>(Element const& other) const {
    if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
    return word_ <=> other.word_;
  }

 private:
  Word word_;
};

// "e" for the empty word; letters are generator indices, e.g. "0120".
// Ranks above 10 separate letters with dots.
std::string format_word(Word const& word);
std::string format_element(Element const& w);
// Accepts "e", "", "0120", "0.1.2.0" or "0 1 2 0".
Word parse_word(std::string const& text);

template <class T>
struct InversionSet {
  // Listed in prefix order αs₁, s₁αs₂, …
  std::vector<Vec<T>> roots;
  std::size_t size() const noexcept { return roots.size(); }
};

template <class T>
Element normalize(RootSystem<T> const& rs, Word const& word);

// s·w in normal form, for any s (the result may be shorter).
template <class T>
Element multiply_left(RootSystem<T> const& rs, Generator s, Element const& w);

// True iff every prefix root s₁⋯s_{k-1}(αs_k) is positive.
template <class T>
bool is_reduced_word(RootSystem<T> const& rs, Word const& word);

// N(w) = Φ⁺ ∩ w(Φ⁻) by the prefix formula; throws NonReducedInput when the
// word is not reduced.
template <class T>
InversionSet<T> inversion_set(RootSystem<T> const& rs, Word const& word);

template <class T>
InversionSet<T> inversion_set(RootSystem<T> const& rs, Element const& w) {
  return inversion_set(rs, w.word());
}

// {s : αs ∈ N(w)} = {s : ℓ(sw) < ℓ(w)}, ascending.
template <class T>
std::vector<Generator> left_descents(RootSystem<T> const& rs, Element const& w);

// λ(w) = Σ ∩ N(w).
template <class T>
RootMask small_inversion_set(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma, Element const& w);

template <class T>
RootMask small_inversion_set(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             InversionSet<T> const& inversions);

}  // namespace coxlow

#endif  // COXLOW_ELEMENT_HPP_
