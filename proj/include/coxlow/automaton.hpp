#ifndef COXLOW_AUTOMATON_HPP_
#define COXLOW_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxlow/element.hpp"
#include "coxlow/root_mask.hpp"
#include "coxlow/small_roots.hpp"

namespace coxlow {

// Deterministic acceptor of reduced words whose states are the small
// inversion sets Λ. State 0 is ∅ and every state is accepting.
//
// Words are read left to right. After reading u the state is Σ ∩ N(u⁻¹),
// so δ(A, s) = {αs} ∪ (s·A ∩ Σ), defined iff αs ∉ A. Reading the reverse of
// a reduced word for w therefore lands on λ(w) = Σ ∩ N(w).
class Automaton {
 public:
  Automaton(std::size_t rank, std::vector<RootMask> states,
            std::vector<std::vector<std::optional<std::size_t>>> transitions,
            std::vector<Word> access_words);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return states_.size(); }
  RootMask const& state(std::size_t i) const { return states_[i]; }
  std::vector<RootMask> const& states() const noexcept { return states_; }
  std::optional<std::size_t> next(std::size_t state, Generator s) const {
    return transitions_[state][s];
  }
  std::optional<std::size_t> index_of(RootMask const& mask) const;

  // Shortlex-least word reaching the state from ∅.
  Word const& access_word(std::size_t state) const { return access_words_[state]; }

  // State reached by reading the word, or nullopt if a transition is missing.
  std::optional<std::size_t> run(Word const& word) const;

 private:
  std::size_t rank_;
  std::vector<RootMask> states_;
  std::vector<std::vector<std::optional<std::size_t>>> transitions_;
  std::vector<Word> access_words_;
};

template <class T>
Automaton build_automaton(RootSystem<T> const& rs, SmallRootSet<T> const& sigma);

bool is_reduced(Automaton const& aut, Word const& word);

// Number of accepted words (= reduced words) of each length 0..k.
std::vector<BigInt> growth_series(Automaton const& aut, std::size_t k);

// All elements of length <= k in (length, ShortLex) order.
template <class T>
std::vector<Element> enumerate_elements(RootSystem<T> const& rs, std::size_t k);

// Number of distinct elements of each length 0..k, by breadth-first search
// with normal-form deduplication.
template <class T>
std::vector<std::uint64_t> count_elements(RootSystem<T> const& rs, std::size_t k);

// Labels "(c0,c1,...)" of the small roots, for DOT and tables.
template <class T>
std::vector<std::string> root_labels(SmallRootSet<T> const& sigma);

// DOT digraph; nodes carry the bitmask and root list, the start state is
// drawn doubled.
std::string export_dot(Automaton const& aut,
                       std::vector<std::string> const& root_labels);

}  // namespace coxlow

#endif  // COXLOW_AUTOMATON_HPP_
