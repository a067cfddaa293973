#include "coxlow/automaton.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace coxlow {

Automaton::Automaton(std::size_t rank, std::vector<RootMask> states,
                     std::vector<std::vector<std::optional<std::size_t>>> transitions,
                     std::vector<Word> access_words)
    : rank_(rank),
      states_(std::move(states)),
      transitions_(std::move(transitions)),
      access_words_(std::move(access_words)) {}

std::optional<std::size_t> Automaton::index_of(RootMask const& mask) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == mask) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Automaton::run(Word const& word) const {
  std::size_t q = 0;
  for (auto g : word) {
    if (g >= rank_) return std::nullopt;
    auto to = transitions_[q][g];
    if (!to) return std::nullopt;
    q = *to;
  }
  return q;
}

template <class T>
Automaton build_automaton(RootSystem<T> const& rs, SmallRootSet<T> const& sigma) {
  std::size_t n = rs.rank();
  std::vector<RootMask> states{sigma.empty_mask()};
  std::vector<Word> access{Word{}};
  std::unordered_map<RootMask, std::size_t, RootMaskHash> ids{{states[0], 0}};
  std::vector<std::vector<std::optional<std::size_t>>> delta;

  // Breadth-first from ∅ with generators in order, so state numbering and
  // access words are shortlex.
  for (std::size_t q = 0; q < states.size(); ++q) {
    delta.emplace_back(n);
    for (Generator s = 0; s < n; ++s) {
      RootMask const& from = states[q];
      if (from.test(sigma.simple_index(s))) continue;
      RootMask to = sigma.empty_mask();
      to.set(sigma.simple_index(s));
      for (std::size_t i : from.indices()) {
        if (auto j = sigma.reflection(s, i)) to.set(*j);
      }
      auto [it, inserted] = ids.emplace(to, states.size());
      if (inserted) {
        states.push_back(to);
        Word w = access[q];
        w.push_back(s);
        access.push_back(std::move(w));
      }
      delta[q][s] = it->second;
    }
  }
  return Automaton(n, std::move(states), std::move(delta), std::move(access));
}

bool is_reduced(Automaton const& aut, Word const& word) {
  return aut.run(word).has_value();
}

std::vector<BigInt> growth_series(Automaton const& aut, std::size_t k) {
  std::vector<BigInt> counts(aut.size(), 0);
  counts[0] = 1;
  std::vector<BigInt> series{1};
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<BigInt> next(aut.size(), 0);
    for (std::size_t q = 0; q < aut.size(); ++q) {
      if (counts[q] == 0) continue;
      for (Generator s = 0; s < aut.rank(); ++s) {
        if (auto to = aut.next(q, s)) next[*to] += counts[q];
      }
    }
    counts = std::move(next);
    BigInt total = 0;
    for (auto const& c : counts) total += c;
    series.push_back(total);
  }
  return series;
}

namespace {

// Layer-by-layer extension w ↦ w·s, deduplicated through normal forms.
template <class T, class Visit>
void for_each_layer(RootSystem<T> const& rs, std::size_t k, Visit visit) {
  std::set<Word> layer{Word{}};
  visit(std::size_t{0}, layer);
  for (std::size_t len = 1; len <= k; ++len) {
    std::set<Word> next;
    for (auto const& w : layer) {
      for (Generator s = 0; s < rs.rank(); ++s) {
        // w·s is longer iff w(αs) is positive.
        if (rs.orientation(rs.act(w, rs.simple_root(s))) != Orientation::Positive) {
          continue;
        }
        Word ws = w;
        ws.push_back(s);
        next.insert(normalize(rs, ws).word());
      }
    }
    layer = std::move(next);
    visit(len, layer);
  }
}

}  // namespace

template <class T>
std::vector<Element> enumerate_elements(RootSystem<T> const& rs, std::size_t k) {
  std::vector<Element> out;
  for_each_layer(rs, k, [&](std::size_t, std::set<Word> const& layer) {
    for (auto const& w : layer) out.push_back(Element::from_normal_form(w));
  });
  return out;
}

template <class T>
std::vector<std::uint64_t> count_elements(RootSystem<T> const& rs, std::size_t k) {
  std::vector<std::uint64_t> out;
  for_each_layer(rs, k, [&](std::size_t, std::set<Word> const& layer) {
    out.push_back(layer.size());
  });
  return out;
}

template <class T>
std::vector<std::string> root_labels(SmallRootSet<T> const& sigma) {
  std::vector<std::string> out;
  for (auto const& r : sigma.roots()) {
    std::string label = "(";
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
      if (i) label += ",";
      label += ScalarTraits<T>::to_string(r.coords[i]);
    }
    out.push_back(label + ")");
  }
  return out;
}

std::string export_dot(Automaton const& aut,
                       std::vector<std::string> const& root_labels) {
  std::ostringstream os;
  os << "digraph small_root_automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t q = 0; q < aut.size(); ++q) {
    auto const& mask = aut.state(q);
    std::string roots;
    for (std::size_t i : mask.indices()) {
      if (!roots.empty()) roots += " ";
      roots += i < root_labels.size() ? root_labels[i] : std::to_string(i);
    }
    if (roots.empty()) roots = "{}";
    os << "  q" << q << " [label=\"q" << q << " " << mask.bits() << "\\n"
       << roots << "\"";
    if (q == 0) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t q = 0; q < aut.size(); ++q) {
    for (Generator s = 0; s < aut.rank(); ++s) {
      if (auto to = aut.next(q, s)) {
        os << "  q" << q << " -> q" << *to << " [label=\"" << s << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

template Automaton build_automaton(RootSystem<double> const&, SmallRootSet<double> const&);
template Automaton build_automaton(RootSystem<Rational> const&, SmallRootSet<Rational> const&);
template std::vector<Element> enumerate_elements(RootSystem<double> const&, std::size_t);
template std::vector<Element> enumerate_elements(RootSystem<Rational> const&, std::size_t);
template std::vector<std::uint64_t> count_elements(RootSystem<double> const&, std::size_t);
template std::vector<std::uint64_t> count_elements(RootSystem<Rational> const&, std::size_t);
template std::vector<std::string> root_labels(SmallRootSet<double> const&);
template std::vector<std::string> root_labels(SmallRootSet<Rational> const&);

}  // namespace coxlow
