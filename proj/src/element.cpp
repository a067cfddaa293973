#include "coxlow/element.hpp"

#include <cctype>

#include "coxlow/error.hpp"

namespace coxlow {

std::string format_word(Word const& word) {
  if (word.empty()) return "e";
  bool compact = true;
  for (auto g : word) compact &= g < 10;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_element(Element const& w) { return format_word(w.word()); }

Word parse_word(std::string const& text) {
  Word out;
  if (text.empty() || text == "e") return out;
  bool separated = text.find_first_of(". ,") != std::string::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    out.push_back(static_cast<Generator>(std::stoul(token)));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
      if (!separated) flush();
    } else if (c == '.' || c == ' ' || c == ',') {
      flush();
    } else {
      throw Error(ErrorCode::ParseError, "bad word '" + text + "'");
    }
  }
  flush();
  return out;
}

namespace {

template <class T>
void check_generators(RootSystem<T> const& rs, Word const& word) {
  for (auto g : word) {
    if (g >= rs.rank()) {
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "generator " + std::to_string(g) + " in a rank " +
                      std::to_string(rs.rank()) + " group");
    }
  }
}

}  // namespace

template <class T>
Element normalize(RootSystem<T> const& rs, Word const& word) {
  check_generators(rs, word);
  std::size_t n = rs.rank();
  // columns[s] = w⁻¹(αs); s is a left descent of w iff it is negative.
  std::vector<Vec<T>> columns(n);
  for (Generator s = 0; s < n; ++s) {
    columns[s] = rs.simple_root(s);
    for (auto g : word) rs.reflect_in_place(g, columns[s]);
  }
  Word out;
  for (;;) {
    std::optional<Generator> first;
    for (Generator s = 0; s < n && !first; ++s) {
      if (rs.orientation(columns[s]) == Orientation::Negative) first = s;
    }
    if (!first) break;
    Generator s = *first;
    out.push_back(s);
    // w ← s·w, so w⁻¹ ← w⁻¹·s and w⁻¹(αt) ← w⁻¹(αt) - 2B(αs,αt)·w⁻¹(αs).
    Vec<T> const pivot = columns[s];
    for (Generator t = 0; t < n; ++t) {
      T c = 2 * rs.form(s, t);
      if (rs.sign(c) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) columns[t][i] -= c * pivot[i];
    }
  }
  return Element::from_normal_form(std::move(out));
}

template <class T>
Element multiply_left(RootSystem<T> const& rs, Generator s, Element const& w) {
  Word word;
  word.reserve(w.length() + 1);
  word.push_back(s);
  word.insert(word.end(), w.word().begin(), w.word().end());
  return normalize(rs, word);
}

template <class T>
bool is_reduced_word(RootSystem<T> const& rs, Word const& word) {
  check_generators(rs, word);
  // Walk from the right: s_k ⋯ s_1 applied step by step is the inverse of
  // the prefix; track the prefix action on each simple root instead.
  std::size_t n = rs.rank();
  std::vector<Vec<T>> prefix(n);  // prefix(αs) for each s
  for (Generator s = 0; s < n; ++s) prefix[s] = rs.simple_root(s);
  for (auto g : word) {
    if (rs.orientation(prefix[g]) != Orientation::Positive) return false;
    // prefix ← prefix·g: prefix·g(αt) = prefix(αt) - 2B(αg,αt) prefix(αg).
    Vec<T> const pivot = prefix[g];
    for (Generator t = 0; t < n; ++t) {
      T c = 2 * rs.form(g, t);
      if (rs.sign(c) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) prefix[t][i] -= c * pivot[i];
    }
  }
  return true;
}

template <class T>
InversionSet<T> inversion_set(RootSystem<T> const& rs, Word const& word) {
  check_generators(rs, word);
  InversionSet<T> out;
  RootTable<T> seen(rs.tolerance());
  Word prefix;
  for (auto g : word) {
    Vec<T> root = rs.act(prefix, rs.simple_root(g));
    if (rs.orientation(root) != Orientation::Positive) {
      throw Error(ErrorCode::NonReducedInput,
                  "word " + format_word(word) + " is not reduced");
    }
    std::size_t before = seen.size();
    if (seen.insert(Root<T>{root, 0, true}) != before) {
      throw Error(ErrorCode::NonReducedInput,
                  "duplicate inversion in " + format_word(word));
    }
    out.roots.push_back(std::move(root));
    prefix.push_back(g);
  }
  return out;
}

template <class T>
std::vector<Generator> left_descents(RootSystem<T> const& rs, Element const& w) {
  auto inv = inversion_set(rs, w);
  std::vector<Generator> out;
  for (Generator s = 0; s < rs.rank(); ++s) {
    Vec<T> simple = rs.simple_root(s);
    for (auto const& r : inv.roots) {
      if (rs.same_vector(r, simple)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

template <class T>
RootMask small_inversion_set(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma,
                             InversionSet<T> const& inversions) {
  (void)rs;
  RootMask mask = sigma.empty_mask();
  for (auto const& r : inversions.roots) {
    if (auto id = sigma.index_of(r)) mask.set(*id);
  }
  return mask;
}

template <class T>
RootMask small_inversion_set(RootSystem<T> const& rs,
                             SmallRootSet<T> const& sigma, Element const& w) {
  return small_inversion_set(rs, sigma, inversion_set(rs, w));
}

#define COXLOW_INSTANTIATE(T)                                                  \
  template Element normalize(RootSystem<T> const&, Word const&);              \
  template Element multiply_left(RootSystem<T> const&, Generator,              \
                                 Element const&);                              \
  template bool is_reduced_word(RootSystem<T> const&, Word const&);           \
  template InversionSet<T> inversion_set(RootSystem<T> const&, Word const&);  \
  template std::vector<Generator> left_descents(RootSystem<T> const&,         \
                                                Element const&);               \
  template RootMask small_inversion_set(RootSystem<T> const&,                  \
                                        SmallRootSet<T> const&,                \
                                        InversionSet<T> const&);               \
  template RootMask small_inversion_set(RootSystem<T> const&,                  \
                                        SmallRootSet<T> const&,                \
                                        Element const&);

COXLOW_INSTANTIATE(double)
COXLOW_INSTANTIATE(Rational)
#undef COXLOW_INSTANTIATE

}  // namespace coxlow
