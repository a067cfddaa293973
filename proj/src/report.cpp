#include "coxlow/report.hpp"

namespace coxlow {

using json = nlohmann::ordered_json;

namespace {

template <class T>
json coords_json(Vec<T> const& v) {
  json out = json::array();
  for (auto const& x : v) {
    if constexpr (ScalarTraits<T>::exact) {
      out.push_back(x.str());
    } else {
      out.push_back(x == 0.0 ? 0.0 : x);
    }
  }
  return out;
}

json mask_json(RootMask const& m) {
  return json{{"bits", m.bits()}, {"indices", m.indices()}};
}

}  // namespace

json group_json(GroupSpec const& spec) { return json::parse(group_to_json(spec)); }

template <class T>
json small_roots_json(GroupSpec const& spec, SmallRootSet<T> const& sigma) {
  json roots = json::array();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    roots.push_back({{"index", i},
                     {"coords", coords_json(sigma[i].coords)},
                     {"depth", sigma[i].depth}});
  }
  return json{{"schema", "coxlow.small-roots/1"},
              {"group", group_json(spec)},
              {"count", sigma.size()},
              {"small_roots", roots}};
}

template <class T>
json low_elements_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                       LowEnumeration const& lows) {
  (void)sigma;
  json elems = json::array();
  for (std::size_t i = 0; i < lows.elements.size(); ++i) {
    elems.push_back({{"word", format_element(lows.elements[i])},
                     {"length", lows.elements[i].length()},
                     {"lambda", mask_json(lows.lambdas[i])}});
  }
  return json{{"schema", "coxlow.low-elements/1"},
              {"group", group_json(spec)},
              {"max_length", lows.max_length},
              {"count", lows.elements.size()},
              {"count_by_length", lows.count_by_length},
              {"low_elements", elems},
              {"completeness",
               {{"search_exhausted", lows.exhausted},
                {"all_lambdas_realized", lows.all_lambdas_realized()},
                {"unrealized_states", lows.unrealized_states},
                {"complete", lows.complete()}}}};
}

template <class T>
json automaton_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                    Automaton const& aut) {
  json states = json::array();
  for (std::size_t q = 0; q < aut.size(); ++q) {
    json next = json::object();
    for (Generator s = 0; s < aut.rank(); ++s) {
      if (auto to = aut.next(q, s)) next[std::to_string(s)] = *to;
    }
    states.push_back({{"id", q},
                      {"lambda", mask_json(aut.state(q))},
                      {"access_word", format_word(aut.access_word(q))},
                      {"transitions", next}});
  }
  return json{{"schema", "coxlow.automaton/1"},
              {"group", group_json(spec)},
              {"small_root_count", sigma.size()},
              {"state_count", aut.size()},
              {"states", states}};
}

json growth_json(GroupSpec const& spec, std::vector<BigInt> const& words,
                 std::optional<std::vector<std::uint64_t>> const& elements) {
  json w = json::array();
  for (auto const& c : words) w.push_back(c.str());
  json doc{{"schema", "coxlow.growth/1"},
           {"group", group_json(spec)},
           {"reduced_words", w}};
  if (elements) doc["elements"] = *elements;
  return doc;
}

template <class T>
json verify_json(GroupSpec const& spec, SmallRootSet<T> const& sigma,
                 Automaton const& aut, VerifyArtifacts const& a) {
  auto const& b = a.bijection;
  json per_lambda = json::array();
  std::vector<std::optional<Element>> witness(aut.size());
  for (auto const& [x, q] : b.low_to_state) witness[q] = x;
  for (std::size_t q = 0; q < aut.size(); ++q) {
    json entry{{"state", q}, {"lambda", mask_json(aut.state(q))}};
    entry["witness"] = witness[q] ? json(format_element(*witness[q])) : json(nullptr);
    if (q < a.constructed.size()) {
      entry["constructed"] =
          a.constructed[q] ? json(format_element(*a.constructed[q])) : json(nullptr);
    }
    per_lambda.push_back(entry);
  }
  json doc{{"schema", "coxlow.verify/1"},
           {"group", group_json(spec)},
           {"small_root_count", sigma.size()},
           {"lambda_count", b.lambda_count},
           {"low_count", b.low_count},
           {"max_length", b.enumeration.max_length},
           {"injective", b.injective},
           {"surjective", b.surjective},
           {"search_exhausted", b.enumeration.exhausted},
           {"status", to_string(b.status())},
           {"unmatched_states", b.unmatched_states},
           {"per_lambda", per_lambda}};
  if (a.gbip) {
    json failures = json::array();
    for (auto const& w : a.gbip->failures) failures.push_back(format_element(w));
    doc["gbip"] = {{"max_length", a.gbip->max_length},
                   {"elements_checked", a.gbip->elements_checked},
                   {"cyclic", a.gbip->cyclic},
                   {"source_violations", a.gbip->source_violations},
                   {"failures", failures}};
  }
  if (a.polytopes) {
    std::size_t matched = 0;
    for (auto const& m : a.polytopes->matches) matched += m.witness.has_value();
    doc["polytopes"] = {{"simplex_edge_condition", a.polytopes->hypothesis_holds},
                        {"lambda_count", a.polytopes->matches.size()},
                        {"matched", matched},
                        {"all_matched", a.polytopes->all_matched()}};
  }
  return doc;
}

#define COXLOW_INSTANTIATE(T)                                                    \
  template json small_roots_json(GroupSpec const&, SmallRootSet<T> const&);     \
  template json low_elements_json(GroupSpec const&, SmallRootSet<T> const&,     \
                                  LowEnumeration const&);                       \
  template json automaton_json(GroupSpec const&, SmallRootSet<T> const&,        \
                               Automaton const&);                               \
  template json verify_json(GroupSpec const&, SmallRootSet<T> const&,           \
                            Automaton const&, VerifyArtifacts const&);

COXLOW_INSTANTIATE(double)
COXLOW_INSTANTIATE(Rational)
#undef COXLOW_INSTANTIATE

}  // namespace coxlow
