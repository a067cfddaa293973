#ifndef COXLOW_GROUP_HPP_
#define COXLOW_GROUP_HPP_

#include <string>
#include <vector>

#include "coxlow/automaton.hpp"
#include "coxlow/coxeter_matrix.hpp"
#include "coxlow/small_roots.hpp"

namespace coxlow {

// Validated contents of a group-input file:
//   { "rank": n, "coxeter": [[...]],
//     "gram_overrides": [{"pair": [i, j], "value": -1.5}],
//     "backend": "float" | "rational" }
// "coxeter" entries are integers >= 1 or the string "inf". An override
// value may also be given as a string "p/q".
struct GroupSpec {
  std::string name;
  CoxeterMatrix matrix;
  std::vector<GramOverride> overrides;
  Backend backend = Backend::Float;
};

// Throws ParseError for malformed JSON and ValidationError naming the
// offending field otherwise.
GroupSpec parse_group_file(std::string const& text);
std::string group_to_json(GroupSpec const& spec);

// The fixed rank-3 test battery, in a stable order. Names follow the bond
// triple (m01, m12, m02).
std::vector<GroupSpec> standard_battery();

// Whether every Gram entry is rational (bonds 2, 3, ∞).
bool has_rational_form(GroupSpec const& spec);

// Root system, small roots and automaton of one group, built once.
template <class T>
struct Group {
  RootSystem<T> rs;
  SmallRootSet<T> sigma;
  Automaton aut;

  explicit Group(GroupSpec const& spec, double eps = kDefaultTolerance)
      : rs(spec.matrix, spec.overrides, eps),
        sigma(small_roots(rs)),
        aut(build_automaton(rs, sigma)) {}
};

}  // namespace coxlow

#endif  // COXLOW_GROUP_HPP_
