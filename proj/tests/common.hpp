#ifndef COXLOW_TESTS_COMMON_HPP_
#define COXLOW_TESTS_COMMON_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coxlow/group.hpp"
#include "oracle.hpp"

namespace testing {

using namespace coxlow;

inline oracle::Geometry geometry_of(GroupSpec const& spec) {
  std::map<std::pair<unsigned, unsigned>, double> ov;
  for (auto const& o : spec.overrides) {
    ov[{std::min(o.s, o.t), std::max(o.s, o.t)}] = o.value.convert_to<double>();
  }
  return oracle::geometry(spec.matrix.entries(), ov);
}

template <class T>
oracle::Vector as_doubles(Vec<T> const& v) {
  oracle::Vector out;
  for (auto const& x : v) out.push_back(ScalarTraits<T>::to_double(x));
  return out;
}

inline Vec<Rational> rationals(std::vector<long> const& v) {
  Vec<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline Word word(std::string const& s) { return parse_word(s); }

inline GroupSpec spec_of(CoxeterMatrix m, std::string name = {},
                         std::vector<GramOverride> overrides = {}) {
  return GroupSpec{std::move(name), std::move(m), std::move(overrides), Backend::Float};
}

inline GroupSpec battery_group(std::string const& name) {
  for (auto const& g : standard_battery())
    if (g.name == name) return g;
  throw std::runtime_error("no battery group " + name);
}

inline std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string source_path(std::string const& rel) {
  return std::string(COXLOW_SOURCE_DIR) + "/" + rel;
}

// Compares against a frozen file; COXLOW_UPDATE_GOLDEN=1 rewrites it.
inline bool matches_golden(std::string const& rel, std::string const& text) {
  std::string path = source_path(rel);
  if (std::getenv("COXLOW_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << text;
    return true;
  }
  return read_text(path) == text;
}

}  // namespace testing

#endif  // COXLOW_TESTS_COMMON_HPP_
