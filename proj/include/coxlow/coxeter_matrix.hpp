#ifndef COXLOW_COXETER_MATRIX_HPP_
#define COXLOW_COXETER_MATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "coxlow/scalar.hpp"

namespace coxlow {

using Generator = unsigned;
using Word = std::vector<Generator>;

// Symmetric matrix of bond labels m(s,t). The value kInfinity encodes m = ∞.
class CoxeterMatrix {
 public:
  static constexpr unsigned kInfinity = 0;

  // Validates symmetry, unit diagonal and off-diagonal labels >= 2 or ∞.
  explicit CoxeterMatrix(std::vector<std::vector<unsigned>> entries);

  // Rank-3 shorthand (m(0,1), m(1,2), m(0,2)), the order used by the battery.
  static CoxeterMatrix rank3(unsigned m01, unsigned m12, unsigned m02);
  static CoxeterMatrix dihedral(unsigned m);

  std::size_t rank() const noexcept { return entries_.size(); }
  unsigned operator()(Generator s, Generator t) const {
    return entries_[s][t];
  }
  bool is_infinite(Generator s, Generator t) const {
    return s != t && entries_[s][t] == kInfinity;
  }
  std::vector<std::vector<unsigned>> const& entries() const noexcept {
    return entries_;
  }

  // "inf" for ∞, the decimal label otherwise.
  std::string label(Generator s, Generator t) const;

  bool operator==(CoxeterMatrix const&) const = default;

 private:
  std::vector<std::vector<unsigned>> entries_;
};

// Replacement value for B(αs,αt) on an ∞ bond; must be <= -1.
struct GramOverride {
  Generator s;
  Generator t;
  Rational value;
};

}  // namespace coxlow

#endif  // COXLOW_COXETER_MATRIX_HPP_
