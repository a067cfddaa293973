#ifndef COXLOW_CONE_HPP_
#define COXLOW_CONE_HPP_

#include <vector>

#include "coxlow/root_system.hpp"

namespace coxlow {

inline constexpr double kDefaultConeTolerance = 1e-7;

// Nonnegative least squares min ‖Ac − b‖ s.t. c >= 0 (Lawson–Hanson).
// `columns` are the columns of A.
struct NnlsResult {
  std::vector<double> coefficients;
  // ‖Ac − b‖ / max(1, ‖b‖).
  double relative_residual = 0.0;
};
NnlsResult nnls(std::vector<Vec<double>> const& columns, Vec<double> const& b);

// Exact test via Carathéodory: target lies in the cone iff it is a
// nonnegative combination of some linearly independent subfamily.
template <class T>
bool cone_contains_caratheodory(RootSystem<T> const& rs,
                                std::vector<Vec<T>> const& generators,
                                Vec<T> const& target);

// γ ∈ cone(A)? Exact in the rational backend. The float backend solves a
// nonnegative least-squares problem and throws NumericallyAmbiguous when the
// relative residual falls in [eps_cone, 10·eps_cone].
template <class T>
bool cone_membership(RootSystem<T> const& rs,
                     std::vector<Vec<T>> const& generators,
                     Vec<T> const& target,
                     double eps_cone = kDefaultConeTolerance);

template <>
bool cone_membership<double>(RootSystem<double> const&,
                             std::vector<Vec<double>> const&,
                             Vec<double> const&, double);
template <>
bool cone_membership<Rational>(RootSystem<Rational> const&,
                               std::vector<Vec<Rational>> const&,
                               Vec<Rational> const&, double);

}  // namespace coxlow

#endif  // COXLOW_CONE_HPP_
