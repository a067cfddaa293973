#include "coxlow/cone.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "coxlow/error.hpp"

namespace coxlow {

NnlsResult nnls(std::vector<Vec<double>> const& columns, Vec<double> const& b) {
  const Eigen::Index m = static_cast<Eigen::Index>(b.size());
  const Eigen::Index k = static_cast<Eigen::Index>(columns.size());
  Eigen::MatrixXd A(m, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) A(i, j) = columns[j][i];
  }
  Eigen::Map<const Eigen::VectorXd> rhs(b.data(), m);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
  std::vector<bool> passive(static_cast<std::size_t>(k), false);

  double const tol = 1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff()) *
                     std::max(1.0, rhs.norm());
  auto solve_passive = [&]() {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (passive[j]) idx.push_back(j);
    }
    Eigen::MatrixXd Ap(m, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) Ap.col(c) = A.col(idx[c]);
    Eigen::VectorXd zp = Ap.colPivHouseholderQr().solve(rhs);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(k);
    for (std::size_t c = 0; c < idx.size(); ++c) z(idx[c]) = zp(c);
    return z;
  };

  int const max_outer = static_cast<int>(3 * k + 10);
  for (int outer = 0; outer < max_outer; ++outer) {
    Eigen::VectorXd w = A.transpose() * (rhs - A * x);
    Eigen::Index best = -1;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (!passive[j] && w(j) > tol && (best < 0 || w(j) > w(best))) best = j;
    }
    if (best < 0) break;
    passive[best] = true;
    for (int inner = 0; inner < max_outer; ++inner) {
      Eigen::VectorXd z = solve_passive();
      bool feasible = true;
      for (Eigen::Index j = 0; j < k; ++j) {
        if (passive[j] && z(j) <= 0) feasible = false;
      }
      if (feasible) {
        x = z;
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < k; ++j) {
        if (passive[j] && z(j) <= 0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      }
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < k; ++j) {
        if (passive[j] && x(j) <= tol) {
          passive[j] = false;
          x(j) = 0;
        }
      }
    }
  }
  NnlsResult out;
  out.coefficients.assign(x.data(), x.data() + k);
  out.relative_residual = (A * x - rhs).norm() / std::max(1.0, rhs.norm());
  return out;
}

namespace {

template <class T>
T magnitude(T const& x) {
  return x < 0 ? T(-x) : x;
}

// Solves Σ c_j g_j = target for linearly independent g_j; nullopt when the
// family is dependent or the target is outside its span.
template <class T>
std::optional<std::vector<T>> solve_independent(RootSystem<T> const& rs,
                                                std::vector<Vec<T> const*> const& gens,
                                                Vec<T> const& target) {
  std::size_t n = target.size(), k = gens.size();
  std::vector<std::vector<T>> a(n, std::vector<T>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = (*gens[j])[i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_row(k);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t best = n;
    for (std::size_t i = row; i < n; ++i) {
      if (rs.sign(a[i][col]) == 0) continue;
      if (best == n || magnitude(a[i][col]) > magnitude(a[best][col])) best = i;
    }
    if (best == n) return std::nullopt;
    std::swap(a[row], a[best]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      T f = a[i][col] / a[row][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[col] = row++;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (rs.sign(a[i][k]) != 0) return std::nullopt;
  }
  std::vector<T> c(k);
  for (std::size_t col = 0; col < k; ++col) {
    auto const& r = a[pivot_row[col]];
    c[col] = r[k] / r[col];
  }
  return c;
}

template <class T>
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

template <class T>
bool cone_contains_caratheodory(RootSystem<T> const& rs,
                                std::vector<Vec<T>> const& generators,
                                Vec<T> const& target) {
  if (rs.orientation(target) == Orientation::Zero) return true;
  std::size_t m = generators.size();
  std::size_t max_k = std::min(m, target.size());
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      std::vector<Vec<T> const*> gens;
      for (auto i : idx) gens.push_back(&generators[i]);
      if (auto c = solve_independent(rs, gens, target)) {
        bool nonneg = std::all_of(c->begin(), c->end(),
                                  [&](T const& x) { return rs.sign(x) >= 0; });
        if (nonneg) return true;
      }
    } while (next_combination<T>(idx, m));
  }
  return false;
}

template <>
bool cone_membership<Rational>(RootSystem<Rational> const& rs,
                               std::vector<Vec<Rational>> const& generators,
                               Vec<Rational> const& target, double /*eps_cone*/) {
  return cone_contains_caratheodory(rs, generators, target);
}

template <>
bool cone_membership<double>(RootSystem<double> const& rs,
                             std::vector<Vec<double>> const& generators,
                             Vec<double> const& target, double eps_cone) {
  if (generators.empty()) return rs.orientation(target) == Orientation::Zero;
  for (auto const& g : generators) {
    if (rs.same_vector(g, target)) return true;
  }
  auto result = nnls(generators, target);
  if (result.relative_residual <= eps_cone) return true;
  if (result.relative_residual > 10 * eps_cone) return false;
  throw Error(ErrorCode::NumericallyAmbiguous,
              "cone residual " + std::to_string(result.relative_residual) +
                  " inside the gray zone");
}

template bool cone_contains_caratheodory(RootSystem<double> const&,
                                         std::vector<Vec<double>> const&,
                                         Vec<double> const&);
template bool cone_contains_caratheodory(RootSystem<Rational> const&,
                                         std::vector<Vec<Rational>> const&,
                                         Vec<Rational> const&);

}  // namespace coxlow
