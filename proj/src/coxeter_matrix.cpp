#include "coxlow/coxeter_matrix.hpp"

#include "coxlow/error.hpp"

namespace coxlow {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<unsigned>> entries)
    : entries_(std::move(entries)) {
  std::size_t n = entries_.size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidBondLabel, "rank must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) {
      throw Error(ErrorCode::NonSymmetricMatrix,
                  "row " + std::to_string(i) + " has the wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 1) {
      throw Error(ErrorCode::InvalidBondLabel,
                  "diagonal entry " + std::to_string(i) + " must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        throw Error(ErrorCode::NonSymmetricMatrix,
                    "m(" + std::to_string(i) + "," + std::to_string(j) +
                        ") != m(" + std::to_string(j) + "," +
                        std::to_string(i) + ")");
      }
      if (i != j && entries_[i][j] != kInfinity && entries_[i][j] < 2) {
        throw Error(ErrorCode::InvalidBondLabel,
                    "m(" + std::to_string(i) + "," + std::to_string(j) +
                        ") must be >= 2 or inf");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::rank3(unsigned m01, unsigned m12, unsigned m02) {
  return CoxeterMatrix({{1, m01, m02}, {m01, 1, m12}, {m02, m12, 1}});
}

CoxeterMatrix CoxeterMatrix::dihedral(unsigned m) {
  return CoxeterMatrix({{1, m}, {m, 1}});
}

std::string CoxeterMatrix::label(Generator s, Generator t) const {
  if (is_infinite(s, t)) return "inf";
  return std::to_string(entries_[s][t]);
}

}  // namespace coxlow
