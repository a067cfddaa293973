#ifndef COXLOW_ERROR_HPP_
#define COXLOW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxlow {

enum class ErrorCode {
  NonSymmetricMatrix,
  InvalidBondLabel,
  OverrideOnFiniteBond,
  OverrideAboveMinusOne,
  IrrationalEntryForExactBackend,
  DimensionMismatch,
  ClosureCapExceeded,
  NonReducedInput,
  GeneratorOutOfRange,
  NumericallyAmbiguous,
  RankNotThree,
  HypothesisNotMet,
  CyclicGraph,
  ConstructionFailed,
  ZeroSum,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the library reports carries one of the codes above so the
// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxlow

#endif  // COXLOW_ERROR_HPP_
