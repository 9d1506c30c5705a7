#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace disc {

template <typename Scalar>
using Sequence = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using SequenceD = Sequence<double>;
using SequenceI = Sequence<std::int64_t>;

/// Real type used for quantities derived from a sequence of `Scalar`
/// (integer sequences get double-valued p-norms, Jordan parts, ...).
template <typename Scalar>
using real_t = std::conditional_t<std::is_integral_v<Scalar>, double, Scalar>;

inline constexpr double kDefaultTol = 1e-9;

/// A precondition of a mathematical operation is violated
/// (constant input to the monotonicity measure, p < 1, empty variation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input file or stream.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace disc
