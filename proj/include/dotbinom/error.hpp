#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dotbinom {

/// Failure categories raised by the library.
enum class Errc {
  NotPrime,
  EvenCharacteristic,
  DegreeOutOfRange,
  OrderOutOfRange,
  DivisionByZero,
  DimensionMismatch,
  NotALine,
  AmbientMismatch,
  BudgetExceeded,
  UnsupportedFlavor,
  InvalidQ,
  ExactDivisionFailed,
  UndefinedForParameters,
  IdentityViolated,
  Mismatch,
  NeitherSign,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// An identity that must hold exactly failed at (q, n, k).
class IdentityViolated : public Error {
 public:
  IdentityViolated(const std::string& identity, unsigned long long q, int n, int k)
      : Error(Errc::IdentityViolated, identity + " at q=" + std::to_string(q) +
                                          " n=" + std::to_string(n) + " k=" + std::to_string(k)),
        identity_(identity), q_(q), n_(n), k_(k) {}

  const std::string& identity() const noexcept { return identity_; }
  unsigned long long q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

 private:
  std::string identity_;
  unsigned long long q_;
  int n_;
  int k_;
};

/// Two routes that must agree produced different values.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& context, std::string expected, std::string actual)
      : Error(Errc::Mismatch, context + ": expected " + expected + ", got " + actual),
        expected_(std::move(expected)), actual_(std::move(actual)) {}

  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  std::string expected_;
  std::string actual_;
};

}  // namespace dotbinom
