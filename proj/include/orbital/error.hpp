#pragma once

#include <stdexcept>
#include <string>

namespace orbital {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but the library deliberately does not handle it
/// (E-type Weyl enumeration, exceptional subsystem lists, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// The element lies in N_G(K): every root annihilates it.
class NormalizerElement : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical routine could not reach its accuracy target.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : Error(what + " (achieved bound " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// An oracle disagreed with the closed form it checks.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A divergence fit met neither the logarithmic nor the geometric criterion.
class InconclusiveFit : public Error {
 public:
  InconclusiveFit(const std::string& what, std::string diagnostics)
      : Error(what + ": " + diagnostics), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace orbital
