/**
 * @file Errors.h
 * @brief Exception hierarchy shared by all lanemd modules.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace lanemd {

/**
 * Coarse error category. The CLI maps each category onto an exit code.
 */
enum class ErrorKind { invalidInput, diverged, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), _kind(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

class InvalidScenarioError : public Error {
 public:
  explicit InvalidScenarioError(const std::string &what) : Error(ErrorKind::invalidInput, what) {}
};

class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string &what) : Error(ErrorKind::invalidInput, what) {}
};

class InvalidConfigurationError : public Error {
 public:
  explicit InvalidConfigurationError(const std::string &what) : Error(ErrorKind::invalidInput, what) {}
};

class DegenerateDomainError : public Error {
 public:
  explicit DegenerateDomainError(const std::string &what) : Error(ErrorKind::invalidInput, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string &what) : Error(ErrorKind::invalidInput, what) {}
};

class DivergedSimulationError : public Error {
 public:
  explicit DivergedSimulationError(const std::string &what) : Error(ErrorKind::diverged, what) {}
};

/// Two interacting particles share a position, so the pair distance is zero.
class OverlappingParticlesError : public Error {
 public:
  explicit OverlappingParticlesError(const std::string &what) : Error(ErrorKind::diverged, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string &what) : Error(ErrorKind::io, what) {}
};

/// Process exit code for an error category: 1 invalid input, 2 diverged, 3 I/O.
int exitCodeFor(ErrorKind kind) noexcept;

}  // namespace lanemd
