#pragma once

#include <stdexcept>
#include <string>

namespace hscfr {

/// Unknown game/schedule names, bad parameters, malformed config files.
class ConfigError : public std::runtime_error {
  public:
   using std::runtime_error::runtime_error;
};

/// A game description that does not form a valid two-player zero-sum tree.
class StructureError : public std::runtime_error {
  public:
   using std::runtime_error::runtime_error;
};

/// A strategy profile that does not cover every information set of a game.
class CoverageError : public std::runtime_error {
  public:
   using std::runtime_error::runtime_error;
};

/// A file that cannot be read or written.
class IoError : public std::runtime_error {
  public:
   using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a numeric routine.
class DomainError : public std::domain_error {
  public:
   using std::domain_error::domain_error;
};

}  // namespace hscfr
