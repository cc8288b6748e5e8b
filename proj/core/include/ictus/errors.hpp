#pragma once

#include <stdexcept>
#include <string>

namespace ictus {

// Input files that fail to parse (CSV, EDF, JSON sidecars, scenarios).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// User-supplied configuration that violates a documented constraint.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Not enough data to fit or evaluate a model.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ictus
