#pragma once

#include <stdexcept>
#include <string>

namespace geomatch {

// Inputs that violate an operation's contract (sizes, indices, config mismatch).
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Three collinear points (or an equivalent degeneracy) where general position
// is required.
class general_position_error : public std::runtime_error {
 public:
  explicit general_position_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A brute-force oracle was asked to handle a point set above its size guard.
class size_guard_error : public std::runtime_error {
 public:
  explicit size_guard_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A construction's runtime precondition failed (hypothesis check, separation
// search, generator validation).
class construction_error : public std::runtime_error {
 public:
  explicit construction_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace geomatch
