#pragma once

#include <stdexcept>
#include <string>

namespace convexpart {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: duplicate points, out-of-range coordinates, bad ids.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Every point lies on one line, so no convex partition exists.
class AllCollinear : public Error {
 public:
  AllCollinear() : Error("all points are collinear; no convex partition exists") {}
};

// The point set is special (inner points have at most two extreme points).
class SpecialInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive solver was called above its hard size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace convexpart
