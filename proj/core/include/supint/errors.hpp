#pragma once

#include <stdexcept>
#include <string>

namespace supint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial") {}
  using Error::Error;
};

class DependentPair : public Error {
 public:
  DependentPair() : Error("dependent pair") {}
};

class InvalidPoint : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class NotOnVariety : public Error {
 public:
  NotOnVariety() : Error("point is not on the variety of superintegrable systems") {}
  using Error::Error;
};

class SingularSample : public Error {
 public:
  using Error::Error;
};

class DegeneratePoint : public Error {
 public:
  DegeneratePoint() : Error("degenerate point: D vanishes identically") {}
};

class SingularBase : public Error {
 public:
  SingularBase() : Error("series base point lies on D = 0") {}
};

class PathThroughSingularity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace supint
