#pragma once

#include <stdexcept>
#include <string>

namespace cuntzsim {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes (usage 2, resource 3, internal invariant 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Requested label (sector, weight, basis family) does not exist.
class NotFound : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A word with unequal creation/annihilation counts cannot act on H^r.
class NotAnEndomorphism : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A word is longer than the tensor power it is realized on.
class RankError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace cuntzsim
