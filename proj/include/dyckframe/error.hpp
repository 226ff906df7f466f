#pragma once

#include <stdexcept>
#include <string>

namespace dyckframe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Step text with an illegal character, a prefix below level 0 or a nonzero end level.
class MalformedPath : public Error {
 public:
  using Error::Error;
};

/// A Dyck-only operation received a path containing a Horizontal step.
class NotDyck : public Error {
 public:
  using Error::Error;
};

/// An enumeration was asked to go past its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// unextend() would produce a negative entry.
class Underflow : public Error {
 public:
  using Error::Error;
};

/// unlift() on a sequence whose first entry is not 2.
class NotLifted : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// Malformed frame or integer-list text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated (empty sequence, short color vector, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dyckframe
