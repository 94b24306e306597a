#pragma once

#include "qside/core/errors.hpp"

namespace qside::cli {

class ParseError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace qside::cli
