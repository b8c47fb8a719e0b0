/*!
 * Copyright 2026 by Contributors
 * \file error.h
 * \brief Exception hierarchy shared by every booster module.
 */
#ifndef BOOSTER_ERROR_H_
#define BOOSTER_ERROR_H_

#include <stdexcept>
#include <string>

namespace booster {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*! \brief Malformed input: bad CSV cell, bad magic, truncated file, checksum. */
class FormatError : public Error {
 public:
  using Error::Error;
};

/*! \brief A caller-supplied value is outside the accepted domain. */
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/*! \brief An internal invariant would be broken (e.g. negative bin count). */
class InvariantError : public Error {
 public:
  using Error::Error;
};

/*! \brief On-chip capacity exceeded (SRAM map, tree table). */
class CapacityError : public Error {
 public:
  using Error::Error;
};

/*! \brief A platform model cannot run the workload at all. */
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/*! \brief Bad experiment configuration; the message names the key. */
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace booster

#endif  // BOOSTER_ERROR_H_
