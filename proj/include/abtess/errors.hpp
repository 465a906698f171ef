#pragma once

#include <stdexcept>
#include <string>

namespace abtess {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: params, perms, gamma vectors, k out of range, guards.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// Errors tied to one channel of the idempotent split carry its name
// ("ch_s", "ch_d" for alpha < 0, "ch1".."ch4" for alpha > 0).
class ChannelError : public Error {
 public:
  ChannelError(const std::string& what, std::string channel)
      : Error(what + (channel.empty() ? "" : " (channel " + channel + ")")),
        channel_(std::move(channel)) {}
  const std::string& channel() const { return channel_; }

 private:
  std::string channel_;
};

class ZeroDivisor : public ChannelError {
 public:
  using ChannelError::ChannelError;
};

class Singular : public ChannelError {
 public:
  using ChannelError::ChannelError;
};

class NoSquareRoot : public ChannelError {
 public:
  using ChannelError::ChannelError;
};

class DefectiveChannel : public ChannelError {
 public:
  using ChannelError::ChannelError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NotToeplitz : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace abtess
