#pragma once

#include <stdexcept>
#include <string>

namespace cornerjet {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// The requested order cannot determine the quantity asked for. Never silently answered.
class TruncationError : public Error
{
  public:
    TruncationError() : Error("insufficient truncation") {}
    explicit TruncationError(const std::string& detail) : Error("insufficient truncation: " + detail) {}
};

/// Raised by parity-sensitive jet operations (Whitney descent).
class ParityError : public Error
{
  public:
    ParityError(const std::string& what, int degree) : Error(what), degree_(degree) {}

    int degree() const noexcept { return degree_; }

  private:
    int degree_;
};

} // namespace cornerjet
