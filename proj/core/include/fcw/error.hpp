#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcw {

// Base of every domain error raised by the library. name() is the stable
// identifier the CLI prints next to the message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  std::string_view name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define FCW_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                    \
   public:                                                       \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  }

FCW_DEFINE_ERROR(NonIntegerCoefficient);
FCW_DEFINE_ERROR(NonPositiveBase);
FCW_DEFINE_ERROR(EulerMismatch);
FCW_DEFINE_ERROR(InvalidBoundaries);
FCW_DEFINE_ERROR(UnsupportedCell);
FCW_DEFINE_ERROR(NegativeWeight);
FCW_DEFINE_ERROR(InvalidMorseDatum);
FCW_DEFINE_ERROR(IdCollision);
FCW_DEFINE_ERROR(ParseError);
FCW_DEFINE_ERROR(ValidationError);

#undef FCW_DEFINE_ERROR

}  // namespace fcw
