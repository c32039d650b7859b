#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace fanotk {

// Contract violations surface as exceptions derived from Error; operations
// whose failure is an expected outcome return Result<T> instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  Contained,
  DegeneratePencil,
  NotInPencil,
  Usage,
};

struct ErrorValue {
  ErrorKind kind;
  std::string message;
};

template <class T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(ErrorValue err) : data_(std::move(err)) {}

  static Result failure(ErrorKind kind, std::string message) {
    return Result(ErrorValue{kind, std::move(message)});
  }

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw Error(error().message);
    return std::get<T>(data_);
  }
  T&& value() && {
    if (!ok()) throw Error(error().message);
    return std::get<T>(std::move(data_));
  }
  const ErrorValue& error() const { return std::get<ErrorValue>(data_); }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, ErrorValue> data_;
};

}  // namespace fanotk
