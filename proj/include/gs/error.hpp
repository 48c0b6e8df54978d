#pragma once

#include <stdexcept>
#include <string>

namespace gs {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorClass {
    usage = 2,
    file_format = 3,
    shape = 4,
    domain = 5,
    numerical = 6,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }
    int exit_code() const { return static_cast<int>(cls_); }

  private:
    ErrorClass cls_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorClass::usage, m) {}
};
struct FileFormatError : Error {
    explicit FileFormatError(const std::string& m) : Error(ErrorClass::file_format, m) {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& m) : Error(ErrorClass::shape, m) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorClass::domain, m) {}
};
struct NumericalError : Error {
    explicit NumericalError(const std::string& m) : Error(ErrorClass::numerical, m) {}
};

}  // namespace gs
