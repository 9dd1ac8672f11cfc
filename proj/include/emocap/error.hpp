#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emocap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (CLI exit code 3). Carries the
/// file/row/column context when known.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
  DataError(const std::string& what, std::string file, std::size_t row,
            std::string column = {})
      : Error(Format(what, file, row, column)),
        file_(std::move(file)),
        row_(row),
        column_(std::move(column)) {}

  const std::string& file() const { return file_; }
  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  static std::string Format(const std::string& what, const std::string& file,
                            std::size_t row, const std::string& column) {
    std::string out = file.empty() ? std::string("<input>") : file;
    out += ":" + std::to_string(row);
    if (!column.empty()) out += " [" + column + "]";
    return out + ": " + what;
  }

  std::string file_;
  std::size_t row_ = 0;
  std::string column_;
};

}  // namespace emocap
