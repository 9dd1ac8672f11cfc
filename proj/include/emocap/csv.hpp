#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace emocap::csv {

// RFC 4180 reader: quoted fields may contain the delimiter, doubled quotes
// and newlines. Line numbers are 1-based physical lines of the record start.
class Reader {
 public:
  explicit Reader(std::istream& in, char delimiter = ',')
      : in_(in), delimiter_(delimiter) {}

  /// Next record, or nullopt at end of input. Throws DataError on an
  /// unterminated quoted field.
  std::optional<std::vector<std::string>> Next();

  /// Physical line on which the last returned record started.
  std::size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t next_line_ = 1;
  std::size_t record_line_ = 0;
};

/// Quotes a field when it contains the delimiter, a quote or a line break.
std::string Escape(std::string_view field, char delimiter = ',');

void WriteRow(std::ostream& out, const std::vector<std::string>& fields,
              char delimiter = ',');

}  // namespace emocap::csv
