#include "emocap/csv.hpp"

#include "emocap/error.hpp"

namespace emocap::csv {

std::optional<std::vector<std::string>> Reader::Next() {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  record_line_ = next_line_;

  int c;
  while ((c = in_.get()) != std::char_traits<char>::eof()) {
    any = true;
    const char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++next_line_;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && field.empty()) {
      in_quotes = true;
    } else if (ch == delimiter_) {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\r') {
      if (in_.peek() == '\n') continue;
      field.push_back(ch);
    } else if (ch == '\n') {
      ++next_line_;
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(ch);
    }
  }
  if (in_quotes) {
    throw DataError("unterminated quoted field", "", record_line_);
  }
  if (!any) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

std::string Escape(std::string_view field, char delimiter) {
  if (field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) ==
      std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void WriteRow(std::ostream& out, const std::vector<std::string>& fields,
              char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(delimiter);
    out << Escape(fields[i], delimiter);
  }
  out.put('\n');
}

}  // namespace emocap::csv
