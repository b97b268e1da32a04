#include "biasmax/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "biasmax/errors.hpp"

namespace biasmax {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

CsvReader::CsvReader(const std::filesystem::path& path) : in_(path) {
  if (!in_) throw InputError("cannot open file: " + path.string());
}

bool CsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    if (first_) {
      first_ = false;
      header_line_ = line;
    }
    if (line.empty() || line == "\r") continue;
    fields = split_csv_line(line);
    return true;
  }
  return false;
}

double parse_real(const std::string& text, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE)
    throw InputError(context + ": not a real number: '" + text + "'");
  return v;
}

long long parse_int(const std::string& text, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE)
    throw InputError(context + ": not an integer: '" + text + "'");
  return v;
}

std::string format_real_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace biasmax
