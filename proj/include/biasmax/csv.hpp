#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace biasmax {

// Minimal RFC-4180-ish CSV reading: quoted fields, "" escapes, \r\n line ends.
// Enough for MovieLens files (titles contain commas) and our own outputs.
std::vector<std::string> split_csv_line(const std::string& line);

class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  // Reads the next record into `fields`; false at end of file.
  bool next(std::vector<std::string>& fields);

  const std::string& header_line() const { return header_line_; }

 private:
  std::ifstream in_;
  std::string header_line_;  // first physical line, kept for error messages
  bool first_ = true;
};

// Parses a real, throwing InputError with `context` on garbage.
double parse_real(const std::string& text, const std::string& context);
long long parse_int(const std::string& text, const std::string& context);

// Shortest round-trip formatting ("%.17g") for matrices and manifests.
std::string format_real_exact(double v);
// Result-file formatting ("%.10g").
std::string format_real(double v);

}  // namespace biasmax
