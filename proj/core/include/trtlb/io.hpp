// CSV and PGM emission.  CSV files follow RFC 4180 (CRLF line ends) and print
// numbers with 17 significant digits.
#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace trtlb {

std::string format_number(double v);  // %.17g

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& fields);
  const std::string& path() const { return path_; }

 private:
  std::ofstream out_;
  std::string path_;
  std::size_t width_ = 0;
  void line(const std::vector<std::string>& fields);
};

void ensure_directory(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Binary (P5) PGM.  pixel(i, j) with j = 0 the TOP row; values 0..255.
void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& pixels);

}  // namespace trtlb
