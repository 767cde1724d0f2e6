#include "trtlb/io.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace trtlb {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary), path_(path), width_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
  line(header);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_number(v));
  line(fields);
}

void CsvWriter::row(const std::vector<std::string>& fields) { line(fields); }

void CsvWriter::line(const std::vector<std::string>& fields) {
  if (fields.size() != width_)
    throw std::runtime_error("csv row width mismatch in " + path_);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << fields[i];
  }
  out_ << "\r\n";
  if (!out_) throw std::runtime_error("write failure on " + path_);
}

void ensure_directory(const std::string& path) {
  if (path.empty()) return;
  std::filesystem::create_directories(path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failure on " + path);
}

void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& pixels) {
  if (static_cast<std::size_t>(width) * height != pixels.size())
    throw std::runtime_error("pgm pixel count mismatch for " + path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace trtlb
