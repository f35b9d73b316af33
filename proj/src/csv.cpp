#include "bipol/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bipol {

CsvWriter::CsvWriter(std::vector<std::string> columns, int schema) : n_cols_(columns.size()) {
  out_ << "# schema=" << schema << "\n";
  for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_cols_)
    throw std::logic_error("CsvWriter: row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << out_.str();
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvWriter::format(int v) { return std::to_string(v); }

std::string CsvWriter::format(std::complex<double> v) {
  return format(v.real()) + "," + format(v.imag());
}

Cells& Cells::operator<<(double x) {
  v.push_back(CsvWriter::format(x));
  return *this;
}
Cells& Cells::operator<<(int x) {
  v.push_back(CsvWriter::format(x));
  return *this;
}
Cells& Cells::operator<<(const std::string& s) {
  v.push_back(s);
  return *this;
}

} // namespace bipol
