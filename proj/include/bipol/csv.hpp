#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

namespace bipol {

// CSV writer with a fixed schema header and 17-significant-digit floats so
// identical runs produce byte-identical files.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns, int schema = 1);

  void row(const std::vector<std::string>& cells);
  std::string body() const { return out_.str(); }
  void save(const std::string& path) const;

  static std::string format(double v);
  static std::string format(int v);
  static std::string format(std::complex<double> v); // "re,im" pair helper

 private:
  std::ostringstream out_;
  size_t n_cols_;
};

// Numbered cell builder for terse call sites.
struct Cells {
  std::vector<std::string> v;
  Cells& operator<<(double x);
  Cells& operator<<(int x);
  Cells& operator<<(const std::string& s);
};

} // namespace bipol
