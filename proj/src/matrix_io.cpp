#include "swtomo/matrix_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace swt {

namespace {
constexpr char kMagic[8] = {'S', 'W', 'T', 'M', 'T', 'X', '0', '1'};
}

void write_matrix(const CMat& m, std::ostream& os) {
  os.write(kMagic, 8);
  std::int64_t rows = m.rows(), cols = m.cols();
  os.write(reinterpret_cast<const char*>(&rows), 8);
  os.write(reinterpret_cast<const char*>(&cols), 8);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      double re = m(i, j).real(), im = m(i, j).imag();
      os.write(reinterpret_cast<const char*>(&re), 8);
      os.write(reinterpret_cast<const char*>(&im), 8);
    }
  }
  if (!os) throw std::runtime_error("write_matrix: stream failure");
}

CMat read_matrix(std::istream& is) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("read_matrix: bad magic");
  std::int64_t rows = 0, cols = 0;
  is.read(reinterpret_cast<char*>(&rows), 8);
  is.read(reinterpret_cast<char*>(&cols), 8);
  if (!is || rows < 0 || cols < 0 || rows > (1 << 20) || cols > (1 << 20))
    throw std::runtime_error("read_matrix: bad header");
  CMat m(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      double re = 0.0, im = 0.0;
      is.read(reinterpret_cast<char*>(&re), 8);
      is.read(reinterpret_cast<char*>(&im), 8);
      m(i, j) = Complex(re, im);
    }
  }
  if (!is) throw std::runtime_error("read_matrix: truncated data");
  return m;
}

void write_matrix_file(const CMat& m, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_matrix_file: cannot open " + path);
  write_matrix(m, os);
}

CMat read_matrix_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_matrix_file: cannot open " + path);
  return read_matrix(is);
}

}  // namespace swt
