#ifndef BAS_TESTS_TEST_SUPPORT_HPP_
#define BAS_TESTS_TEST_SUPPORT_HPP_

// Reference formulas and helpers used only by tests. Nothing here calls into
// the library's objective implementations.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bas_test {

// Goldstein-Price written term by term from the standard polynomial.
inline double gp_reference(double x, double y) {
  const double s = x + y + 1.0;
  const double p = 19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y;
  const double t = 2.0 * x - 3.0 * y;
  const double q = 18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y;
  return (1.0 + s * s * p) * (30.0 + t * t * q);
}

// One Michalewicz term with 1-based index, negated, using repeated squaring
// instead of pow.
inline double mich_term_reference(double x, int index, int m) {
  const double s = std::sin(static_cast<double>(index) * x * x / std::numbers::pi);
  double p = 1.0;
  const double s2 = s * s;
  for (int i = 0; i < m; ++i) p *= s2;
  return -std::sin(x) * p;
}

struct ScanResult {
  double x = 0.0;
  double value = 0.0;
};

// 1-D brute-force scan of the first Michalewicz term over [0, pi].
inline ScanResult scan_mich_1d(double step, int m = 10) {
  ScanResult best{0.0, 0.0};
  const auto n = static_cast<long>(std::floor(std::numbers::pi / step));
  for (long i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) * step;
    const double v = mich_term_reference(x, 1, m);
    if (v < best.value) best = {x, v};
  }
  return best;
}

inline std::vector<double> random_vector(std::mt19937_64& gen, std::size_t k, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(k);
  for (double& c : v) c = dist(gen);
  return v;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_file(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("bas_test_" + tag + "_" + std::to_string(rd()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace bas_test

#endif  // BAS_TESTS_TEST_SUPPORT_HPP_
