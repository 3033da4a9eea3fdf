#include "hmqct/math_util.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace hmqct {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

int ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::domain_error("ceil_log2: n must be positive");
  if (n == 1) return 0;
  return static_cast<int>(std::bit_width(n - 1));
}

double log_factorial(std::uint64_t n) {
  static thread_local std::vector<double> table{0.0, 0.0};
  if (n >= table.size()) {
    std::size_t old = table.size();
    table.resize(std::max<std::size_t>(n + 1, table.size() * 2));
    for (std::size_t i = old; i < table.size(); ++i)
      table[i] = table[i - 1] + std::log(static_cast<double>(i));
  }
  return table[n];
}

double log_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::domain_error("log_choose: k > n");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (std::uint64_t i = 0; i < k; ++i)
    r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace hmqct
