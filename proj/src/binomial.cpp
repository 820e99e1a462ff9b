#include "cquiver/binomial.hpp"

#include <stdexcept>

namespace cquiver {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt equivariant_count_formula(int m) {
  if (m < 1) throw std::invalid_argument("period must be positive");
  return 2 * binomial(2 * m - 1, m - 1);
}

BigInt alpha_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BigInt power = 1;
  power <<= (n + 1);
  return power * binomial(4 * n - 1, 2 * n - 1);
}

}  // namespace cquiver
