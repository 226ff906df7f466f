#include "dyckframe/count.hpp"

namespace dyckframe {

Count binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Count result = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (std::int64_t k = 1; k <= b; ++k) {
    result *= a - b + k;
    result /= k;
  }
  return result;
}

Count power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(Count(base), static_cast<unsigned>(exponent));
}

}  // namespace dyckframe
