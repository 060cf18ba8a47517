#include "rmac/arith.hpp"

#include "rmac/errors.hpp"

namespace rmac {

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) throw InvalidArgument("divisors of 0");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(unsigned n) {
  if (n == 0) throw InvalidArgument("moebius(0)");
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

unsigned euler_phi(unsigned n) {
  if (n == 0) throw InvalidArgument("euler_phi(0)");
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace rmac
