#pragma once

#include <vector>

namespace rmac {

std::vector<unsigned> divisors(unsigned n);
int moebius(unsigned n);
unsigned euler_phi(unsigned n);

}  // namespace rmac
