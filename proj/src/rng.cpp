#include "netembed/rng.hpp"

#include <cmath>

namespace netembed {

double Rng::next_gaussian() {
  // Box-Muller, cosine branch only; u1 shifted away from 0.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = next_real();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

}  // namespace netembed
