#include "orbital/error.hpp"
#include "orbital/special.hpp"

#include <cmath>

namespace orbital {
namespace {

// g = 7, n = 9 Lanczos coefficients.
constexpr double kG = 7.0;
constexpr double kCoef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                            771.32342877765313,   -176.61502916214059,   12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
const double kHalfLog2Pi = 0.5 * std::log(2 * M_PI);

cdouble lanczos(cdouble z) {
  z -= 1.0;
  cdouble x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
  const cdouble t = z + kG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(πz) without overflowing for large |Im z|.
cdouble log_sin_pi(cdouble z) {
  const cdouble w = M_PI * z;
  const cdouble i(0, 1);
  if (w.imag() > 0) return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

}  // namespace

cdouble log_gamma(cdouble z) {
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw InvalidArgument("log_gamma: pole at a nonpositive integer");
  if (z.real() < 0.5) return std::log(M_PI) - log_sin_pi(z) - lanczos(1.0 - z);
  return lanczos(z);
}

}  // namespace orbital
