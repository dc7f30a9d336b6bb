#pragma once

#include <complex>
#include <string>

namespace orbital {

using cdouble = std::complex<double>;

/// Principal log Γ(z) for complex z (Lanczos, reflection for Re z < 1/2).
/// The real part is accurate to ~1e-14 relative; the imaginary part is only
/// determined modulo 2π. Throws InvalidArgument at the poles.
cdouble log_gamma(cdouble z);

enum class Hyp2f1Route { TRIVIAL, DIRECT, PFAFF };

struct Hyp2f1Result {
  cdouble value;
  Hyp2f1Route route = Hyp2f1Route::DIRECT;
  long terms = 0;
  /// Certified relative error bound (tail + rounding).
  double error = 0;
  /// Decimal digits used: 16 for double, otherwise the MPFR working precision.
  int digits = 16;
};

/// ₂F₁(a,b;c;z) for real z ≤ 0 by its power series, after the Pfaff
/// transformation w = z/(z−1) when z < −1/2. Escalates to MPFR when double
/// cancellation would exceed the target. Throws AccuracyError when the target
/// relative accuracy cannot be certified within the term or precision budget.
Hyp2f1Result hyp2f1_detailed(cdouble a, cdouble b, cdouble c, double z, double rel_tol = 1e-10);

cdouble hyp2f1(cdouble a, cdouble b, cdouble c, double z);

std::string to_string(Hyp2f1Route r);

}  // namespace orbital
