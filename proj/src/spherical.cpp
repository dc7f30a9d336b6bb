#include "orbital/error.hpp"
#include "orbital/rank1.hpp"

#include <Eigen/Core>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include <cmath>

namespace orbital {

std::string to_string(PhiRoute r) {
  switch (r) {
    case PhiRoute::IDENTITY: return "identity";
    case PhiRoute::SERIES: return "series";
    case PhiRoute::CONTOUR: return "contour";
  }
  return "?";
}

PhiRoute phi_route(double lambda, double t) {
  if (t == 0) return PhiRoute::IDENTITY;
  return std::abs(lambda) >= kContourLambda ? PhiRoute::CONTOUR : PhiRoute::SERIES;
}

double phi_rank1_contour(double lambda, double t) {
  const double mu = std::abs(lambda) / 2;
  if (2 * mu < kContourLambda) throw InvalidArgument("contour route needs λ >= 30");
  if (!(t > 0)) throw InvalidArgument("contour route needs t > 0");
  const double ch = std::cosh(t), sh = std::sinh(t);
  // x = √μ·w; the leg stops at w² = π, where e^{−μπ} is far below double precision.
  const double X = std::min(std::sqrt(mu * M_PI), 8.0);
  auto f = [&](double x) {
    const double y = x * x / mu;
    const double s = std::sin(y / 2);
    const cdouble q(2 * ch * s * s, -sh * std::sin(y));
    return x * std::exp(-x * x) / std::sqrt(q);
  };
  using GL = boost::math::quadrature::gauss<double, 30>;
  cdouble K = 0;
  const int panels = 4;
  for (int p = 0; p < panels; ++p) K += GL::integrate(f, X * p / panels, X * (p + 1) / panels);
  K /= mu;
  const cdouble rot = cdouble(0, -1) * std::exp(cdouble(0, mu * t)) * K;
  return 2 * std::sqrt(2.0) / M_PI * rot.real();
}

cdouble phi_rank1(double lambda, double t) {
  if (t < 0) throw InvalidArgument("phi_rank1: t must be >= 0");
  switch (phi_route(lambda, t)) {
    case PhiRoute::IDENTITY: return 1;
    case PhiRoute::CONTOUR: return phi_rank1_contour(lambda, t);
    case PhiRoute::SERIES: break;
  }
  const double sh = std::sinh(t);
  return hyp2f1(cdouble(0.25, lambda / 4), cdouble(0.25, -lambda / 4), 1.0, -sh * sh);
}

cdouble phi_rank1_oracle(double lambda, double t) {
  if (t < 0) throw InvalidArgument("phi_rank1_oracle: t must be >= 0");
  if (t == 0) return 1;
  Eigen::Matrix2d a = Eigen::Vector2d(std::exp(t / 2), std::exp(-t / 2)).asDiagonal();
  const cdouble expo(-0.5, lambda / 2);
  auto integrand = [&](double theta) {
    Eigen::Matrix2d k;
    k << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    const Eigen::Matrix2d g = a * k;
    // Gram–Schmidt: g = k'·diag(r₁, 1/r₁)·n with r₁ = |first column| = e^{h/2}.
    const double h = 2 * std::log(g.col(0).norm());
    return std::exp(expo * h);
  };
  double err = 0, l1 = 0;
  const cdouble v = boost::math::quadrature::trapezoidal(integrand, 0.0, 2 * M_PI, 1e-13, 22, &err, &l1);
  // err is the last refinement difference, an upper estimate for periodic integrands.
  const double abs_err = err / (2 * M_PI);
  if (!(abs_err <= 1e-10)) throw AccuracyError("phi_rank1_oracle: trapezoid rule did not converge", abs_err);
  return v / (2 * M_PI);
}

double c_inv_sq(double lambda) {
  if (!(lambda > 0)) throw InvalidArgument("c_inv_sq: λ must be positive");
  constexpr double inv_c0_sq = 8 * M_PI;
  const double lr = log_gamma(cdouble(0.5, lambda / 2)).real() - log_gamma(cdouble(0, lambda / 2)).real();
  return inv_c0_sq * std::exp(2 * lr);
}

}  // namespace orbital
