#include "orbital/error.hpp"
#include "orbital/special.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

namespace orbital {
namespace {

namespace bmp = boost::multiprecision;

constexpr long kMaxTerms = 2'000'000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Series {
  cdouble sum;
  double abs_sum = 0;   // Σ|T_n|
  double weighted = 0;  // Σ (5n+10)|T_n|, drives the rounding bound
  double tail = 0;
  long terms = 0;
  bool converged = false;
};

// Bound on |T_{m+1}/T_m| valid for every later ratio (each factor decreases in m).
double ratio_bound(cdouble a, cdouble b, cdouble c, double w, long m) {
  const double md = static_cast<double>(m);
  if (md + c.real() <= 0) return INFINITY;
  return std::abs(w) * (1 + std::abs(a - 1.0) / (md + 1)) * (1 + std::abs(b - c) / (md + c.real()));
}

template <class R>
struct Cx {
  R re, im;
};

template <class R>
Cx<R> mul(const Cx<R>& x, const Cx<R>& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

template <class R>
Cx<R> div(const Cx<R>& x, const Cx<R>& y) {
  const R d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

// Power series Σ (a)_n (b)_n / ((c)_n n!) w^n in working type R. Magnitudes
// used for the error bookkeeping are tracked in double.
template <class R>
Series run_series(cdouble a, cdouble b, cdouble c, double w, double unit) {
  const Cx<R> A{R(a.real()), R(a.imag())}, B{R(b.real()), R(b.imag())}, C{R(c.real()), R(c.imag())};
  const R W(w);
  Cx<R> term{R(1), R(0)}, sum{R(1), R(0)};
  Series s;
  s.abs_sum = 1;
  s.weighted = 10;
  for (long n = 0; n < kMaxTerms; ++n) {
    const R nn(static_cast<double>(n));
    Cx<R> num = mul(Cx<R>{A.re + nn, A.im}, Cx<R>{B.re + nn, B.im});
    Cx<R> den{(C.re + nn) * R(static_cast<double>(n + 1)), C.im * R(static_cast<double>(n + 1))};
    term = div(mul(term, num), den);
    term.re *= W;
    term.im *= W;
    sum.re += term.re;
    sum.im += term.im;
    const double mag = std::hypot(static_cast<double>(term.re), static_cast<double>(term.im));
    s.abs_sum += mag;
    s.weighted += (5.0 * static_cast<double>(n + 1) + 10) * mag;
    s.terms = n + 1;
    if (mag == 0) {
      s.tail = 0;
      s.converged = true;
      break;
    }
    const double rho = ratio_bound(a, b, c, w, n + 1);
    if (rho < 1) {
      s.tail = mag * rho / (1 - rho);
      if (s.tail <= 1e-3 * unit * s.abs_sum) {
        s.converged = true;
        break;
      }
    }
  }
  s.sum = {static_cast<double>(sum.re), static_cast<double>(sum.im)};
  return s;
}

template <unsigned D>
using Mp = bmp::number<bmp::mpfr_float_backend<D>, bmp::et_off>;

Series run_at_digits(int digits, cdouble a, cdouble b, cdouble c, double w) {
  const double unit = std::pow(10.0, -digits);
  if (digits <= 16) return run_series<double>(a, b, c, w, kEps);
  if (digits <= 50) return run_series<Mp<50>>(a, b, c, w, unit);
  if (digits <= 100) return run_series<Mp<100>>(a, b, c, w, unit);
  if (digits <= 200) return run_series<Mp<200>>(a, b, c, w, unit);
  if (digits <= 400) return run_series<Mp<400>>(a, b, c, w, unit);
  if (digits <= 800) return run_series<Mp<800>>(a, b, c, w, unit);
  return run_series<Mp<1600>>(a, b, c, w, unit);
}

int ladder(int need) {
  for (int d : {50, 100, 200, 400, 800, 1600})
    if (need <= d) return d;
  return -1;
}

}  // namespace

std::string to_string(Hyp2f1Route r) {
  switch (r) {
    case Hyp2f1Route::TRIVIAL: return "trivial";
    case Hyp2f1Route::DIRECT: return "direct";
    case Hyp2f1Route::PFAFF: return "pfaff";
  }
  return "?";
}

Hyp2f1Result hyp2f1_detailed(cdouble a, cdouble b, cdouble c, double z, double rel_tol) {
  if (!(z <= 0)) throw InvalidArgument("hyp2f1: z must be <= 0");
  if (c.imag() == 0 && c.real() <= 0 && c.real() == std::floor(c.real()))
    throw InvalidArgument("hyp2f1: c is a nonpositive integer");
  Hyp2f1Result res;
  if (z == 0 || a == 0.0 || b == 0.0) {
    res.value = 1;
    res.route = Hyp2f1Route::TRIVIAL;
    return res;
  }

  cdouble pre = 1, bb = b;
  double w = z;
  res.route = Hyp2f1Route::DIRECT;
  if (z < -0.5) {
    // ₂F₁(a,b;c;z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))
    res.route = Hyp2f1Route::PFAFF;
    pre = std::exp(-a * std::log1p(-z));
    bb = c - b;
    w = z / (z - 1);
    if (bb == 0.0) {
      res.value = pre;
      return res;
    }
  }

  Series s = run_at_digits(16, a, bb, c, w);
  int digits = 16;
  auto rel_error = [&](const Series& x, int d) {
    const double unit = d <= 16 ? kEps : std::pow(10.0, -d);
    const double mag = std::abs(x.sum);
    if (mag == 0) return std::numeric_limits<double>::infinity();
    return (x.tail + unit * x.weighted) / mag;
  };
  double err = s.converged ? rel_error(s, 16) : INFINITY;
  while (err > 0.1 * rel_tol) {
    if (!s.converged)
      throw AccuracyError("hyp2f1: series did not converge within " + std::to_string(kMaxTerms) + " terms", err);
    // Cancellation ratio Σ|T|/|S| sets the digits the sum consumes.
    const double lost = std::log10(std::max(1.0, s.weighted / std::max(std::abs(s.sum), 1e-300)));
    const int need = static_cast<int>(std::ceil(lost)) + 20;
    int next = ladder(std::max(need, digits + 1));
    if (next < 0) throw AccuracyError("hyp2f1: cancellation exceeds the MPFR precision budget", err);
    digits = next;
    s = run_at_digits(digits, a, bb, c, w);
    err = s.converged ? rel_error(s, digits) : INFINITY;
  }
  res.value = pre * s.sum;
  res.terms = s.terms;
  // The prefactor adds a few ulps times |a log(1−z)|.
  res.error = err + 4 * kEps * (1 + std::abs(a * std::log1p(-z)));
  res.digits = digits;
  if (res.error > rel_tol) throw AccuracyError("hyp2f1: prefactor rounding exceeds tolerance", res.error);
  return res;
}

cdouble hyp2f1(cdouble a, cdouble b, cdouble c, double z) { return hyp2f1_detailed(a, b, c, z).value; }

}  // namespace orbital
