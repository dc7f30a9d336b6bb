#include "orbital/error.hpp"
#include "orbital/rank1.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace orbital {
namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
using G7 = boost::math::quadrature::gauss<double, 7>;

constexpr int kMaxDepth = 40;

// One GK15 panel with bisection; a panel's result depends only on its own
// endpoints, so panels can run in any order and still sum reproducibly.
struct Integrator {
  const std::vector<int>& ks;
  double t;
  double rel_tol;

  // |φ_λ(t)|^{2k}·|c(λ)|^{−2} for every k from one φ evaluation.
  void integrand(double lambda, std::vector<double>& out) const {
    const double p2 = std::norm(phi_rank1(lambda, t));
    const double c = c_inv_sq(lambda);
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] = std::pow(p2, ks[i]) * c;
  }

  void panel(double lo, double hi, int depth, std::vector<double>& acc) const {
    const auto& x = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = G7::weights();
    const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    const std::size_t nk = ks.size();
    std::vector<double> kron(nk, 0), gauss(nk, 0), fp(nk), fm(nk);
    integrand(mid, fp);
    for (std::size_t j = 0; j < nk; ++j) {
      kron[j] = fp[j] * wk[0];
      gauss[j] = fp[j] * wg[0];
    }
    for (std::size_t i = 1; i < x.size(); ++i) {
      integrand(mid + half * x[i], fp);
      integrand(mid - half * x[i], fm);
      for (std::size_t j = 0; j < nk; ++j) {
        kron[j] += (fp[j] + fm[j]) * wk[i];
        if (i % 2 == 0) gauss[j] += (fp[j] + fm[j]) * wg[i / 2];
      }
    }
    double worst = 0;
    for (std::size_t j = 0; j < nk; ++j) {
      // |K15 − G7| overestimates the K15 error by orders of magnitude on
      // smooth panels, so 1% of the target per panel is conservative.
      const double err = half * std::abs(kron[j] - gauss[j]);
      const double budget = 1e-2 * rel_tol * half * std::abs(kron[j]);
      if (err > budget) worst = std::max(worst, err);
    }
    if (worst > 0) {
      if (depth >= kMaxDepth)
        throw AccuracyError("plancherel: panel refinement budget exceeded near λ = " + std::to_string(mid), worst);
      panel(lo, mid, depth + 1, acc);
      panel(mid, hi, depth + 1, acc);
      return;
    }
    for (std::size_t j = 0; j < nk; ++j) acc[j] += half * kron[j];
  }
};

// Integrates every panel, spreading them over worker threads; the returned
// per-panel values are independent of the thread count.
std::vector<std::vector<double>> run_panels(const Integrator& in, const std::vector<std::pair<double, double>>& panels) {
  std::vector<std::vector<double>> out(panels.size(), std::vector<double>(in.ks.size(), 0));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < panels.size();) {
      try {
        in.panel(panels[i].first, panels[i].second, 0, out[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = panels.size();
      }
    }
  };
  const unsigned nthreads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<std::vector<double>> plancherel_curve(const std::vector<int>& ks, double t,
                                                  const std::vector<double>& checkpoints, double rel_tol) {
  if (ks.empty() || checkpoints.empty()) throw InvalidArgument("plancherel: need at least one k and one Λ");
  for (int k : ks)
    if (k < 1) throw InvalidArgument("plancherel: k must be >= 1");
  if (!(t > 0)) throw InvalidArgument("plancherel: t must be > 0");
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (!(checkpoints[i] > 1) || (i && !(checkpoints[i] > checkpoints[i - 1])))
      throw InvalidArgument("plancherel: checkpoints must be increasing and > 1");

  const Integrator in{ks, t, rel_tol};
  // Panels no wider than π/(4t) resolve the cos²(λt/2 − π/4) oscillation.
  const double width = M_PI / (4 * t);
  std::vector<std::pair<double, double>> panels;
  std::vector<std::size_t> ends;
  double lo = 1;
  for (double cp : checkpoints) {
    const int n = static_cast<int>(std::ceil((cp - lo) / width));
    for (int p = 0; p < n; ++p) panels.emplace_back(lo + (cp - lo) * p / n, lo + (cp - lo) * (p + 1) / n);
    ends.push_back(panels.size());
    lo = cp;
  }
  const auto values = run_panels(in, panels);
  std::vector<std::vector<double>> out(ks.size());
  std::vector<double> total(ks.size(), 0);
  std::size_t i = 0;
  for (std::size_t end : ends) {
    for (; i < end; ++i)
      for (std::size_t j = 0; j < ks.size(); ++j) total[j] += values[i][j];
    for (std::size_t j = 0; j < ks.size(); ++j) out[j].push_back(total[j]);
  }
  return out;
}

double plancherel_truncated(int k, double t, double Lambda, double rel_tol) {
  return plancherel_curve({k}, t, {Lambda}, rel_tol)[0][0];
}

std::string to_string(DivergenceVerdict v) {
  switch (v) {
    case DivergenceVerdict::LOG_DIVERGENT: return "LOG_DIVERGENT";
    case DivergenceVerdict::CONVERGENT: return "CONVERGENT";
    case DivergenceVerdict::POWER_DIVERGENT: return "POWER_DIVERGENT";
  }
  return "?";
}

const std::vector<double>& divergence_checkpoints() {
  static const std::vector<double> cps = {1e2, std::pow(10.0, 2.5), 1e3, std::pow(10.0, 3.5), 1e4};
  return cps;
}

PlancherelFit fit_divergence(int k, double t, const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) throw InvalidArgument("fit_divergence: need at least three samples");
  PlancherelFit fit;
  fit.k = k;
  fit.t = t;
  fit.samples = samples;
  const std::size_t n = samples.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [L, F] : samples) {
    const double x = std::log(L);
    sx += x;
    sy += F;
    sxx += x * x;
    sxy += x * F;
  }
  const double nd = static_cast<double>(n);
  fit.slope = (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / nd;
  double ss = 0;
  for (const auto& [L, F] : samples) {
    const double r = F - (fit.slope * std::log(L) + fit.intercept);
    ss += r * r;
  }
  const double rise = samples.back().second - samples.front().second;
  fit.residual = rise > 0 ? std::sqrt(ss / nd) / rise : INFINITY;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const double d0 = samples[i + 1].second - samples[i].second;
    const double d1 = samples[i + 2].second - samples[i + 1].second;
    fit.increment_ratios.push_back(d0 > 0 ? d1 / d0 : INFINITY);
  }
  const auto& r = fit.increment_ratios;
  const bool growing = std::all_of(r.begin(), r.end(), [](double x) { return x > 1.5; });
  const bool geometric = std::all_of(r.begin(), r.end(), [](double x) { return x < 0.5; });
  if (growing) {
    fit.verdict = DivergenceVerdict::POWER_DIVERGENT;
  } else if (fit.slope > 0 && fit.residual < 0.1) {
    fit.verdict = DivergenceVerdict::LOG_DIVERGENT;
  } else if (geometric) {
    fit.verdict = DivergenceVerdict::CONVERGENT;
  } else {
    std::ostringstream os;
    os << "k=" << k << " t=" << t << " slope=" << fit.slope << " residual=" << fit.residual << " ratios=";
    for (double x : r) os << x << ' ';
    throw InconclusiveFit("divergence fit inconclusive", os.str());
  }
  return fit;
}

PlancherelFit classify_divergence(int k, double t) {
  if (k < 1 || k > 6) throw InvalidArgument("classify_divergence: k must lie in [1, 6]");
  if (!(t >= 0.1 && t <= 3)) throw InvalidArgument("classify_divergence: t must lie in [0.1, 3]");
  const auto& cps = divergence_checkpoints();
  const auto F = plancherel_curve({k}, t, cps)[0];
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < cps.size(); ++i) samples.emplace_back(cps[i], F[i]);
  return fit_divergence(k, t, samples);
}

}  // namespace orbital
