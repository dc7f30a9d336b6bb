#pragma once

#include "orbital/special.hpp"

#include <string>
#include <vector>

namespace orbital {

/// a = exp(tH₀) with α(H₀) = 1, spectral parameter λ.
struct Rank1Point {
  double t = 0;
  double lambda = 0;
};

enum class PhiRoute { IDENTITY, SERIES, CONTOUR };
std::string to_string(PhiRoute r);

/// Route phi_rank1 takes: the ₂F₁ series below kContourLambda, the rotated
/// Mehler–Dirichlet integral above it.
PhiRoute phi_route(double lambda, double t);
inline constexpr double kContourLambda = 30.0;

/// φ_λ(exp tH₀) = ₂F₁((1+iλ)/4, (1−iλ)/4; 1; −sinh²t) for SL(2,R)/SO(2).
/// Throws InvalidArgument for t < 0.
cdouble phi_rank1(double lambda, double t);

/// Same value from (2√2/π)·Re[−i e^{iμt} ∫₀^∞ w e^{−μw²} (cosh t − cosh(t+iw²))^{−1/2} dw],
/// μ = λ/2: the Mehler–Dirichlet integral with its endpoint leg rotated onto
/// the negative imaginary axis. Needs λ ≥ kContourLambda.
double phi_rank1_contour(double lambda, double t);

/// Independent evaluation: (1/2π)∫ exp((iλ/2 − 1/2)·h(θ)) dθ, where e^{h/2} is
/// the first Gram–Schmidt pivot of a_t·k_θ in SL(2,R). Trapezoid rule on the
/// circle to absolute accuracy 1e-10; AccuracyError otherwise.
cdouble phi_rank1_oracle(double lambda, double t);

/// |c(λ)|^{−2} for SL(2,R)/SO(2): |Γ(iλ/2+1/2)/(c₀Γ(iλ/2))|² with
/// c₀ = 1/(2√(2π)), so that c(λ)^{−1}λ^{−1/2} → 2√π. Throws for λ ≤ 0.
double c_inv_sq(double lambda);

/// ∫₁^Λ |φ_λ(t)|^{2k} |c(λ)|^{−2} dλ.
double plancherel_truncated(int k, double t, double Lambda, double rel_tol = 1e-6);

/// The same integral for several k at once, reported at increasing
/// checkpoints; result[i][j] is F for ks[i] at checkpoints[j]. φ is evaluated
/// once per node and shared across k.
std::vector<std::vector<double>> plancherel_curve(const std::vector<int>& ks, double t,
                                                  const std::vector<double>& checkpoints,
                                                  double rel_tol = 1e-6);

enum class DivergenceVerdict { LOG_DIVERGENT, CONVERGENT, POWER_DIVERGENT };
std::string to_string(DivergenceVerdict v);

struct PlancherelFit {
  int k = 0;
  double t = 0;
  std::vector<std::pair<double, double>> samples;  // (Λ, F(Λ))
  double slope = 0, intercept = 0;
  /// RMS residual of the fit F ≈ slope·ln Λ + intercept, over F(Λ_max) − F(Λ_min).
  double residual = 0;
  /// Successive increment ratios (F_{i+2}−F_{i+1})/(F_{i+1}−F_i).
  std::vector<double> increment_ratios;
  DivergenceVerdict verdict = DivergenceVerdict::CONVERGENT;
};

/// Checkpoints 10², 10^2.5, ..., 10⁴.
const std::vector<double>& divergence_checkpoints();

/// Build a fit from precomputed samples. Throws InconclusiveFit.
PlancherelFit fit_divergence(int k, double t, const std::vector<std::pair<double, double>>& samples);

/// Throws InvalidArgument outside k ∈ [1,6], t ∈ [0.1,3]; InconclusiveFit
/// when neither criterion is met.
PlancherelFit classify_divergence(int k, double t);

}  // namespace orbital
