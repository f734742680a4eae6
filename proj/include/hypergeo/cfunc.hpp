// Harish-Chandra c-functions, the Yang-system factorization and the
// residual Plancherel density factor f_L. Values carry {finite, zero, pole}
// flags so pole probes do not have to go through exceptions; exceptions are
// reserved for contract violations.
#pragma once

#include <complex>
#include <vector>

#include "hypergeo/gamma.hpp"
#include "hypergeo/multiplicity.hpp"
#include "hypergeo/rootsystem.hpp"

namespace hypergeo {

struct SpectralPoint {
  const RootSystem* R = nullptr;
  std::vector<Complex> weight;  // lambda(alpha_i^vee) for simple i
  std::vector<Complex> pair;    // cached lambda(alpha_r^vee), all roots

  static SpectralPoint from_weight(const RootSystem& R, std::vector<Complex> w) {
    SpectralPoint p;
    p.R = &R;
    p.weight = std::move(w);
    p.pair.resize(R.nroots());
    for (int r = 0; r < R.nroots(); ++r) p.pair[r] = R.pair_root(p.weight, r);
    return p;
  }
  static SpectralPoint from_weight(const RootSystem& R, const QVec& w) {
    std::vector<Complex> c(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) c[i] = to_double(w[i]);
    return from_weight(R, std::move(c));
  }

  SpectralPoint apply(int w) const {
    return from_weight(*R, R->w_action_weight(w, weight));
  }
  SpectralPoint negate() const {
    std::vector<Complex> neg(weight);
    for (auto& z : neg) z = -z;
    return from_weight(*R, std::move(neg));
  }
  bool is_regular(double tol = 1e-12) const {
    for (int w = 1; w < R->weyl_order(); ++w) {
      auto img = R->w_action_weight(w, weight);
      double diff = 0;
      for (int i = 0; i < R->rank; ++i) diff += std::abs(img[i] - weight[i]);
      if (diff < tol) return false;
    }
    return true;
  }
  double cache_residual() const {
    double worst = 0;
    for (int r = 0; r < R->nroots(); ++r)
      worst = std::max(worst, std::abs(pair[r] - R->pair_root(weight, r)));
    return worst;
  }
};

enum class CFlag { finite, zero, pole };

struct CFunctionValue {
  Complex value{0, 0};
  CFlag flag = CFlag::finite;
  bool finite() const { return flag == CFlag::finite; }
};

struct NormalizationSingular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Product of Gamma-ratio factors Gamma(num_r)/Gamma(den_r) with per-factor
// pole/zero bookkeeping. A numerator pole not cancelled by its own
// denominator flags the product as a pole; a bare denominator pole makes the
// factor (and product) zero. Factors with k_alpha = 0 cancel identically and
// are skipped by the callers.
inline CFunctionValue gamma_ratio_product(const std::vector<std::pair<Complex, Complex>>& factors) {
  Complex logsum(0, 0);
  bool any_pole = false, any_zero = false;
  for (auto& [num, den] : factors) {
    bool np = near_gamma_pole(num), dp = near_gamma_pole(den);
    if (np && dp) {
      // both simple poles: residue ratio limit (-1)^a a'! -> finite
      long a = 0, b = 0;
      near_gamma_pole(num, 1e-9, &a);
      near_gamma_pole(den, 1e-9, &b);
      double la = 0, lb = 0;
      for (long j = 2; j <= -a; ++j) la += std::log(static_cast<double>(j));
      for (long j = 2; j <= -b; ++j) lb += std::log(static_cast<double>(j));
      double sgn = ((-a - b) % 2 == 0) ? 1.0 : -1.0;
      logsum += std::log(Complex(sgn, 0)) + Complex(lb - la, 0);
      continue;
    }
    if (np) {
      any_pole = true;
      continue;
    }
    if (dp) {
      any_zero = true;
      continue;
    }
    logsum += log_gamma(num) - log_gamma(den);
  }
  if (any_pole) return {Complex(std::numeric_limits<double>::infinity(), 0), CFlag::pole};
  if (any_zero) return {Complex(0, 0), CFlag::zero};
  return {std::exp(logsum), CFlag::finite};
}

// c~(lambda,k) = prod_{alpha>0} Gamma(lambda(alpha^vee)) / Gamma(lambda(alpha^vee)+k_alpha).
inline CFunctionValue c_tilde(const SpectralPoint& lam, const MultiplicityFunction& k) {
  const RootSystem& R = *lam.R;
  std::vector<std::pair<Complex, Complex>> f;
  for (int r : R.positive) {
    if (k.k_root(r) == 0) continue;
    Complex a = lam.pair[r];
    f.emplace_back(a, a + Complex(k.k_root_d(r), 0));
  }
  return gamma_ratio_product(f);
}

inline CFunctionValue c_tilde_at_rho(const RootSystem& R, const MultiplicityFunction& k) {
  return c_tilde(SpectralPoint::from_weight(R, rho_weight(R, k)), k);
}

// c(lambda,k) = c~(lambda,k) / c~(rho(k),k).
inline CFunctionValue c_normalized(const SpectralPoint& lam, const MultiplicityFunction& k) {
  CFunctionValue den = c_tilde_at_rho(*lam.R, k);
  if (!den.finite() || std::abs(den.value) == 0.0)
    throw NormalizationSingular("c~(rho(k),k) is zero or a pole");
  CFunctionValue num = c_tilde(lam, k);
  if (!num.finite()) return num;
  return {num.value / den.value, CFlag::finite};
}

// Yang-system c-function: prod_{alpha>0} (lambda(alpha^vee)+k_alpha) / lambda(alpha^vee).
inline CFunctionValue c_yang(const SpectralPoint& lam, const MultiplicityFunction& k) {
  const RootSystem& R = *lam.R;
  Complex v(1, 0);
  for (int r : R.positive) {
    Complex a = lam.pair[r];
    if (std::abs(a) == 0.0)
      return {Complex(std::numeric_limits<double>::infinity(), 0), CFlag::pole};
    v *= (a + Complex(k.k_root_d(r), 0)) / a;
  }
  if (std::abs(v) == 0.0) return {v, CFlag::zero};
  return {v, CFlag::finite};
}

// c^Y(lambda,k) = c~(rho,k)^{-1} prod Gamma(lambda(alpha^vee)+1)/Gamma(lambda(alpha^vee)+k_alpha+1).
inline CFunctionValue c_upper(const SpectralPoint& lam, const MultiplicityFunction& k) {
  const RootSystem& R = *lam.R;
  CFunctionValue norm = c_tilde_at_rho(R, k);
  if (!norm.finite() || std::abs(norm.value) == 0.0)
    throw NormalizationSingular("c~(rho(k),k) is zero or a pole");
  std::vector<std::pair<Complex, Complex>> f;
  for (int r : R.positive) {
    if (k.k_root(r) == 0) continue;
    Complex a = lam.pair[r];
    f.emplace_back(a + Complex(1, 0), a + Complex(k.k_root_d(r) + 1.0, 0));
  }
  CFunctionValue prod = gamma_ratio_product(f);
  if (!prod.finite()) return prod;
  return {prod.value / norm.value, CFlag::finite};
}

// Defining data of a tempered form L^temp = c_L + iV^L needed by f_L:
// the exact center pairings and which roots are constant on L.
struct TemperedFormData {
  QVec center_weight;               // c_L, weight coordinates (exact)
  std::vector<char> in_RL;          // per root index: alpha constant on L?
  std::vector<Rational> center_pair;  // c_L(alpha_r^vee), exact
};

struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f_L(lambda,k) = c~(rho,k)^2 prod'|Gamma(lambda(alpha^vee)+k_alpha)| /
// prod'|Gamma(lambda(alpha^vee))| over ALL roots, where prod' omits factors
// whose argument vanishes identically on L^temp (a symbolic condition on the
// defining data, not a numerical near-zero test).
inline double f_L_density(const RootSystem& R, const MultiplicityFunction& k,
                          const TemperedFormData& L, const SpectralPoint& lam,
                          double tol = 1e-12) {
  // contract: lambda must lie on L^temp
  for (int i = 0; i < R.rank; ++i)
    if (std::abs(lam.weight[i].real() - to_double(L.center_weight[i])) > tol)
      throw ContractViolation("f_L: Re(lambda) != c_L");
  for (int r = 0; r < R.nroots(); ++r)
    if (L.in_RL[r] && std::abs(lam.pair[r].imag()) > tol)
      throw ContractViolation("f_L: lambda - c_L not in iV^L");

  CFunctionValue cr = c_tilde_at_rho(R, k);
  if (!cr.finite()) throw NormalizationSingular("f_L: c~(rho(k),k) singular");
  double logv = 2.0 * std::log(std::abs(cr.value));
  for (int r = 0; r < R.nroots(); ++r) {
    Complex a = lam.pair[r];
    double ka = k.k_root_d(r);
    bool omit_num = L.in_RL[r] && (L.center_pair[r] + k.k_root(r) == 0);
    bool omit_den = L.in_RL[r] && (L.center_pair[r] == 0);
    if (!omit_num) logv += log_gamma(a + Complex(ka, 0)).real();
    if (!omit_den) logv -= log_gamma(a).real();
  }
  return std::exp(logv);
}

}  // namespace hypergeo
