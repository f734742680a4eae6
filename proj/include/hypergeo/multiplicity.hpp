// Multiplicity functions, rho(k), the sinh-power density delta(k;x), the
// integrability gate, the Calogero-Moser potential term and the closed-form
// Macdonald volume for equal parameters.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "hypergeo/gamma.hpp"
#include "hypergeo/rootsystem.hpp"

namespace hypergeo {

struct MultiplicityFunction {
  const RootSystem* R = nullptr;
  std::vector<Rational> per_orbit;  // one value per W-orbit, shortest first

  static MultiplicityFunction equal(const RootSystem& R, const Rational& k) {
    return {&R, std::vector<Rational>(R.orbits.size(), k)};
  }
  static MultiplicityFunction of(const RootSystem& R, std::vector<Rational> vals) {
    if (vals.size() != R.orbits.size())
      throw std::invalid_argument("multiplicity: need one value per root orbit");
    return {&R, std::move(vals)};
  }

  const Rational& k_root(int root_idx) const { return per_orbit[R->orbit_of[root_idx]]; }
  double k_root_d(int root_idx) const { return to_double(k_root(root_idx)); }
  bool all_negative() const {
    for (const auto& k : per_orbit)
      if (k >= 0) return false;
    return true;
  }
  bool all_zero() const {
    for (const auto& k : per_orbit)
      if (k != 0) return false;
    return true;
  }
  bool is_equal_parameter() const {
    for (const auto& k : per_orbit)
      if (k != per_orbit[0]) return false;
    return true;
  }
};

// rho(k) = 1/2 sum_{alpha>0} k_alpha alpha, unscaled ambient coordinates.
inline QVec rho_ambient(const RootSystem& R, const MultiplicityFunction& k) {
  QVec v(R.ambient, Rational(0));
  for (int r : R.positive) v = add(v, scale(R.roots[r], k.k_root(r) / 2));
  return v;
}

// rho(k) in weight coordinates: rho(k)(alpha_i^vee).
inline QVec rho_weight(const RootSystem& R, const MultiplicityFunction& k) {
  return R.ambient_to_weight(rho_ambient(R, k));
}

struct RegimeReport {
  bool all_negative = false;
  bool condition_1_6 = false;  // all k<0 and rho(k)(beta^vee)+k_beta+1 > 0
  bool condition_1_7 = false;  // all k<0 and sum k_i h_i + 1 > 0
  Rational margin;             // rho(k)(beta^vee) + k_beta + 1
};

inline RegimeReport check_integrability(const RootSystem& R, const MultiplicityFunction& k) {
  RegimeReport rep;
  rep.all_negative = k.all_negative();
  QVec rho = rho_weight(R, k);
  Rational pair_beta = R.pair_root(rho, R.highest_short);
  rep.margin = pair_beta + k.k_root(R.highest_short) + 1;
  rep.condition_1_6 = rep.all_negative && rep.margin > 0;
  Rational s = 0;
  for (std::size_t o = 0; o < R.orbits.size(); ++o) s += k.per_orbit[o] * R.orbit_h[o];
  rep.condition_1_7 = rep.all_negative && (s + 1 > 0);
  return rep;
}

// delta(k;x) = prod_{alpha>0} |2 sinh(alpha(x)/2)|^{2 k_alpha}; extended-real
// on walls: +inf for k<0, 0 for k>0, factor skipped for k=0.
inline double delta_density(const RootSystem& R, const MultiplicityFunction& k,
                            const std::vector<double>& x) {
  double logv = 0;
  for (int r : R.positive) {
    double ka = k.k_root_d(r);
    if (ka == 0.0) continue;
    double a = R.root_value_at(r, x);
    if (a == 0.0) return ka < 0 ? std::numeric_limits<double>::infinity() : 0.0;
    logv += 2.0 * ka * std::log(std::abs(2.0 * std::sinh(0.5 * a)));
  }
  return std::exp(logv);
}

struct WallSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Potential term of the Calogero-Moser operator S(k):
// -1/4 sum_{alpha>0} (alpha,alpha) k_alpha (k_alpha - 1) / sinh^2(alpha(x)/2).
inline double schrodinger_potential(const RootSystem& R, const MultiplicityFunction& k,
                                    const std::vector<double>& x) {
  double v = 0;
  double s2 = R.scale_d * R.scale_d;
  for (int r : R.positive) {
    double a = R.root_value_at(r, x);
    if (std::abs(a) < 1e-12) throw WallSingularity("schrodinger_potential: x on a wall");
    double ka = k.k_root_d(r);
    double aa = to_double(dot(R.roots[r], R.roots[r])) * s2;
    double sh = std::sinh(0.5 * a);
    v += -0.25 * aa * ka * (ka - 1.0) / (sh * sh);
  }
  return v;
}

// Closed-form volume int_a delta(k;x) dx for equal multiplicities
// (prod_i binom(d_i k, k) pi / sin(-m_i pi k)).
inline double macdonald_volume(const RootSystem& R, const Rational& k_equal) {
  double k = to_double(k_equal);
  double v = 1.0;
  for (std::size_t i = 0; i < R.degrees.size(); ++i) {
    double di = R.degrees[i], mi = R.exponents[i];
    double s = std::sin(-mi * M_PI * k);
    if (std::abs(s) < 1e-12)
      throw SingularParameter("macdonald_volume: sin(-m_i pi k) vanishes");
    v *= binom_gamma(di * k, k) * M_PI / s;
  }
  return v;
}

inline double macdonald_volume(const RootSystem& R, const MultiplicityFunction& k) {
  if (!k.is_equal_parameter())
    throw std::invalid_argument("macdonald_volume: equal multiplicities only");
  return macdonald_volume(R, k.per_orbit[0]);
}

}  // namespace hypergeo
