// Irreducible reduced root systems at the covolume(Q^vee)=1 normalization,
// with exact rational coordinates, exact Weyl groups, lattice data and
// invariant-theory tables. Rank <= 3 for the classical families, plus G2.
//
// Representation: every vector of a* is stored as an unscaled rational
// coordinate vector v in the standard crystallographic embedding; the true
// vector is s*v where the global scale s satisfies s^(2n) in Q (n = rank).
// Vectors of a (coroots, coweights) are stored unscaled as well; their true
// versions are w/s. Pairings lambda(alpha^vee) of unscaled representatives
// are scale-free and exact.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypergeo/linalg.hpp"
#include "hypergeo/rational.hpp"

namespace hypergeo {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct UnsupportedType : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

struct RootSystem {
  Family family{};
  int rank = 0;     // n = dim of a
  int ambient = 0;  // embedding dimension (n, or n+1 for type A and G2)
  std::string label;

  // All roots, unscaled rational ambient coordinates. Positive roots first
  // (sorted by height then lexicographic), then their negatives in the same
  // order: root index r has negation index r ^ is encoded in `negation`.
  std::vector<QVec> roots;
  std::vector<QVec> coroots;  // 2 v / (v,v), unscaled
  std::vector<int> positive;  // indices 0..npos-1 by construction
  std::vector<int> simple;    // indices of the simple roots within `roots`
  std::vector<int> negation;  // negation[r] = index of -roots[r]

  // Exact Weyl group as ambient orthogonal matrices with rational entries.
  std::vector<QMat> weyl;
  std::vector<std::vector<int>> weyl_root_perm;  // per w: image index of each root
  // Integer action on weight coordinates: (w.lam)_i = sum_j M[i][j] lam_j
  // where lam_j = lam(alpha_j^vee).
  std::vector<std::vector<std::vector<long>>> weyl_weight;

  std::vector<std::vector<int>> root_coords;    // root in simple-root basis (integers)
  std::vector<std::vector<int>> coroot_coords;  // coroot in simple-coroot basis (integers)
  std::vector<std::vector<long>> pairing_tab;   // pairing_tab[r][j] = alpha_r(alpha_j^vee)
  QMat simple_root_gram;                        // unscaled
  QMat simple_coroot_gram;                      // unscaled
  QMat weight_gram;                             // unscaled Gram of fundamental weights
  QMat inv_cartan_T;                            // maps weight coords -> simple-root coords
  std::vector<QVec> fund_weights;               // ambient unscaled rational
  std::vector<QVec> fund_coweights;             // xi_i in a: alpha_j(xi_i) = delta_ij (unscaled)

  std::vector<int> degrees;
  std::vector<int> exponents;
  std::vector<std::vector<int>> orbits;  // root indices; shortest roots first
  std::vector<int> orbit_of;
  std::vector<Rational> orbit_h;  // h_i = #R_i / n
  int highest_short = -1;
  int highest_root = -1;
  int coxeter = 0;

  Rational scale_pow2n;  // s^(2n), exact
  double scale_d = 1.0;  // s as double

  int nroots() const { return static_cast<int>(roots.size()); }
  int npos() const { return static_cast<int>(positive.size()); }
  int weyl_order() const { return static_cast<int>(weyl.size()); }

  // lambda given by weight coordinates; returns lambda(alpha_r^vee).
  template <class Scalar>
  Scalar pair_root(const std::vector<Scalar>& lam_weight, int r) const {
    Scalar s{};
    for (int j = 0; j < rank; ++j) s += Scalar(coroot_coords[r][j]) * lam_weight[j];
    return s;
  }

  template <class Scalar>
  std::vector<Scalar> w_action_weight(int w, const std::vector<Scalar>& lam) const {
    std::vector<Scalar> out(rank, Scalar{});
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out[i] += Scalar(weyl_weight[w][i][j]) * lam[j];
    return out;
  }

  // Unscaled ambient coordinates of a vector of a* given in weight coords.
  QVec weight_to_ambient(const QVec& lam) const {
    QVec v(ambient, Rational(0));
    for (int i = 0; i < rank; ++i) v = add(v, scale(fund_weights[i], lam[i]));
    return v;
  }

  // Weight coordinates of an ambient unscaled a*-vector.
  QVec ambient_to_weight(const QVec& v) const {
    QVec lam(rank);
    for (int i = 0; i < rank; ++i) lam[i] = dot(v, coroots[simple[i]]);
    return lam;
  }

  // True ambient coordinates (doubles) of an a*-vector.
  std::vector<double> true_coords_star(const QVec& v) const {
    std::vector<double> r(ambient);
    for (int i = 0; i < ambient; ++i) r[i] = to_double(v[i]) * scale_d;
    return r;
  }

  // alpha_r(x) for x in true ambient coordinates of a.
  double root_value_at(int r, const std::vector<double>& x) const {
    double s = 0;
    for (int i = 0; i < ambient; ++i) s += to_double(roots[r][i]) * x[i];
    return s * scale_d;
  }

  // True coordinates of the i-th fundamental coweight (a-side vectors carry 1/s).
  std::vector<double> true_coweight(int i) const {
    std::vector<double> r(ambient);
    for (int j = 0; j < ambient; ++j) r[j] = to_double(fund_coweights[i][j]) / scale_d;
    return r;
  }

  // x(t) = -sum_i t_i xi_i in true coordinates; t >= 0 sweeps the closed
  // negative chamber and alpha_i(x) = -t_i for simple roots.
  std::vector<double> chamber_point(const std::vector<double>& t) const {
    std::vector<double> x(ambient, 0.0);
    for (int i = 0; i < rank; ++i) {
      auto xi = true_coweight(i);
      for (int j = 0; j < ambient; ++j) x[j] -= t[i] * xi[j];
    }
    return x;
  }

  bool simply_laced() const { return orbits.size() == 1; }
};

namespace detail {

inline QVec unit(int m, int i) {
  QVec v(m, Rational(0));
  v[i] = 1;
  return v;
}

inline QMat reflection_matrix(const QVec& v, int m) {
  Rational vv = dot(v, v);
  QMat r = identity(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r[i][j] -= Rational(2) * v[i] * v[j] / vv;
  return r;
}

inline void degrees_for(Family f, int n, std::vector<int>& deg) {
  deg.clear();
  switch (f) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) deg.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) deg.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) deg.push_back(2 * i);
      deg.push_back(n);
      std::sort(deg.begin(), deg.end());
      break;
    case Family::G2:
      deg = {2, 6};
      break;
    default:
      throw UnsupportedType("no degree table for family " + family_name(f));
  }
}

}  // namespace detail

// Standard simple systems, unscaled.
inline std::vector<QVec> simple_system(Family f, int n, int& ambient) {
  using detail::unit;
  std::vector<QVec> s;
  switch (f) {
    case Family::A: {
      if (n < 1 || n > 3) throw UnsupportedType("unsupported type A" + std::to_string(n));
      ambient = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(sub(unit(ambient, i), unit(ambient, i + 1)));
      break;
    }
    case Family::B: {
      if (n < 2 || n > 3) throw UnsupportedType("unsupported type B" + std::to_string(n));
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      s.push_back(unit(n, n - 1));
      break;
    }
    case Family::C: {
      if (n < 2 || n > 3) throw UnsupportedType("unsupported type C" + std::to_string(n));
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      s.push_back(scale(unit(n, n - 1), Rational(2)));
      break;
    }
    case Family::D: {
      if (n != 3) throw UnsupportedType("unsupported type D" + std::to_string(n));
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      s.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    }
    case Family::G2: {
      if (n != 2) throw UnsupportedType("unsupported type G2 rank " + std::to_string(n));
      ambient = 3;
      s.push_back(sub(unit(3, 0), unit(3, 1)));  // short
      QVec a2 = add(add(scale(unit(3, 0), Rational(-2)), unit(3, 1)), unit(3, 2));
      s.push_back(a2);  // long
      break;
    }
    default:
      throw UnsupportedType("unsupported family " + family_name(f) +
                            " (rank above desk scale)");
  }
  return s;
}

inline Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  throw UnsupportedType("unknown family label \"" + s + "\"");
}

RootSystem build_root_system(Family f, int n);

inline RootSystem build_root_system(const std::string& label) {
  // "A2", "G2", "B3", ...
  if (label == "G2") return build_root_system(Family::G2, 2);
  if (label.size() < 2) throw UnsupportedType("bad root system label \"" + label + "\"");
  Family f = parse_family(label.substr(0, 1));
  int n = std::stoi(label.substr(1));
  return build_root_system(f, n);
}

inline RootSystem build_root_system(Family f, int n) {
  RootSystem R;
  R.family = f;
  R.rank = n;
  R.label = family_name(f) + (f == Family::G2 ? "" : std::to_string(n));
  if (f == Family::G2) n = R.rank = 2;

  std::vector<QVec> simple = simple_system(f, n, R.ambient);
  int m = R.ambient;

  // Close the simple system under simple reflections to obtain R.
  std::vector<QMat> srefl;
  for (auto& a : simple) srefl.push_back(detail::reflection_matrix(a, m));
  std::map<std::string, int> seen;
  std::vector<QVec> all = simple;
  for (auto& a : simple) seen.emplace(key_of(a), 0);
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (auto& w : srefl) {
      QVec img = mat_vec(w, all[head]);
      if (seen.emplace(key_of(img), 0).second) all.push_back(img);
    }
    if (all.size() > 300) throw InternalConsistencyError("root closure did not terminate");
  }

  // Express each root in the simple basis; must be all-integer, all-nonneg or
  // all-nonpos (reduced irreducible system).
  QMat basis_T(m, QVec(simple.size()));
  for (int i = 0; i < m; ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) basis_T[i][j] = simple[j][i];
  struct RootRec {
    QVec v;
    std::vector<int> coords;
    int height;
  };
  std::vector<RootRec> pos;
  for (auto& v : all) {
    auto sol = solve_any(basis_T, v);
    if (!sol) throw InternalConsistencyError("root outside span of simple roots");
    std::vector<int> c;
    int h = 0;
    bool nonneg = true, nonpos = true;
    for (auto& q : *sol) {
      if (denominator(q) != 1) throw InternalConsistencyError("non-integral root coordinate");
      int ci = static_cast<int>(numerator(q).convert_to<long>());
      c.push_back(ci);
      h += ci;
      nonneg = nonneg && ci >= 0;
      nonpos = nonpos && ci <= 0;
    }
    if (!nonneg && !nonpos) throw InternalConsistencyError("root neither positive nor negative");
    if (nonneg) pos.push_back({v, c, h});
  }
  std::sort(pos.begin(), pos.end(), [](const RootRec& a, const RootRec& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords < b.coords;
  });

  for (auto& p : pos) {
    R.roots.push_back(p.v);
    R.root_coords.push_back(p.coords);
  }
  int np = static_cast<int>(pos.size());
  for (int i = 0; i < np; ++i) {
    R.roots.push_back(scale(pos[i].v, Rational(-1)));
    std::vector<int> c = pos[i].coords;
    for (auto& x : c) x = -x;
    R.root_coords.push_back(c);
    R.positive.push_back(i);
  }
  R.negation.resize(2 * np);
  for (int i = 0; i < np; ++i) {
    R.negation[i] = np + i;
    R.negation[np + i] = i;
  }
  for (int r = 0; r < 2 * np; ++r) {
    const QVec& v = R.roots[r];
    R.coroots.push_back(scale(v, Rational(2) / dot(v, v)));
  }
  for (std::size_t j = 0; j < simple.size(); ++j) {
    std::vector<int> c(simple.size(), 0);
    c[j] = 1;
    for (int r = 0; r < np; ++r)
      if (R.root_coords[r] == c) R.simple.push_back(r);
  }
  if (static_cast<int>(R.simple.size()) != n)
    throw InternalConsistencyError("simple roots not found in root list");

  // Coroot coordinates in the simple-coroot basis (always integral).
  {
    QMat cobasis_T(m, QVec(n));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) cobasis_T[i][j] = R.coroots[R.simple[j]][i];
    for (int r = 0; r < R.nroots(); ++r) {
      auto sol = solve_any(cobasis_T, R.coroots[r]);
      if (!sol) throw InternalConsistencyError("coroot outside coroot lattice span");
      std::vector<int> c;
      for (auto& q : *sol) {
        if (denominator(q) != 1)
          throw InternalConsistencyError("non-integral coroot coordinate");
        c.push_back(static_cast<int>(numerator(q).convert_to<long>()));
      }
      R.coroot_coords.push_back(c);
    }
  }
  for (int r = 0; r < R.nroots(); ++r) {
    std::vector<long> row(n);
    for (int j = 0; j < n; ++j) {
      Rational p = dot(R.roots[r], R.coroots[R.simple[j]]);
      if (denominator(p) != 1) throw InternalConsistencyError("non-integral pairing");
      row[j] = p.convert_to<long>();
    }
    R.pairing_tab.push_back(row);
  }

  // Grams.
  {
    std::vector<QVec> sr, sc;
    for (int j = 0; j < n; ++j) {
      sr.push_back(R.roots[R.simple[j]]);
      sc.push_back(R.coroots[R.simple[j]]);
    }
    R.simple_root_gram = gram(sr);
    R.simple_coroot_gram = gram(sc);
  }

  // Fundamental weights: solve (w_i, alpha_j^vee) = delta_ij within span(R).
  {
    // Rows: coroot functionals; for type A also pin the hyperplane component.
    for (int i = 0; i < n; ++i) {
      QMat A;
      QVec b;
      for (int j = 0; j < n; ++j) {
        A.push_back(R.coroots[R.simple[j]]);
        b.push_back(i == j ? Rational(1) : Rational(0));
      }
      if (m > n) {  // constrain to span(R): orthogonal to (1,..,1) for type A / G2
        QVec ones(m, Rational(1));
        A.push_back(ones);
        b.push_back(Rational(0));
      }
      auto sol = solve(A, b);
      if (!sol) throw InternalConsistencyError("fundamental weight solve failed");
      R.fund_weights.push_back(*sol);
    }
    R.weight_gram = gram(R.fund_weights);
  }

  // Fundamental coweights: alpha_j(xi_i) = delta_ij, unscaled (true xi = xi/s).
  for (int i = 0; i < n; ++i) {
    QMat A;
    QVec b;
    for (int j = 0; j < n; ++j) {
      A.push_back(R.roots[R.simple[j]]);
      b.push_back(i == j ? Rational(1) : Rational(0));
    }
    if (m > n) {
      QVec ones(m, Rational(1));
      A.push_back(ones);
      b.push_back(Rational(0));
    }
    auto sol = solve(A, b);
    if (!sol) throw InternalConsistencyError("fundamental coweight solve failed");
    R.fund_coweights.push_back(*sol);
  }

  // Weyl group closure from simple reflections.
  {
    std::map<std::string, int> wseen;
    R.weyl.push_back(identity(m));
    wseen.emplace(key_of(R.weyl[0]), 0);
    std::size_t iter_bound = 0;
    for (std::size_t head = 0; head < R.weyl.size(); ++head) {
      for (auto& s : srefl) {
        QMat img = mat_mul(s, R.weyl[head]);
        if (wseen.emplace(key_of(img), 0).second) R.weyl.push_back(img);
        if (++iter_bound > 20000)
          throw InternalConsistencyError("Weyl closure did not terminate");
      }
      if (R.weyl.size() > 400)
        throw InternalConsistencyError("Weyl group exceeded expected order");
    }
  }

  // Root permutation per Weyl element.
  {
    std::map<std::string, int> root_index;
    for (int r = 0; r < R.nroots(); ++r) root_index.emplace(key_of(R.roots[r]), r);
    for (auto& w : R.weyl) {
      std::vector<int> perm(R.nroots());
      for (int r = 0; r < R.nroots(); ++r) {
        auto it = root_index.find(key_of(mat_vec(w, R.roots[r])));
        if (it == root_index.end())
          throw InternalConsistencyError("Weyl element does not permute R");
        perm[r] = it->second;
      }
      R.weyl_root_perm.push_back(perm);
    }
  }

  // Weight-coordinate action: (w.lam)_i = lam(w^{-1} alpha_i^vee).
  {
    // Find inverse permutation via matrix transpose (orthogonal rational).
    std::map<std::string, int> wkey;
    for (int w = 0; w < R.weyl_order(); ++w) wkey.emplace(key_of(R.weyl[w]), w);
    for (int w = 0; w < R.weyl_order(); ++w) {
      auto it = wkey.find(key_of(transpose(R.weyl[w])));
      if (it == wkey.end()) throw InternalConsistencyError("Weyl inverse missing");
      int winv = it->second;
      std::vector<std::vector<long>> M(n, std::vector<long>(n));
      for (int i = 0; i < n; ++i) {
        int img = R.weyl_root_perm[winv][R.simple[i]];
        for (int j = 0; j < n; ++j) M[i][j] = R.coroot_coords[img][j];
      }
      R.weyl_weight.push_back(M);
    }
  }

  // Orbits under W, shortest roots first.
  {
    std::vector<int> orbit_of(R.nroots(), -1);
    std::vector<std::pair<Rational, std::vector<int>>> orbs;
    for (int r = 0; r < R.nroots(); ++r) {
      if (orbit_of[r] >= 0) continue;
      std::vector<int> orb;
      std::vector<int> stack{r};
      orbit_of[r] = static_cast<int>(orbs.size());
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        orb.push_back(cur);
        for (auto& perm : R.weyl_root_perm) {
          int img = perm[cur];
          if (orbit_of[img] < 0) {
            orbit_of[img] = static_cast<int>(orbs.size());
            stack.push_back(img);
          }
        }
      }
      std::sort(orb.begin(), orb.end());
      orbs.emplace_back(dot(R.roots[r], R.roots[r]), orb);
    }
    std::sort(orbs.begin(), orbs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    R.orbit_of.assign(R.nroots(), -1);
    for (std::size_t o = 0; o < orbs.size(); ++o) {
      R.orbits.push_back(orbs[o].second);
      for (int r : orbs[o].second) R.orbit_of[r] = static_cast<int>(o);
      R.orbit_h.push_back(Rational(static_cast<int>(orbs[o].second.size())) / n);
    }
    if (R.orbits.size() > 2)
      throw InternalConsistencyError("more than two root orbits: system not irreducible");
  }

  // Highest (dominant) root of the short orbit and of R.
  {
    auto dominant = [&](const std::vector<int>& among) {
      int found = -1;
      for (int r : among) {
        bool dom = true;
        for (int j = 0; j < n; ++j)
          if (R.pairing_tab[r][j] < 0) dom = false;
        if (dom) {
          if (found >= 0) throw InternalConsistencyError("dominant root not unique in orbit");
          found = r;
        }
      }
      if (found < 0) throw InternalConsistencyError("no dominant root in orbit");
      return found;
    };
    R.highest_short = dominant(R.orbits.front());
    R.highest_root = dominant(R.orbits.back());  // dominant long root = highest root
  }

  detail::degrees_for(f, n, R.degrees);
  for (int d : R.degrees) R.exponents.push_back(d - 1);
  R.coxeter = R.nroots() / n;

  // Invariant cross-checks: |W| = prod d_i, #R_+ = sum m_i, h = max degree.
  {
    long prod = 1, sum = 0;
    for (int d : R.degrees) prod *= d;
    for (int e : R.exponents) sum += e;
    if (prod != R.weyl_order())
      throw InternalConsistencyError("degree table disagrees with |W|");
    if (sum != R.npos())
      throw InternalConsistencyError("exponent table disagrees with #R_+");
    if (R.coxeter != R.degrees.back())
      throw InternalConsistencyError("Coxeter number disagrees with top degree");
  }

  // Normalization: covolume(Q^vee) = 1 forces s^(2n) = det Gram(coroot basis).
  {
    std::vector<QVec> sc;
    for (int j = 0; j < n; ++j) sc.push_back(R.coroots[R.simple[j]]);
    Rational g = det(gram(sc));
    if (g <= 0) throw InternalConsistencyError("degenerate coroot lattice");
    R.scale_pow2n = g;
    R.scale_d = std::pow(to_double(g), 1.0 / (2.0 * n));
  }

  // inv_cartan_T: weight coords -> simple-root coords.
  {
    QMat cartanT(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartanT[i][j] = Rational(R.pairing_tab[R.simple[j]][i]);
    R.inv_cartan_T = inverse(cartanT);
  }

  return R;
}

inline std::vector<QVec> weyl_orbit(const RootSystem& R, const QVec& ambient_vec) {
  std::map<std::string, int> seen;
  std::vector<QVec> out;
  for (const auto& w : R.weyl) {
    QVec img = mat_vec(w, ambient_vec);
    if (seen.emplace(key_of(img), 0).second) out.push_back(img);
  }
  return out;
}

// Does `point` lie in the convex hull of the W-orbit of `orbit_generator`?
// Both in unscaled ambient coordinates; exact.
inline bool hull_contains(const RootSystem& R, const QVec& orbit_generator, const QVec& point) {
  return in_convex_hull(weyl_orbit(R, orbit_generator), point);
}

// Index of the sublattice spanned by `sub_basis` (coroot-type ambient vectors)
// inside Q^vee: |det| of the change-of-basis matrix, exact.
inline Rational lattice_index(const RootSystem& R, const std::vector<QVec>& sub_basis) {
  int n = R.rank;
  if (static_cast<int>(sub_basis.size()) != n)
    throw std::invalid_argument("lattice_index: basis size != rank");
  QMat cobasis_T(R.ambient, QVec(n));
  for (int i = 0; i < R.ambient; ++i)
    for (int j = 0; j < n; ++j) cobasis_T[i][j] = R.coroots[R.simple[j]][i];
  QMat M(n, QVec(n));
  for (int b = 0; b < n; ++b) {
    auto sol = solve_any(cobasis_T, sub_basis[b]);
    if (!sol) throw std::invalid_argument("lattice_index: vector outside Q^vee span");
    for (int j = 0; j < n; ++j) M[b][j] = (*sol)[j];
  }
  Rational d = det(M);
  if (d == 0) throw std::invalid_argument("lattice_index: degenerate basis");
  return rational_abs(d);
}

// Q_+ cone shells: all kappa = sum c_i alpha_i with c_i >= 0 and
// sum c_i == height, as coordinate vectors.
inline std::vector<std::vector<int>> qplus_shell(int rank, int height) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rank, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      rec(pos + 1, left - c);
    }
  };
  if (rank == 0) return out;
  rec(0, height);
  return out;
}

}  // namespace hypergeo
