#ifndef HYPERTORIC_LATTICE_HPP
#define HYPERTORIC_LATTICE_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/rational.hpp"

namespace hypertoric {

// ---------------------------------------------------------------------------
// Integer linear algebra on small matrices (k <= ~8).
// ---------------------------------------------------------------------------

// Determinant by fraction-free Gaussian elimination (Bareiss).
inline Int int_det(std::vector<IntVec> m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("int_det: not square");
  if (k == 0) return 1;
  Int prev = 1;
  Int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && m[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j)
        m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

// Solves B*x = rhs for integer x when det(B) = ±1 (Cramer).
inline IntVec unimodular_solve(const std::vector<IntVec>& b, const IntVec& rhs) {
  const std::size_t k = b.size();
  const Int det = int_det(b);
  if (det != 1 && det != -1)
    throw std::invalid_argument("unimodular_solve: matrix is not unimodular");
  IntVec x(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto bj = b;
    for (std::size_t r = 0; r < k; ++r) bj[r][j] = rhs[r];
    x[j] = int_det(bj) / det;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Gauge theory datum: 1 -> G -> (C*)^n -> F -> 1 encoded by the n x k integer
// matrix iota whose i-th row is the restricted weight of the i-th
// hypermultiplet.
// ---------------------------------------------------------------------------

class TorusDatum {
 public:
  TorusDatum(int n, int k, std::vector<IntVec> iota)
      : n_(n), k_(k), iota_(std::move(iota)) {
    validate();
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<IntVec>& iota() const { return iota_; }
  const IntVec& row(int i) const { return iota_.at(static_cast<std::size_t>(i - 1)); }

  // lambda_i = <xbar_i, lambda>, 1-based i.
  Int restrict_weight(int i, const IntVec& lambda) const {
    if (i < 1 || i > n_) throw std::out_of_range("restrict_weight: index out of range");
    if (static_cast<int>(lambda.size()) != k_)
      throw std::invalid_argument("restrict_weight: weight has wrong length");
    return dot(row(i), lambda);
  }

  IntVec restrict_all(const IntVec& lambda) const {
    IntVec out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = restrict_weight(i, lambda);
    return out;
  }

  bool operator==(const TorusDatum& o) const {
    return n_ == o.n_ && k_ == o.k_ && iota_ == o.iota_;
  }
  bool operator!=(const TorusDatum& o) const { return !(*this == o); }

 private:
  void validate() const {
    if (n_ < 1) throw std::invalid_argument("TorusDatum: n must be positive");
    if (k_ < 0 || k_ > n_) throw std::invalid_argument("TorusDatum: need 0 <= k <= n");
    if (static_cast<int>(iota_.size()) != n_)
      throw std::invalid_argument("TorusDatum: iota must have n rows");
    for (const auto& r : iota_)
      if (static_cast<int>(r.size()) != k_)
        throw std::invalid_argument("TorusDatum: iota rows must have length k");
    if (k_ == 0) return;
    // Every k x k minor must lie in {-1, 0, 1}, and some minor must be nonzero.
    bool full_rank = false;
    IntVec pick(static_cast<std::size_t>(k_));
    std::vector<int> idx(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<IntVec> sub;
      sub.reserve(static_cast<std::size_t>(k_));
      for (int i : idx) sub.push_back(iota_[static_cast<std::size_t>(i)]);
      const Int d = int_det(sub);
      if (d < -1 || d > 1) {
        std::string where;
        for (int i : idx) where += (where.empty() ? "" : ",") + std::to_string(i + 1);
        throw std::invalid_argument("TorusDatum: unimodularity violated at minor (" + where + ")");
      }
      if (d != 0) full_rank = true;
      // next k-combination of {0..n-1}
      int pos = k_ - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n_ - k_ + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k_; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!full_rank) throw std::invalid_argument("TorusDatum: iota does not have rank k");
  }

  int n_;
  int k_;
  std::vector<IntVec> iota_;
};

using DatumPtr = std::shared_ptr<const TorusDatum>;

inline DatumPtr make_datum(int n, int k, std::vector<IntVec> iota) {
  return std::make_shared<const TorusDatum>(n, k, std::move(iota));
}

inline bool same_datum(const DatumPtr& a, const DatumPtr& b) {
  return a && b && *a == *b;
}

// ---------------------------------------------------------------------------
// Module signatures: which Lagrangian (alpha), which orbit (S, mu), and which
// stabilizer flavour.
// ---------------------------------------------------------------------------

enum class Flavor { Small, Big };  // Small = K_{S,mu}, Big = L_{S,mu}

struct ModuleSignature {
  DatumPtr datum;
  std::vector<int> alpha;  // entries +1 / -1, length n
  std::set<int> s;         // subset of {1..n}, 1-based
  IntVec mu;               // length n
  Flavor flavor = Flavor::Small;

  ModuleSignature(DatumPtr d, std::vector<int> a, std::set<int> subset, IntVec m,
                  Flavor f = Flavor::Small)
      : datum(std::move(d)), alpha(std::move(a)), s(std::move(subset)), mu(std::move(m)), flavor(f) {
    if (!datum) throw std::invalid_argument("ModuleSignature: null datum");
    const int n = datum->n();
    if (static_cast<int>(alpha.size()) != n)
      throw std::invalid_argument("ModuleSignature: alpha must have length n");
    for (int a_i : alpha)
      if (a_i != 1 && a_i != -1) throw std::invalid_argument("ModuleSignature: alpha entries must be +-1");
    if (static_cast<int>(mu.size()) != n)
      throw std::invalid_argument("ModuleSignature: mu must have length n");
    for (int i : s)
      if (i < 1 || i > n) throw std::invalid_argument("ModuleSignature: S must be a subset of {1..n}");
  }

  bool in_s(int i) const { return s.count(i) > 0; }

  // Complement of S in increasing order.
  std::vector<int> s_complement() const {
    std::vector<int> out;
    for (int i = 1; i <= datum->n(); ++i)
      if (!in_s(i)) out.push_back(i);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination over the rationals.  Systems are lists of
// constraints a.x >= c; elimination is exact and only used on desk-scale
// systems (k <= ~8, tens of rows).
// ---------------------------------------------------------------------------

struct RationalConstraint {
  std::vector<Rational> a;
  Rational c;  // a.x >= c
};

namespace detail {

inline std::vector<RationalConstraint> eliminate_variable(
    const std::vector<RationalConstraint>& rows, std::size_t var) {
  std::vector<const RationalConstraint*> pos, neg;
  std::vector<RationalConstraint> out;
  for (const auto& r : rows) {
    const Rational& coef = r.a[var];
    if (coef > 0)
      pos.push_back(&r);
    else if (coef < 0)
      neg.push_back(&r);
    else
      out.push_back(r);
  }
  for (const auto* p : pos)
    for (const auto* m : neg) {
      // (1/p_v) * p  +  (-1/m_v) * m  has zero coefficient on var.
      RationalConstraint combined;
      combined.a.resize(p->a.size());
      const Rational pv = p->a[var], mv = m->a[var];
      for (std::size_t j = 0; j < p->a.size(); ++j)
        combined.a[j] = p->a[j] / pv - m->a[j] / mv;
      combined.c = p->c / pv - m->c / mv;
      combined.a[var] = 0;
      out.push_back(std::move(combined));
    }
  return out;
}

}  // namespace detail

// True iff {x : a.x >= c for all rows} is nonempty.
inline bool rational_system_feasible(std::vector<RationalConstraint> rows, std::size_t dim) {
  for (std::size_t v = 0; v < dim; ++v) rows = detail::eliminate_variable(rows, v);
  for (const auto& r : rows)
    if (r.c > 0) return false;  // 0 >= c with c > 0
  return true;
}

struct LinearMaximum {
  bool feasible = false;
  bool bounded = false;
  Rational value;  // meaningful when feasible && bounded
};

// sup { obj.x : a.x >= c } computed by eliminating x from the system
// augmented with t <= obj.x.
inline LinearMaximum rational_maximize(const std::vector<RationalConstraint>& rows,
                                       std::size_t dim,
                                       const std::vector<Rational>& obj) {
  std::vector<RationalConstraint> sys;
  sys.reserve(rows.size() + 1);
  for (const auto& r : rows) {
    RationalConstraint e;
    e.a = r.a;
    e.a.push_back(0);  // coefficient of t
    e.c = r.c;
    sys.push_back(std::move(e));
  }
  RationalConstraint tle;  // obj.x - t >= 0
  tle.a = obj;
  tle.a.push_back(-1);
  tle.c = 0;
  sys.push_back(std::move(tle));
  for (std::size_t v = 0; v < dim; ++v) sys = detail::eliminate_variable(sys, v);

  LinearMaximum result;
  bool has_upper = false;
  Rational upper = 0;
  Rational lower = 0;
  bool has_lower = false;
  for (const auto& r : sys) {
    const Rational& tc = r.a.back();
    if (tc == 0) {
      if (r.c > 0) return result;  // infeasible
    } else if (tc > 0) {
      Rational bound = r.c / tc;  // t >= bound
      if (!has_lower || bound > lower) lower = bound, has_lower = true;
    } else {
      Rational bound = r.c / tc;  // t <= bound
      if (!has_upper || bound < upper) upper = bound, has_upper = true;
    }
  }
  if (has_lower && has_upper && lower > upper) return result;  // infeasible
  result.feasible = true;
  result.bounded = has_upper;
  if (has_upper) result.value = upper;
  return result;
}

// ---------------------------------------------------------------------------
// Support polytopes of Springer fibres.  The real polytope is the open set
// {xi : alpha_i <xbar_i, xi> - alpha_i mu_i + 1/2 > 0, i not in S}; a lattice
// point sigma belongs to the support iff alpha_i sigma_i >= alpha_i mu_i for
// all i not in S.  Lattice queries always use the integral form.
// ---------------------------------------------------------------------------

struct HalfSpace {
  std::vector<Rational> a;
  Rational b;  // { xi : a.xi + b > 0 }
};

class SupportPolytope {
 public:
  SupportPolytope(DatumPtr datum, std::vector<int> alpha, std::set<int> s, IntVec mu)
      : datum_(std::move(datum)), alpha_(std::move(alpha)), s_(std::move(s)), mu_(std::move(mu)) {
    const int k = datum_->k();
    for (int i = 1; i <= datum_->n(); ++i) {
      if (s_.count(i)) continue;
      HalfSpace h;
      h.a.resize(static_cast<std::size_t>(k));
      const IntVec& xbar = datum_->row(i);
      const int a_i = alpha_[static_cast<std::size_t>(i - 1)];
      for (int j = 0; j < k; ++j)
        h.a[static_cast<std::size_t>(j)] = Rational(a_i) * static_cast<long>(xbar[static_cast<std::size_t>(j)]);
      h.b = -Rational(a_i) * static_cast<long>(mu_[static_cast<std::size_t>(i - 1)]) + Rational(1, 2);
      halfspaces_.push_back(std::move(h));
      constrained_.push_back(i);
    }
  }

  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const DatumPtr& datum() const { return datum_; }
  int dim() const { return datum_->k(); }
  const std::vector<int>& constrained_indices() const { return constrained_; }

  // Integral membership: alpha_i sigma_i >= alpha_i mu_i for all i not in S.
  bool contains(const IntVec& sigma) const {
    for (int i : constrained_) {
      const Int si = datum_->restrict_weight(i, sigma);
      const int a_i = alpha_[static_cast<std::size_t>(i - 1)];
      if (a_i * si < a_i * mu_[static_cast<std::size_t>(i - 1)]) return false;
    }
    return true;
  }

  // Strict real membership through the stored halfspaces.
  bool contains_real(const std::vector<Rational>& xi) const {
    for (const auto& h : halfspaces())
      if (!(dot_rational(h.a, xi) + h.b > 0)) return false;
    return true;
  }

  // Closure of the real polytope as a.x >= c rows.
  std::vector<RationalConstraint> closure_rows() const {
    std::vector<RationalConstraint> rows;
    for (const auto& h : halfspaces()) {
      RationalConstraint r;
      r.a = h.a;
      r.c = -h.b;
      rows.push_back(std::move(r));
    }
    return rows;
  }

  // Recession cone rows { d : a.d >= 0 }.
  std::vector<RationalConstraint> recession_rows() const {
    auto rows = closure_rows();
    for (auto& r : rows) r.c = 0;
    return rows;
  }

 private:
  static Rational dot_rational(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  DatumPtr datum_;
  std::vector<int> alpha_;
  std::set<int> s_;
  IntVec mu_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<int> constrained_;
};

inline SupportPolytope support_polytope(const ModuleSignature& sig) {
  return SupportPolytope(sig.datum, sig.alpha, sig.s, sig.mu);
}

// All support lattice points in the L-infinity ball of the given radius,
// lexicographically sorted.
inline std::vector<IntVec> enumerate_support(const SupportPolytope& poly, Int box_radius) {
  if (box_radius < 0) throw std::invalid_argument("enumerate_support: negative radius");
  const int k = poly.dim();
  std::vector<IntVec> out;
  IntVec sigma(static_cast<std::size_t>(k), -box_radius);
  if (k == 0) {
    if (poly.contains(sigma)) out.push_back(sigma);
    return out;
  }
  while (true) {
    if (poly.contains(sigma)) out.push_back(sigma);
    int pos = k - 1;
    while (pos >= 0 && sigma[static_cast<std::size_t>(pos)] == box_radius) {
      sigma[static_cast<std::size_t>(pos)] = -box_radius;
      --pos;
    }
    if (pos < 0) break;
    ++sigma[static_cast<std::size_t>(pos)];
  }
  return out;  // the scan order is already lexicographic
}

// sup of <chi, xi> over the polytope is finite iff chi.d <= 0 on the whole
// recession cone; decided by exact elimination.
inline bool is_bounded_above(const SupportPolytope& poly, const IntVec& chi) {
  const int k = poly.dim();
  if (static_cast<int>(chi.size()) != k)
    throw std::invalid_argument("is_bounded_above: chi has wrong length");
  auto rows = poly.recession_rows();
  RationalConstraint strict;  // chi.d >= 1 witnesses unboundedness after scaling
  strict.a.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) strict.a[static_cast<std::size_t>(j)] = Rational(static_cast<long>(chi[static_cast<std::size_t>(j)]));
  strict.c = 1;
  rows.push_back(std::move(strict));
  return !rational_system_feasible(std::move(rows), static_cast<std::size_t>(k));
}

// True iff the recession cone meets ker(chi) only at the origin, i.e. every
// chi-level set of the polytope is bounded.
inline bool has_finite_chi_levels(const SupportPolytope& poly, const IntVec& chi) {
  const int k = poly.dim();
  for (int j = 0; j < k; ++j) {
    for (int dir : {1, -1}) {
      auto rows = poly.recession_rows();
      RationalConstraint up, dn, unit;
      up.a.resize(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t) up.a[static_cast<std::size_t>(t)] = Rational(static_cast<long>(chi[static_cast<std::size_t>(t)]));
      up.c = 0;
      dn.a = up.a;
      for (auto& q : dn.a) q = -q;
      dn.c = 0;
      unit.a.assign(static_cast<std::size_t>(k), Rational(0));
      unit.a[static_cast<std::size_t>(j)] = Rational(dir);
      unit.c = 1;
      rows.push_back(up);
      rows.push_back(dn);
      rows.push_back(unit);
      if (rational_system_feasible(std::move(rows), static_cast<std::size_t>(k))) return false;
    }
  }
  return true;
}

// All S with |S^c| = k whose complementary restricted weights form a lattice
// basis (k x k determinant +-1).  Ordered by the complement, lexicographically.
inline std::vector<std::set<int>> exceptional_subsets(const TorusDatum& datum) {
  const int n = datum.n();
  const int k = datum.k();
  std::vector<std::set<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    std::set<int> s;
    for (int i = 1; i <= n; ++i) s.insert(i);
    out.push_back(std::move(s));
    return out;
  }
  while (true) {
    std::vector<IntVec> sub;
    for (int i : idx) sub.push_back(datum.iota()[static_cast<std::size_t>(i)]);
    const Int d = int_det(sub);
    if (d == 1 || d == -1) {
      std::set<int> s;
      for (int i = 1; i <= n; ++i) s.insert(i);
      for (int i : idx) s.erase(i + 1);
      out.push_back(std::move(s));
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Apex of an exceptional-Dirichlet support cone: the unique sigma with
// <xbar_i, sigma> = mu_i for all i not in S.
inline IntVec sigma_max(const ModuleSignature& sig) {
  const auto comp = sig.s_complement();
  if (static_cast<int>(comp.size()) != sig.datum->k())
    throw std::invalid_argument("sigma_max: |S^c| must equal k");
  std::vector<IntVec> b;
  IntVec rhs;
  for (int i : comp) {
    b.push_back(sig.datum->row(i));
    rhs.push_back(sig.mu[static_cast<std::size_t>(i - 1)]);
  }
  return unimodular_solve(b, rhs);
}

}  // namespace hypertoric

#endif
