#ifndef HYPERTORIC_MODULES_HPP
#define HYPERTORIC_MODULES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/algebra.hpp"
#include "hypertoric/lattice.hpp"
#include "hypertoric/polynomial.hpp"

namespace hypertoric {

// Weight keys: the full weight sigma in Z^k for the Small flavour, and the
// tuple (sigma_i)_{i notin S} for the Big flavour (faithful by unimodularity).

inline IntVec weight_key(const ModuleSignature& sig, const IntVec& sigma) {
  if (static_cast<int>(sigma.size()) != sig.datum->k())
    throw std::invalid_argument("weight_key: sigma has wrong length");
  if (sig.flavor == Flavor::Small) return sigma;
  IntVec key;
  for (int i : sig.s_complement()) key.push_back(sig.datum->restrict_weight(i, sigma));
  return key;
}

inline bool key_in_support(const ModuleSignature& sig, const IntVec& key) {
  if (sig.flavor == Flavor::Small) {
    return support_polytope(sig).contains(key);
  }
  const auto comp = sig.s_complement();
  if (key.size() != comp.size()) throw std::invalid_argument("key_in_support: bad key length");
  for (std::size_t t = 0; t < comp.size(); ++t) {
    const int i = comp[t];
    const int a_i = sig.alpha[static_cast<std::size_t>(i - 1)];
    if (a_i * key[t] < a_i * sig.mu[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

class ModuleVector {
 public:
  using EntryMap = std::map<IntVec, GTPoly>;

  explicit ModuleVector(ModuleSignature sig) : sig_(std::move(sig)) {}

  const ModuleSignature& sig() const { return sig_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  void add(const IntVec& key, const GTPoly& coeff) {
    if (coeff.is_zero()) return;
    if (!key_in_support(sig_, key))
      throw std::invalid_argument("ModuleVector: key outside support");
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      entries_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
  }

  ModuleVector& operator+=(const ModuleVector& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.entries_) add(k, c);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator*(ModuleVector v, const GTPoly& p) {
    EntryMap scaled;
    for (auto& [k, c] : v.entries_) {
      GTPoly prod = c * p;
      if (!prod.is_zero()) scaled.emplace(k, std::move(prod));
    }
    v.entries_ = std::move(scaled);
    return v;
  }

  bool operator==(const ModuleVector& o) const {
    return same_datum(sig_.datum, o.sig_.datum) && sig_.alpha == o.sig_.alpha &&
           sig_.s == o.sig_.s && sig_.mu == o.sig_.mu && sig_.flavor == o.sig_.flavor &&
           entries_ == o.entries_;
  }
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

 private:
  void check_compatible(const ModuleVector& o) const {
    if (!(same_datum(sig_.datum, o.sig_.datum) && sig_.alpha == o.sig_.alpha &&
          sig_.s == o.sig_.s && sig_.mu == o.sig_.mu && sig_.flavor == o.sig_.flavor))
      throw std::invalid_argument("ModuleVector: signature mismatch");
  }

  ModuleSignature sig_;
  EntryMap entries_;
};

// |sigma> when sigma lies in the support, the zero vector otherwise.
inline ModuleVector basis_vector(const ModuleSignature& sig, const IntVec& sigma) {
  ModuleVector v(sig);
  const IntVec key = weight_key(sig, sigma);
  if (key_in_support(sig, key)) v.add(key, GTPoly::constant(sig.datum->n(), 1));
  return v;
}

// Gelfand-Tsetlin eigenvalue of x_i on |sigma>.
inline GTPoly gt_eigenvalue(const ModuleSignature& sig, const IntVec& sigma, int i) {
  const int n = sig.datum->n();
  if (i < 1 || i > n) throw std::out_of_range("gt_eigenvalue: index out of range");
  if (!key_in_support(sig, weight_key(sig, sigma)))
    throw std::invalid_argument("gt_eigenvalue: sigma outside support");
  if (sig.flavor == Flavor::Big && sig.in_s(i)) return GTPoly::x(n, i);
  const Int si = sig.datum->restrict_weight(i, sigma);
  const int a_i = sig.alpha[static_cast<std::size_t>(i - 1)];
  GTPoly value = GTPoly::hbar(n) *
                 (make_rational(si - sig.mu[static_cast<std::size_t>(i - 1)]) + make_rational(a_i, 2));
  if (sig.flavor == Flavor::Small && sig.in_s(i)) value += GTPoly::y(n, i);
  return value;
}

namespace detail {

// Restricted values of the target weight needed to evaluate an action
// coefficient: all of them for Small, the constrained ones for Big.
inline std::map<int, Int> target_restriction(const ModuleSignature& sig, const IntVec& source_key,
                                             const IntVec& lambda) {
  std::map<int, Int> out;
  if (sig.flavor == Flavor::Small) {
    IntVec target(source_key.size());
    for (std::size_t j = 0; j < source_key.size(); ++j) target[j] = source_key[j] + lambda[j];
    for (int i = 1; i <= sig.datum->n(); ++i) out[i] = sig.datum->restrict_weight(i, target);
    return out;
  }
  const auto comp = sig.s_complement();
  for (std::size_t t = 0; t < comp.size(); ++t)
    out[comp[t]] = source_key[t] + sig.datum->restrict_weight(comp[t], lambda);
  return out;
}

inline IntVec shifted_key(const ModuleSignature& sig, const IntVec& key, const IntVec& lambda) {
  if (sig.flavor == Flavor::Small) {
    IntVec out(key.size());
    for (std::size_t j = 0; j < key.size(); ++j) out[j] = key[j] + lambda[j];
    return out;
  }
  const auto comp = sig.s_complement();
  IntVec out(key.size());
  for (std::size_t t = 0; t < comp.size(); ++t)
    out[t] = key[t] + sig.datum->restrict_weight(comp[t], lambda);
  return out;
}

}  // namespace detail

// Action of p(x) r^lambda on |sigma>: the monopole factor contributes the
// bracket product over {i : alpha_i lambda_i < 0} and everything is evaluated
// at the target weight sigma + lambda.  Targets outside the support are
// dropped; their coefficients vanish identically (wall-crossing).  Big-flavour
// coefficients live in R_S = C[h][x_i | i in S], and passing r^lambda through
// them shifts x_i by -lambda_i h; Small-flavour coefficients are central.
inline ModuleVector act(const AlgebraElement& a, const ModuleVector& v) {
  const ModuleSignature& sig = v.sig();
  if (!same_datum(a.datum(), sig.datum)) throw std::invalid_argument("act: datum mismatch");
  const TorusDatum& datum = *sig.datum;
  const int n = datum.n();
  ModuleVector out(sig);
  for (const auto& [lambda, p] : a.terms()) {
    GTPoly factor = p;
    for (int i = 1; i <= n; ++i) {
      const Int li = datum.restrict_weight(i, lambda);
      if (sig.alpha[static_cast<std::size_t>(i - 1)] * li < 0) factor = factor * bracket(n, i, li);
    }
    IntVec minus_lambda(static_cast<std::size_t>(n));
    if (sig.flavor == Flavor::Big) {
      const IntVec restricted = datum.restrict_all(lambda);
      for (int i = 0; i < n; ++i)
        minus_lambda[static_cast<std::size_t>(i)] = -restricted[static_cast<std::size_t>(i)];
    }
    for (const auto& [key, coeff] : v.entries()) {
      const IntVec target = detail::shifted_key(sig, key, lambda);
      if (!key_in_support(sig, target)) continue;
      const GTPoly evaluated =
          detail::eval_at_restricted(factor, sig, detail::target_restriction(sig, key, lambda));
      if (evaluated.is_zero()) continue;
      const GTPoly carried =
          sig.flavor == Flavor::Big ? shift_substitute(coeff, minus_lambda) : coeff;
      out.add(target, carried * evaluated);
    }
  }
  return out;
}

inline bool is_category_O(const ModuleSignature& sig, const IntVec& chi) {
  return is_bounded_above(support_polytope(sig), chi);
}

enum class BoundaryLabel { Neumann, GenericDirichlet, ExceptionalDirichlet, Other };
enum class VermaStatus { Verma, CoVerma, Neither, NotApplicable };

inline std::string to_string(BoundaryLabel l) {
  switch (l) {
    case BoundaryLabel::Neumann: return "Neumann";
    case BoundaryLabel::GenericDirichlet: return "GenericDirichlet";
    case BoundaryLabel::ExceptionalDirichlet: return "ExceptionalDirichlet";
    default: return "Other";
  }
}

inline std::string to_string(VermaStatus s) {
  switch (s) {
    case VermaStatus::Verma: return "Verma";
    case VermaStatus::CoVerma: return "CoVerma";
    case VermaStatus::Neither: return "Neither";
    default: return "NotApplicable";
  }
}

struct ClassificationResult {
  BoundaryLabel label = BoundaryLabel::Other;
  bool in_category_o = false;
  VermaStatus verma_status = VermaStatus::NotApplicable;
  std::optional<IntVec> sigma_max;
};

inline ClassificationResult classify(const ModuleSignature& sig, const IntVec& chi) {
  const int n = sig.datum->n();
  const int k = sig.datum->k();
  ClassificationResult res;
  res.in_category_o = is_category_O(sig, chi);
  if (static_cast<int>(sig.s.size()) == n) {
    res.label = BoundaryLabel::Neumann;
    return res;
  }
  if (sig.s.empty()) {
    res.label = BoundaryLabel::GenericDirichlet;
    return res;
  }
  const auto comp = sig.s_complement();
  bool exceptional = static_cast<int>(comp.size()) == k;
  if (exceptional) {
    std::vector<IntVec> rows;
    for (int i : comp) rows.push_back(sig.datum->row(i));
    const Int d = int_det(rows);
    exceptional = (d == 1 || d == -1);
  }
  if (!exceptional) {
    res.label = BoundaryLabel::Other;
    return res;
  }
  res.label = BoundaryLabel::ExceptionalDirichlet;
  const IntVec apex = sigma_max(sig);
  res.sigma_max = apex;
  if (!res.in_category_o) return res;
  // Verma iff alpha_i x_i(sigma_max) < 0 for all i in S, co-Verma iff > 0,
  // with x_i(sigma) = sigma_i - mu_i + alpha_i/2 (never zero).
  bool all_neg = true, all_pos = true;
  for (int i : sig.s) {
    const Int si = sig.datum->restrict_weight(i, apex);
    const int a_i = sig.alpha[static_cast<std::size_t>(i - 1)];
    const Rational xi = make_rational(si - sig.mu[static_cast<std::size_t>(i - 1)]) + make_rational(a_i, 2);
    const Rational t = Rational(a_i) * xi;
    if (t >= 0) all_neg = false;
    if (t <= 0) all_pos = false;
  }
  res.verma_status = all_neg ? VermaStatus::Verma : (all_pos ? VermaStatus::CoVerma : VermaStatus::Neither);
  return res;
}

namespace detail {

// Highest-weight data for any S whose complementary weights form a basis,
// independent of the Neumann/generic/exceptional labelling.
inline std::vector<std::pair<int, GTPoly>> highest_weight_rows(const ModuleSignature& sig,
                                                               const IntVec& chi, Int check_box) {
  const IntVec apex = sigma_max(sig);
  std::vector<std::pair<int, GTPoly>> rows;
  for (int i = 1; i <= sig.datum->n(); ++i) rows.emplace_back(i, gt_eigenvalue(sig, apex, i));
  // The apex must be annihilated by every positive monopole in the box.
  const int k = sig.datum->k();
  const ModuleVector top = basis_vector(sig, apex);
  IntVec lambda(static_cast<std::size_t>(k), -check_box);
  while (true) {
    if (dot(chi, lambda) > 0) {
      if (!act(monopole(sig.datum, lambda), top).is_zero())
        throw std::logic_error("highest_weight_table: apex is not annihilated by A_+");
    }
    int pos = k - 1;
    while (pos >= 0 && lambda[static_cast<std::size_t>(pos)] == check_box) {
      lambda[static_cast<std::size_t>(pos)] = -check_box;
      --pos;
    }
    if (pos < 0) break;
    ++lambda[static_cast<std::size_t>(pos)];
  }
  return rows;
}

}  // namespace detail

// Requires the complementary weights {xbar_i : i notin S} to form a lattice
// basis (so sigma_max exists; this includes the generic Dirichlet of datums
// with trivial flavour torus) and the module to lie in category O.
inline std::vector<std::pair<int, GTPoly>> highest_weight_table(const ModuleSignature& sig,
                                                                const IntVec& chi,
                                                                Int check_box = 3) {
  const auto comp = sig.s_complement();
  bool basis = static_cast<int>(comp.size()) == sig.datum->k();
  if (basis) {
    std::vector<IntVec> rows;
    for (int i : comp) rows.push_back(sig.datum->row(i));
    const Int d = int_det(rows);
    basis = (d == 1 || d == -1);
  }
  if (!basis || !is_category_O(sig, chi))
    throw std::invalid_argument(
        "highest_weight_table: need a basis complement and a category-O module");
  return detail::highest_weight_rows(sig, chi, check_box);
}

// ---------------------------------------------------------------------------
// Characters.
// ---------------------------------------------------------------------------

namespace detail {

// Lattice points of the closure of `rows` (which must be bounded), filtered by
// integral support membership.
inline std::vector<IntVec> bounded_region_lattice_points(const SupportPolytope& poly,
                                                         const std::vector<RationalConstraint>& rows) {
  const int k = poly.dim();
  IntVec lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> obj(static_cast<std::size_t>(k), Rational(0));
    obj[static_cast<std::size_t>(j)] = 1;
    auto mx = rational_maximize(rows, static_cast<std::size_t>(k), obj);
    if (!mx.feasible) return {};
    if (!mx.bounded) throw std::logic_error("lattice enumeration: region is unbounded");
    hi[static_cast<std::size_t>(j)] = floor_int(mx.value);
    for (auto& q : obj) q = -q;
    mx = rational_maximize(rows, static_cast<std::size_t>(k), obj);
    if (!mx.bounded) throw std::logic_error("lattice enumeration: region is unbounded");
    lo[static_cast<std::size_t>(j)] = -floor_int(mx.value);
    if (lo[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)]) return {};
  }
  std::vector<IntVec> out;
  if (k == 0) {
    IntVec empty;
    if (poly.contains(empty)) out.push_back(empty);
    return out;
  }
  IntVec sigma = lo;
  while (true) {
    bool ok = poly.contains(sigma);
    if (ok) {
      for (const auto& r : rows) {
        Rational lhs = 0;
        for (int j = 0; j < k; ++j)
          lhs += r.a[static_cast<std::size_t>(j)] * static_cast<long>(sigma[static_cast<std::size_t>(j)]);
        if (lhs < r.c) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(sigma);
    int pos = k - 1;
    while (pos >= 0 && sigma[static_cast<std::size_t>(pos)] == hi[static_cast<std::size_t>(pos)]) {
      sigma[static_cast<std::size_t>(pos)] = lo[static_cast<std::size_t>(pos)];
      --pos;
    }
    if (pos < 0) break;
    ++sigma[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace detail

// Weight-space ranks by chi-degree below the top of the support: entry d is
// the number of support lattice points sigma with <chi, top> - <chi, sigma> = d.
inline std::vector<std::pair<Int, Int>> character_series(const ModuleSignature& sig,
                                                         const IntVec& chi, Int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("character_series: negative degree bound");
  const SupportPolytope poly = support_polytope(sig);
  const int k = poly.dim();
  if (static_cast<int>(chi.size()) != k)
    throw std::invalid_argument("character_series: chi has wrong length");
  if (!is_bounded_above(poly, chi))
    throw std::domain_error("character_series: support is unbounded above for chi");
  if (!has_finite_chi_levels(poly, chi))
    throw std::domain_error("character_series: weight spaces are infinite for chi");

  std::vector<std::pair<Int, Int>> series;
  for (Int d = 0; d <= max_degree; ++d) series.emplace_back(d, 0);

  auto rows = poly.closure_rows();
  std::vector<Rational> obj(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) obj[static_cast<std::size_t>(j)] = Rational(static_cast<long>(chi[static_cast<std::size_t>(j)]));
  const auto mx = rational_maximize(rows, static_cast<std::size_t>(k), obj);
  if (!mx.feasible) return series;  // empty support: the zero module
  if (!mx.bounded) throw std::domain_error("character_series: support is unbounded above for chi");

  // Find the top occupied chi-level by scanning truncations downward, then
  // count everything within max_degree of it.  When chi is also bounded below
  // on the support, emptiness is decided exactly.
  const Int real_top = floor_int(mx.value);
  std::vector<Rational> neg_obj = obj;
  for (auto& q : neg_obj) q = -q;
  const auto mn = rational_maximize(rows, static_cast<std::size_t>(k), neg_obj);
  constexpr Int kScanDepth = 4096;
  Int cut = real_top - max_degree;
  std::vector<IntVec> pts;
  for (Int attempt = 0;; ++attempt) {
    auto trows = rows;
    RationalConstraint cutrow;
    cutrow.a = obj;
    cutrow.c = Rational(static_cast<long>(cut));
    trows.push_back(std::move(cutrow));
    pts = detail::bounded_region_lattice_points(poly, trows);
    if (!pts.empty()) break;
    if (mn.bounded && Rational(static_cast<long>(cut)) <= -mn.value)
      return series;  // the truncation already covered the whole support
    if ((real_top - cut) > kScanDepth)
      throw std::domain_error("character_series: no lattice point found within scan depth");
    cut -= max_degree + 1;
  }
  Int top = dot(chi, pts.front());
  for (const auto& s : pts) top = std::max(top, dot(chi, s));
  // Re-enumerate against the exact top so every degree 0..N is complete.
  {
    auto trows = rows;
    RationalConstraint cutrow;
    cutrow.a = obj;
    cutrow.c = Rational(static_cast<long>(top - max_degree));
    trows.push_back(std::move(cutrow));
    pts = detail::bounded_region_lattice_points(poly, trows);
  }
  for (const auto& s : pts) {
    const Int d = top - dot(chi, s);
    if (d >= 0 && d <= max_degree) ++series[static_cast<std::size_t>(d)].second;
  }
  return series;
}

// ---------------------------------------------------------------------------
// Simplicity probe: wall-crossing connectivity of the boxed support.
// ---------------------------------------------------------------------------

// Coefficient of r^lambda from sigma in the rank-one specialization (all
// module parameters y_i set to 0, h invertible): a product of wall-crossing
// integers.  Zero iff the move crosses some hyperplane of the arrangement.
inline bool unit_step_coefficient_nonzero(const ModuleSignature& sig, const IntVec& sigma,
                                          const IntVec& lambda) {
  const TorusDatum& datum = *sig.datum;
  for (int i = 1; i <= datum.n(); ++i) {
    const Int li = datum.restrict_weight(i, lambda);
    const int a_i = sig.alpha[static_cast<std::size_t>(i - 1)];
    if (a_i * li >= 0) continue;
    const Int si = datum.restrict_weight(i, sigma);
    const Int abs_li = li > 0 ? li : -li;
    for (Int j = 1; j <= abs_li; ++j)
      if (li + si + a_i * j - sig.mu[static_cast<std::size_t>(i - 1)] == 0) return false;
  }
  return true;
}

// Strong connectivity of the unit-step action graph on the boxed support.
inline bool simplicity_probe(const ModuleSignature& sig, Int box_radius) {
  const SupportPolytope poly = support_polytope(sig);
  const auto pts = enumerate_support(poly, box_radius);
  if (pts.size() <= 1) return true;
  const int k = sig.datum->k();
  std::map<IntVec, int> index;
  for (std::size_t t = 0; t < pts.size(); ++t) index[pts[t]] = static_cast<int>(t);
  std::vector<std::vector<int>> fwd(pts.size()), rev(pts.size());
  for (std::size_t t = 0; t < pts.size(); ++t) {
    for (int j = 0; j < k; ++j)
      for (int dir : {1, -1}) {
        IntVec lambda(static_cast<std::size_t>(k), 0);
        lambda[static_cast<std::size_t>(j)] = dir;
        IntVec target = pts[t];
        target[static_cast<std::size_t>(j)] += dir;
        auto it = index.find(target);
        if (it == index.end()) continue;
        if (!unit_step_coefficient_nonzero(sig, pts[t], lambda)) continue;
        fwd[t].push_back(it->second);
        rev[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(t));
      }
  }
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(pts.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          q.push(w);
        }
    }
    return count == pts.size();
  };
  return reaches_all(fwd) && reaches_all(rev);
}

// ---------------------------------------------------------------------------
// Fixed-point / highest-weight dictionary.
// ---------------------------------------------------------------------------

struct HikitaRow {
  std::set<int> s;
  IntVec sigma_max;
  std::vector<std::pair<int, GTPoly>> table;
};

// One row per exceptional subset whose module lies in category O for chi:
// the subset, its apex, and the Gelfand-Tsetlin eigenvalue table there.
inline std::vector<HikitaRow> hikita_fixed_point_table(const DatumPtr& datum,
                                                       const std::vector<int>& alpha,
                                                       const IntVec& mu, const IntVec& chi) {
  std::vector<HikitaRow> rows;
  for (const auto& s : exceptional_subsets(*datum)) {
    ModuleSignature sig(datum, alpha, s, mu, Flavor::Small);
    if (!is_category_O(sig, chi)) continue;
    HikitaRow row;
    row.s = s;
    row.sigma_max = sigma_max(sig);
    row.table = detail::highest_weight_rows(sig, chi, 2);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypertoric

#endif
