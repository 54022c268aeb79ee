#ifndef HYPERTORIC_QUIVER_HPP
#define HYPERTORIC_QUIVER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/rational.hpp"

namespace hypertoric {

// ---------------------------------------------------------------------------
// Torus fixed points of a Springer fibre: lattice points cut out by the
// weights of the chosen loop.
// ---------------------------------------------------------------------------

struct WeightSystem {
  int d = 0;                        // rank of the gauge maximal torus
  std::vector<IntVec> functionals;  // weights gamma_j of the loop's summands

  WeightSystem(int rank, std::vector<IntVec> gammas) : d(rank), functionals(std::move(gammas)) {
    if (d < 1) throw std::invalid_argument("WeightSystem: rank must be positive");
    if (functionals.empty()) throw std::invalid_argument("WeightSystem: no functionals");
    for (const auto& g : functionals)
      if (static_cast<int>(g.size()) != d)
        throw std::invalid_argument("WeightSystem: functional has wrong length");
  }
};

// All mu in the L-infinity box with <gamma_j, mu> <= 0 for every j, sorted
// lexicographically.
inline std::vector<IntVec> torus_fixed_points(const WeightSystem& ws, Int box_radius) {
  if (box_radius < 0) throw std::invalid_argument("torus_fixed_points: negative radius");
  std::vector<IntVec> out;
  IntVec mu(static_cast<std::size_t>(ws.d), -box_radius);
  while (true) {
    bool ok = true;
    for (const auto& g : ws.functionals)
      if (dot(g, mu) > 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(mu);
    int pos = ws.d - 1;
    while (pos >= 0 && mu[static_cast<std::size_t>(pos)] == box_radius) {
      mu[static_cast<std::size_t>(pos)] = -box_radius;
      --pos;
    }
    if (pos < 0) break;
    ++mu[static_cast<std::size_t>(pos)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// The type-A chain GL_1 x ... x GL_{n-1} with framing C^n at the end.  Torus
// coordinates are the concatenated rows mu^1, ..., mu^{n-1}; the loop of
// standard inclusions imposes mu^{i-1}_j <= mu^i_j together with the top-row
// cutoff mu^{n-1}_j <= 0.
// ---------------------------------------------------------------------------

inline int type_a_rank(int n) { return n * (n - 1) / 2; }

inline int type_a_position(int row, int col) {  // row >= 1, 1 <= col <= row
  return row * (row - 1) / 2 + (col - 1);
}

inline WeightSystem type_a_weight_system(int n) {
  if (n < 2) throw std::invalid_argument("type_a_weight_system: need n >= 2");
  const int d = type_a_rank(n);
  std::vector<IntVec> gammas;
  for (int i = 2; i <= n - 1; ++i)
    for (int j = 1; j <= i - 1; ++j) {
      IntVec g(static_cast<std::size_t>(d), 0);
      g[static_cast<std::size_t>(type_a_position(i - 1, j))] = 1;
      g[static_cast<std::size_t>(type_a_position(i, j))] = -1;
      gammas.push_back(std::move(g));
    }
  for (int j = 1; j <= n - 1; ++j) {
    IntVec g(static_cast<std::size_t>(d), 0);
    g[static_cast<std::size_t>(type_a_position(n - 1, j))] = 1;
    gammas.push_back(std::move(g));
  }
  return WeightSystem(d, std::move(gammas));
}

// Node degrees (-sum of each row) of a concatenated type-A coweight tuple.
inline IntVec type_a_node_degrees(int n, const IntVec& mu) {
  if (static_cast<int>(mu.size()) != type_a_rank(n))
    throw std::invalid_argument("type_a_node_degrees: wrong length");
  IntVec deg(static_cast<std::size_t>(n - 1), 0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      deg[static_cast<std::size_t>(i - 1)] -= mu[static_cast<std::size_t>(type_a_position(i, j))];
  return deg;
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin patterns.
// ---------------------------------------------------------------------------

struct GTPattern {
  std::vector<IntVec> rows;  // rows[i-1] = mu^i, length i; implicit top row is 0

  bool valid() const {
    const int m = static_cast<int>(rows.size());
    for (int i = 1; i <= m; ++i)
      if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != i) return false;
    for (int i = 2; i <= m; ++i)
      for (int j = 1; j <= i - 1; ++j)
        if (rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] >
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)])
          return false;
    if (m >= 1)
      for (Int v : rows[static_cast<std::size_t>(m - 1)])
        if (v > 0) return false;
    return true;
  }

  IntVec flattened() const {
    IntVec out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
  }
};

namespace detail {

// Vectors v (length caps.size()) with v_j <= caps_j <= 0 and sum(v) = target.
inline void nonpositive_rows(const IntVec& caps, Int target, std::size_t j, IntVec& acc,
                             std::vector<IntVec>& out) {
  if (j == caps.size()) {
    if (target == 0) out.push_back(acc);
    return;
  }
  Int rest_cap = 0;
  for (std::size_t t = j + 1; t < caps.size(); ++t) rest_cap += caps[t];
  // v_j <= caps_j and target - v_j <= rest_cap.
  const Int hi = caps[j];
  const Int lo = target - rest_cap;
  for (Int v = lo; v <= hi; ++v) {
    acc[j] = v;
    nonpositive_rows(caps, target - v, j + 1, acc, out);
  }
  acc[j] = 0;
}

}  // namespace detail

// All patterns with the column inequalities and per-node degrees
// -sum(mu^i) = degrees[i-1].
inline std::vector<GTPattern> gt_patterns(int n, const IntVec& degrees) {
  if (n < 2) throw std::invalid_argument("gt_patterns: need n >= 2");
  if (static_cast<int>(degrees.size()) != n - 1)
    throw std::invalid_argument("gt_patterns: degrees must have length n-1");
  for (Int d : degrees)
    if (d < 0) throw std::invalid_argument("gt_patterns: degrees must be non-negative");

  std::vector<GTPattern> out;
  std::vector<IntVec> rows(static_cast<std::size_t>(n - 1));
  // Fill from the top row (n-1, capped by zero) downwards.
  struct Rec {
    int n;
    const IntVec& degrees;
    std::vector<IntVec>& rows;
    std::vector<GTPattern>& out;
    void fill(int i) {
      if (i == 0) {
        GTPattern p;
        p.rows = rows;
        out.push_back(std::move(p));
        return;
      }
      IntVec caps(static_cast<std::size_t>(i), 0);
      if (i < n - 1)
        for (int j = 1; j <= i; ++j)
          caps[static_cast<std::size_t>(j - 1)] =
              std::min<Int>(0, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
      std::vector<IntVec> choices;
      IntVec acc(static_cast<std::size_t>(i), 0);
      detail::nonpositive_rows(caps, -degrees[static_cast<std::size_t>(i - 1)], 0, acc, choices);
      for (auto& c : choices) {
        rows[static_cast<std::size_t>(i - 1)] = c;
        fill(i - 1);
      }
    }
  } rec{n, degrees, rows, out};
  rec.fill(n - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Spaltenstein fixed-point counts and the sl_2 dictionary.
// ---------------------------------------------------------------------------

// Number of tuples 0 <= a_i <= mu_i with sum a_i = r.
inline Int spaltenstein_fixed_count(const IntVec& mu, Int r) {
  Int total = 0;
  for (Int m : mu) {
    if (m < 0) throw std::invalid_argument("spaltenstein_fixed_count: negative part");
    total += m;
  }
  if (r < 0 || r > total) throw std::invalid_argument("spaltenstein_fixed_count: r out of range");
  std::vector<Int> dp(static_cast<std::size_t>(r + 1), 0);
  dp[0] = 1;
  for (Int m : mu) {
    std::vector<Int> next(static_cast<std::size_t>(r + 1), 0);
    for (Int s = 0; s <= r; ++s) {
      if (dp[static_cast<std::size_t>(s)] == 0) continue;
      for (Int a = 0; a <= m && s + a <= r; ++a)
        next[static_cast<std::size_t>(s + a)] += dp[static_cast<std::size_t>(s)];
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(r)];
}

struct TensorFactors {
  Int dimension = 1;
  std::vector<std::string> factors;  // "V(mu_i)"
};

inline TensorFactors predicted_dimension(const IntVec& mu) {
  TensorFactors out;
  for (Int m : mu) {
    if (m < 0) throw std::invalid_argument("predicted_dimension: negative part");
    out.dimension *= (m + 1);
    out.factors.push_back("V(" + std::to_string(m) + ")");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate rational polynomials (for Drinfeld polynomials).
// ---------------------------------------------------------------------------

class UPolyQ {
 public:
  UPolyQ() : coeffs_{} {}
  explicit UPolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UPolyQ constant(const Rational& c) { return UPolyQ({c}); }
  static UPolyQ linear(const Rational& c0, const Rational& c1) { return UPolyQ({c0, c1}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  friend UPolyQ operator+(const UPolyQ& a, const UPolyQ& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UPolyQ(std::move(c));
  }
  friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return UPolyQ();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPolyQ(std::move(c));
  }
  bool operator==(const UPolyQ& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UPolyQ& o) const { return !(*this == o); }

  Rational eval(const Rational& u) const {
    Rational v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * u + coeffs_[i];
    return v;
  }

  // P(u + c).
  UPolyQ shift_argument(const Rational& c) const {
    UPolyQ out;
    UPolyQ base = UPolyQ::constant(1);
    const UPolyQ u_plus_c = UPolyQ::linear(c, 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out = out + base * UPolyQ::constant(coeffs_[i]);
      base = base * u_plus_c;
    }
    return out;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = c;
      if (first) {
        if (c < 0) {
          os << "-";
          mag = -c;
        }
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) mag = -c;
      }
      if (i == 0) {
        os << hypertoric::to_string(mag);
      } else {
        if (mag != 1) os << hypertoric::to_string(mag) << " * ";
        os << "u";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// Arithmetic progression {start, start+1, ..., start+length-1}; empty when
// length is zero.
struct RootString {
  Rational start;
  Int length = 0;
};

struct RootStringSet {
  std::vector<RootString> strings;
};

struct DrinfeldData {
  UPolyQ polynomial;
  RootStringSet strings;
};

// P(u) = prod_i (u - r_i - 1)(u - r_i - 2) ... (u - r_i - mu_i) together with
// its root strings S_i = {r_i + 1, ..., r_i + mu_i}.
inline DrinfeldData drinfeld_polynomial(const std::vector<Rational>& roots, const IntVec& mu) {
  if (roots.size() != mu.size())
    throw std::invalid_argument("drinfeld_polynomial: length mismatch");
  DrinfeldData out;
  out.polynomial = UPolyQ::constant(1);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("drinfeld_polynomial: negative weight");
    for (Int j = 1; j <= mu[i]; ++j)
      out.polynomial = out.polynomial * UPolyQ::linear(-(roots[i] + make_rational(j)), 1);
    out.strings.strings.push_back(RootString{roots[i] + 1, mu[i]});
  }
  return out;
}

// General position: any two meeting strings are nested.
inline bool general_position(const RootStringSet& set) {
  const auto& ss = set.strings;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      const RootString& a = ss[i];
      const RootString& b = ss[j];
      if (a.length == 0 || b.length == 0) continue;
      if (!is_integer(a.start - b.start)) continue;  // different cosets never meet
      const Rational a_end = a.start + make_rational(a.length - 1);
      const Rational b_end = b.start + make_rational(b.length - 1);
      const bool meet = !(a_end < b.start || b_end < a.start);
      if (!meet) continue;
      const bool a_in_b = b.start <= a.start && a_end <= b_end;
      const bool b_in_a = a.start <= b.start && b_end <= a_end;
      if (!a_in_b && !b_in_a) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force invariant subspaces over small finite fields.
// ---------------------------------------------------------------------------

// GF(q) for prime powers q <= 9, with dense add/mul tables.
class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    int p = 0, e = 0;
    for (int prime : {2, 3, 5, 7}) {
      int power = prime, exp = 1;
      while (power <= 9) {
        if (power == q) {
          p = prime;
          e = exp;
        }
        power *= prime;
        ++exp;
      }
    }
    if (p == 0) throw std::invalid_argument("GaloisField: q must be a prime power <= 9");
    p_ = p;
    e_ = e;
    // Modulus coefficients for the non-prime cases (monic, degree e).
    std::vector<int> modulus;
    if (q == 4) modulus = {1, 1};       // x^2 + x + 1
    else if (q == 8) modulus = {1, 1, 0};  // x^3 + x + 1
    else if (q == 9) modulus = {1, 0};     // x^2 + 1
    add_.assign(static_cast<std::size_t>(q * q), 0);
    mul_.assign(static_cast<std::size_t>(q * q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[static_cast<std::size_t>(a * q + b)] = static_cast<std::uint8_t>(add_raw(a, b));
        mul_[static_cast<std::size_t>(a * q + b)] = static_cast<std::uint8_t>(mul_raw(a, b, modulus));
      }
    neg_.assign(static_cast<std::size_t>(q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    inv_.assign(static_cast<std::size_t>(q), 0);
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  }

  int q() const { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(e_), 0);
    for (int i = 0; i < e_; ++i) {
      d[static_cast<std::size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  }
  int undigits(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
    return a;
  }
  int add_raw(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < e_; ++i)
      da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
    return undigits(da);
  }
  int mul_raw(int a, int b, const std::vector<int>& modulus) const {
    auto da = digits(a), db = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
    // reduce modulo x^e + modulus
    for (int i = 2 * e_ - 2; i >= e_; --i) {
      const int c = prod[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      prod[static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < e_; ++j)
        prod[static_cast<std::size_t>(i - e_ + j)] =
            ((prod[static_cast<std::size_t>(i - e_ + j)] - c * modulus[static_cast<std::size_t>(j)]) % p_ + p_) % p_;
    }
    prod.resize(static_cast<std::size_t>(e_));
    return undigits(prod);
  }

  int q_, p_ = 0, e_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

// Brute-force count of X-invariant subspaces of codimension r in F_q^m, where
// X is nilpotent of Jordan type mu.  Subspaces are enumerated through reduced
// row-echelon representatives.
inline Int invariant_subspace_count(int q, const IntVec& mu, Int r) {
  Int m = 0;
  for (Int part : mu) {
    if (part < 0) throw std::invalid_argument("invariant_subspace_count: negative part");
    m += part;
  }
  if (m > 6) throw std::invalid_argument("invariant_subspace_count: sum of mu exceeds desk scale (6)");
  if (r < 0 || r > m) throw std::invalid_argument("invariant_subspace_count: r out of range");
  const GaloisField gf(q);
  const int dim = static_cast<int>(m - r);
  if (dim == 0 || dim == static_cast<int>(m)) return 1;  // zero space / whole space

  // X in the Jordan basis: position t maps to t-1 within its block.
  std::vector<int> x_image(static_cast<std::size_t>(m), -1);
  {
    int base = 0;
    for (Int part : mu) {
      for (Int j = 1; j < part; ++j) x_image[static_cast<std::size_t>(base + j)] = base + static_cast<int>(j) - 1;
      base += static_cast<int>(part);
    }
  }

  const int mm = static_cast<int>(m);
  std::vector<int> pivots(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) pivots[static_cast<std::size_t>(i)] = i;
  Int count = 0;

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(mm), 0));
  std::vector<std::pair<int, int>> free_slots;  // (row, col)

  auto invariant = [&]() {
    std::vector<int> v(static_cast<std::size_t>(mm));
    for (int t = 0; t < dim; ++t) {
      for (int c = 0; c < mm; ++c) v[static_cast<std::size_t>(c)] = 0;
      for (int c = 0; c < mm; ++c) {
        const int img = x_image[static_cast<std::size_t>(c)];
        if (img >= 0) v[static_cast<std::size_t>(img)] = rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
      }
      for (int s = 0; s < dim; ++s) {
        const int c = v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(s)])];
        if (c == 0) continue;
        const int nc = gf.neg(c);
        for (int col = 0; col < mm; ++col)
          v[static_cast<std::size_t>(col)] =
              gf.add(v[static_cast<std::size_t>(col)],
                     gf.mul(nc, rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(col)]));
      }
      for (int col = 0; col < mm; ++col)
        if (v[static_cast<std::size_t>(col)] != 0) return false;
    }
    return true;
  };

  while (true) {
    // Echelon shape for this pivot choice.
    free_slots.clear();
    for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
    for (int i = 0; i < dim; ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
      for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < mm; ++c) {
        bool is_pivot = false;
        for (int s = 0; s < dim; ++s)
          if (pivots[static_cast<std::size_t>(s)] == c) is_pivot = true;
        if (!is_pivot) free_slots.emplace_back(i, c);
      }
    }
    std::vector<int> values(free_slots.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free_slots.size(); ++t)
        rows[static_cast<std::size_t>(free_slots[t].first)][static_cast<std::size_t>(free_slots[t].second)] = values[t];
      if (invariant()) ++count;
      std::size_t pos = free_slots.size();
      while (pos > 0 && values[pos - 1] == q - 1) values[--pos] = 0;
      if (pos == 0) break;
      ++values[pos - 1];
    }

    // Next pivot combination.
    int pos = dim - 1;
    while (pos >= 0 && pivots[static_cast<std::size_t>(pos)] == mm - dim + pos) --pos;
    if (pos < 0) break;
    ++pivots[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < dim; ++j)
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Integer polynomial interpolation utilities.
// ---------------------------------------------------------------------------

// True iff some integer-coefficient polynomial passes through all points:
// equivalent to (x_i - x_j) | (y_i - y_j) for all pairs.
inline bool integer_polynomial_consistent(const std::vector<std::pair<Int, Int>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Int dx = points[i].first - points[j].first;
      const Int dy = points[i].second - points[j].second;
      if (dx == 0) {
        if (dy != 0) return false;
        continue;
      }
      if (dy % dx != 0) return false;
    }
  return true;
}

// Unique interpolating polynomial through the points (Newton form, exact).
inline UPolyQ lagrange_fit(const std::vector<std::pair<Int, Int>>& points) {
  if (points.empty()) return UPolyQ();
  const std::size_t n = points.size();
  std::vector<Rational> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = make_rational(points[i].second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) /
                make_rational(points[i].first - points[i - level].first);
      if (i == level) break;
    }
  UPolyQ fit = UPolyQ::constant(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    fit = fit * UPolyQ::linear(-make_rational(points[i].first), 1) + UPolyQ::constant(coef[i]);
  }
  return fit;
}

}  // namespace hypertoric

#endif
