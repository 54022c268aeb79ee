#ifndef HYPERTORIC_POLYNOMIAL_HPP
#define HYPERTORIC_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/lattice.hpp"
#include "hypertoric/rational.hpp"

namespace hypertoric {

// Exact sparse polynomials over Q in the loop parameter h, the equivariant
// weights x_1..x_n and the module parameters y_1..y_n.  Exponent vectors are
// laid out as [h, x_1..x_n, y_1..y_n]; terms are kept in the canonical order
// (total degree, then lexicographic on the exponent vector) so equality and
// printing are structural.

using Mono = std::vector<int>;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

class GTPoly {
 public:
  using TermMap = std::map<Mono, Rational, MonoLess>;

  GTPoly() : n_(0) {}
  explicit GTPoly(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("GTPoly: negative n");
  }

  static GTPoly constant(int n, const Rational& c) {
    GTPoly p(n);
    if (c != 0) p.terms_[Mono(static_cast<std::size_t>(2 * n + 1), 0)] = c;
    return p;
  }
  static GTPoly hbar(int n) { return monomial_var(n, 0); }
  static GTPoly x(int n, int i) {
    check_index(n, i);
    return monomial_var(n, i);
  }
  static GTPoly y(int n, int i) {
    check_index(n, i);
    return monomial_var(n, n + i);
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool uses_y() const {
    for (const auto& [m, c] : terms_)
      for (int i = n_ + 1; i <= 2 * n_; ++i)
        if (m[static_cast<std::size_t>(i)] != 0) return true;
    return false;
  }

  bool uses_var(int var) const {
    for (const auto& [m, c] : terms_)
      if (m[static_cast<std::size_t>(var)] != 0) return true;
    return false;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (int e : m) t += e;
      if (t > d) d = t;
    }
    return d;
  }

  GTPoly& operator+=(const GTPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GTPoly& operator-=(const GTPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  GTPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend GTPoly operator+(GTPoly a, const GTPoly& b) { return a += b; }
  friend GTPoly operator-(GTPoly a, const GTPoly& b) { return a -= b; }
  friend GTPoly operator-(GTPoly a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
  }
  friend GTPoly operator*(const GTPoly& a, const GTPoly& b) {
    a.check_same(b);
    GTPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend GTPoly operator*(GTPoly a, const Rational& c) { return a *= c; }
  friend GTPoly operator*(const Rational& c, GTPoly a) { return a *= c; }

  bool operator==(const GTPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const GTPoly& o) const { return !(*this == o); }

  GTPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("GTPoly::pow: negative exponent");
    GTPoly out = constant(n_, 1);
    for (int i = 0; i < e; ++i) out = out * (*this);
    return out;
  }

  // Simultaneous substitution var -> polynomial; untouched variables persist.
  GTPoly substitute(const std::map<int, GTPoly>& repl) const {
    GTPoly out(n_);
    for (const auto& [m, c] : terms_) {
      GTPoly term = constant(n_, c);
      Mono rest(m.size(), 0);
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        auto it = repl.find(static_cast<int>(v));
        if (it == repl.end())
          rest[v] = m[v];
        else
          term = term * it->second.pow(m[v]);
      }
      GTPoly shell(n_);
      shell.terms_[rest] = 1;
      out += term * shell;
    }
    return out;
  }

  std::string to_string() const;

 private:
  static void check_index(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("GTPoly: variable index out of range");
  }
  static GTPoly monomial_var(int n, int var) {
    GTPoly p(n);
    Mono m(static_cast<std::size_t>(2 * n + 1), 0);
    m[static_cast<std::size_t>(var)] = 1;
    p.terms_[m] = 1;
    return p;
  }
  void check_same(const GTPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("GTPoly: mixing polynomials over different datums");
  }
  void add_term(const Mono& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  int n_;
  TermMap terms_;
};

inline std::string variable_name(int n, int var) {
  if (var == 0) return "h";
  if (var <= n) return "x" + std::to_string(var);
  return "y" + std::to_string(var - n);
}

inline std::string GTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    os << hypertoric::to_string(mag);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      os << " * " << variable_name(n_, static_cast<int>(v));
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

// x_i -> x_i + delta_i * h for every i; the inverse shift is -delta.
inline GTPoly shift_substitute(const GTPoly& p, const IntVec& delta) {
  if (static_cast<int>(delta.size()) != p.n())
    throw std::invalid_argument("shift_substitute: delta must have length n");
  if (p.uses_y()) throw std::invalid_argument("shift_substitute: not a GT element");
  std::map<int, GTPoly> repl;
  for (int i = 1; i <= p.n(); ++i) {
    if (delta[static_cast<std::size_t>(i - 1)] == 0) continue;
    repl[i] = GTPoly::x(p.n(), i) +
              GTPoly::hbar(p.n()) * make_rational(delta[static_cast<std::size_t>(i - 1)]);
  }
  return p.substitute(repl);
}

// Shifted factorial [x_i]^m: product of (x_i - (j - 1/2) h) for j = 1..m when
// m >= 0, and of (x_i + (j - 1/2) h) for j = 1..|m| when m < 0.
inline GTPoly bracket(int n, int i, Int m) {
  if (i < 1 || i > n) throw std::out_of_range("bracket: index out of range");
  GTPoly out = GTPoly::constant(n, 1);
  const GTPoly xi = GTPoly::x(n, i);
  const GTPoly h = GTPoly::hbar(n);
  const Int count = m >= 0 ? m : -m;
  for (Int j = 1; j <= count; ++j) {
    Rational offset = make_rational(2 * j - 1, 2);  // j - 1/2
    if (m >= 0)
      out = out * (xi - h * offset);
    else
      out = out * (xi + h * offset);
  }
  return out;
}

namespace detail {

// Substitution map sending x_i to its Gelfand-Tsetlin eigenvalue at the given
// restricted weight values.  Only indices present in sigma_restricted are
// substituted; Big flavour keeps x_i (i in S) as coefficients.
inline std::map<int, GTPoly> weight_substitution(const ModuleSignature& sig,
                                                 const std::map<int, Int>& sigma_restricted) {
  const int n = sig.datum->n();
  std::map<int, GTPoly> repl;
  for (const auto& [i, si] : sigma_restricted) {
    const int a_i = sig.alpha[static_cast<std::size_t>(i - 1)];
    Rational scalar = make_rational(si - sig.mu[static_cast<std::size_t>(i - 1)]) + make_rational(a_i, 2);
    GTPoly value = GTPoly::hbar(n) * scalar;
    if (sig.flavor == Flavor::Small && sig.in_s(i)) value += GTPoly::y(n, i);
    repl[i] = std::move(value);
  }
  return repl;
}

inline GTPoly eval_at_restricted(const GTPoly& p, const ModuleSignature& sig,
                                 const std::map<int, Int>& sigma_restricted) {
  if (p.uses_y()) throw std::invalid_argument("eval_at_weight: not a GT element");
  return p.substitute(weight_substitution(sig, sigma_restricted));
}

}  // namespace detail

// Gelfand-Tsetlin evaluation at a weight sigma in Z^k:
//   x_i -> y_i [i in S] + (sigma_i - mu_i + alpha_i/2) h        (Small)
//   x_i -> (sigma_i - mu_i + alpha_i/2) h for i not in S only   (Big)
inline GTPoly eval_at_weight(const GTPoly& p, const ModuleSignature& sig, const IntVec& sigma) {
  if (p.n() != sig.datum->n()) throw std::invalid_argument("eval_at_weight: datum mismatch");
  std::map<int, Int> restricted;
  for (int i = 1; i <= sig.datum->n(); ++i) {
    if (sig.flavor == Flavor::Big && sig.in_s(i)) continue;
    restricted[i] = sig.datum->restrict_weight(i, sigma);
  }
  return detail::eval_at_restricted(p, sig, restricted);
}

}  // namespace hypertoric

#endif
