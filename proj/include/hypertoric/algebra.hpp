#ifndef HYPERTORIC_ALGEBRA_HPP
#define HYPERTORIC_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/lattice.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/rational.hpp"

namespace hypertoric {

// Elements of the hypertoric enveloping algebra in normal form: a finite sum
// of p_lambda(h, x) r^lambda with the Gelfand-Tsetlin coefficient on the left
// of the monopole operator.

class AlgebraElement {
 public:
  using TermMap = std::map<IntVec, GTPoly>;

  explicit AlgebraElement(DatumPtr datum) : datum_(std::move(datum)) {
    if (!datum_) throw std::invalid_argument("AlgebraElement: null datum");
  }

  static AlgebraElement zero(DatumPtr datum) { return AlgebraElement(std::move(datum)); }

  static AlgebraElement monomial(DatumPtr datum, const IntVec& lambda, GTPoly coeff) {
    AlgebraElement e(std::move(datum));
    e.check_weight(lambda);
    if (coeff.n() != e.datum_->n())
      throw std::invalid_argument("AlgebraElement: coefficient over wrong datum");
    if (coeff.uses_y())
      throw std::invalid_argument("AlgebraElement: coefficients must use only h and x variables");
    if (!coeff.is_zero()) e.terms_[lambda] = std::move(coeff);
    return e;
  }

  static AlgebraElement gt(DatumPtr datum, GTPoly coeff) {
    const int k = datum->k();
    return monomial(std::move(datum), IntVec(static_cast<std::size_t>(k), 0), std::move(coeff));
  }

  const DatumPtr& datum() const { return datum_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_datum(o);
    for (const auto& [l, p] : o.terms_) add_term(l, p);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_datum(o);
    for (const auto& [l, p] : o.terms_) add_term(l, -p);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) {
    if (c == 0) {
      a.terms_.clear();
      return a;
    }
    for (auto& [l, p] : a.terms_) p *= c;
    return a;
  }

  bool operator==(const AlgebraElement& o) const {
    return same_datum(datum_, o.datum_) && terms_ == o.terms_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  void add_term(const IntVec& lambda, const GTPoly& p) {
    check_weight(lambda);
    if (p.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
      terms_.emplace(lambda, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, p] : terms_) {
      std::string c = p.terms().size() == 1 ? p.to_string() : "(" + p.to_string() + ")";
      if (first) {
        os << c;
        first = false;
      } else if (!c.empty() && c[0] == '-') {
        os << " - " << c.substr(1);
      } else {
        os << " + " << c;
      }
      os << " * r[";
      for (std::size_t j = 0; j < l.size(); ++j) os << (j ? "," : "") << l[j];
      os << "]";
    }
    return os.str();
  }

 private:
  void check_weight(const IntVec& lambda) const {
    if (static_cast<int>(lambda.size()) != datum_->k())
      throw std::invalid_argument("AlgebraElement: monopole weight has wrong length");
  }
  void check_datum(const AlgebraElement& o) const {
    if (!same_datum(datum_, o.datum_)) throw std::invalid_argument("AlgebraElement: datum mismatch");
  }

  DatumPtr datum_;
  TermMap terms_;
};

inline AlgebraElement monopole(DatumPtr datum, const IntVec& lambda) {
  GTPoly one = GTPoly::constant(datum->n(), 1);
  return AlgebraElement::monomial(std::move(datum), lambda, std::move(one));
}

inline AlgebraElement identity(DatumPtr datum) {
  const int k = datum->k();
  return monopole(std::move(datum), IntVec(static_cast<std::size_t>(k), 0));
}

namespace detail {

// Structure constant of r^sigma r^lambda in left normal form.  The defining
// relation reads
//   r^sigma r^lambda = A r^{sigma+lambda} B,
//   A = prod_{lambda_i sigma_i < 0, |lambda_i| >= |sigma_i|} [x_i]^{sigma_i},
//   B = prod_{lambda_i sigma_i < 0, |sigma_i| > |lambda_i|} [x_i]^{-lambda_i},
// and commuting B leftward through r^{sigma+lambda} shifts every x_i by
// -(sigma+lambda)_i h.
inline GTPoly structure_constant(const TorusDatum& datum, const IntVec& sigma, const IntVec& lambda) {
  const int n = datum.n();
  GTPoly left = GTPoly::constant(n, 1);
  GTPoly right = GTPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i) {
    const Int si = datum.restrict_weight(i, sigma);
    const Int li = datum.restrict_weight(i, lambda);
    if (si == 0 || li == 0 || (si > 0) == (li > 0)) continue;
    const Int abs_si = si > 0 ? si : -si;
    const Int abs_li = li > 0 ? li : -li;
    if (abs_li >= abs_si)
      left = left * bracket(n, i, si);
    else
      right = right * bracket(n, i, -li);
  }
  IntVec target(static_cast<std::size_t>(datum.k()));
  for (int j = 0; j < datum.k(); ++j)
    target[static_cast<std::size_t>(j)] =
        sigma[static_cast<std::size_t>(j)] + lambda[static_cast<std::size_t>(j)];
  IntVec shift(static_cast<std::size_t>(n));
  const IntVec target_restricted = datum.restrict_all(target);
  for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = -target_restricted[static_cast<std::size_t>(i)];
  return left * shift_substitute(right, shift);
}

}  // namespace detail

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_datum(a.datum(), b.datum()))
    throw std::invalid_argument("multiply: datum mismatch");
  const TorusDatum& datum = *a.datum();
  AlgebraElement out(a.datum());
  for (const auto& [sigma, p] : a.terms()) {
    IntVec minus_sigma(static_cast<std::size_t>(datum.n()));
    const IntVec sigma_restricted = datum.restrict_all(sigma);
    for (int i = 0; i < datum.n(); ++i)
      minus_sigma[static_cast<std::size_t>(i)] = -sigma_restricted[static_cast<std::size_t>(i)];
    for (const auto& [lambda, q] : b.terms()) {
      GTPoly coeff = p * shift_substitute(q, minus_sigma) *
                     detail::structure_constant(datum, sigma, lambda);
      IntVec target(sigma.size());
      for (std::size_t j = 0; j < sigma.size(); ++j) target[j] = sigma[j] + lambda[j];
      out.add_term(target, coeff);
    }
  }
  return out;
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

// Datum of the gauge theory attached to the Lagrangian N_alpha: flipping the
// i-th hypermultiplet negates its restricted weight.
inline DatumPtr flipped_datum(const TorusDatum& datum, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != datum.n())
    throw std::invalid_argument("flipped_datum: alpha must have length n");
  auto iota = datum.iota();
  for (int i = 0; i < datum.n(); ++i) {
    if (alpha[static_cast<std::size_t>(i)] == -1) continue;
    if (alpha[static_cast<std::size_t>(i)] != 1)
      throw std::invalid_argument("flipped_datum: alpha entries must be +-1");
    for (auto& v : iota[static_cast<std::size_t>(i)]) v = -v;
  }
  return make_datum(datum.n(), datum.k(), std::move(iota));
}

// Re-expresses an element over another datum of the same shape (used to view
// Fourier images inside the flipped presentation).
inline AlgebraElement transport(const AlgebraElement& a, DatumPtr datum) {
  if (datum->n() != a.datum()->n() || datum->k() != a.datum()->k())
    throw std::invalid_argument("transport: datum shape mismatch");
  AlgebraElement out(std::move(datum));
  for (const auto& [lambda, p] : a.terms()) out.add_term(lambda, p);
  return out;
}

// Fourier transform attached to the sign vector alpha: x_i -> -alpha_i x_i and
// r^lambda -> prod_{alpha_i lambda_i < 0} (-alpha_i)^{|lambda_i|} r^lambda,
// extended to normal forms.  Applying it twice with the same alpha is the
// identity, and the all-minus transform is the identity.  Read over the
// flipped datum (see transport / flipped_datum), the image satisfies the
// standard relations of the Lagrangian N_alpha, and the map is an algebra
// isomorphism onto that presentation.
inline AlgebraElement fourier_transform(const AlgebraElement& a, const std::vector<int>& alpha) {
  const TorusDatum& datum = *a.datum();
  const int n = datum.n();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("fourier_transform: alpha must have length n");
  AlgebraElement out(a.datum());
  std::map<int, GTPoly> flip;
  for (int i = 1; i <= n; ++i) {
    const int a_i = alpha[static_cast<std::size_t>(i - 1)];
    if (a_i != 1 && a_i != -1)
      throw std::invalid_argument("fourier_transform: alpha entries must be +-1");
    if (a_i == 1) flip[i] = -GTPoly::x(n, i);
  }
  for (const auto& [lambda, p] : a.terms()) {
    Rational sign = 1;
    for (int i = 1; i <= n; ++i) {
      const Int li = datum.restrict_weight(i, lambda);
      const int a_i = alpha[static_cast<std::size_t>(i - 1)];
      if (a_i * li < 0 && a_i == 1 && (li % 2 != 0)) sign = -sign;
    }
    out.add_term(lambda, p.substitute(flip) * sign);
  }
  return out;
}

// Splits an element into its <chi, lambda>-graded pieces.
inline std::map<Int, AlgebraElement> chi_degree(const AlgebraElement& a, const IntVec& chi) {
  if (static_cast<int>(chi.size()) != a.datum()->k())
    throw std::invalid_argument("chi_degree: chi has wrong length");
  std::map<Int, AlgebraElement> out;
  for (const auto& [lambda, p] : a.terms()) {
    const Int d = dot(chi, lambda);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, AlgebraElement::zero(a.datum())).first;
    it->second.add_term(lambda, p);
  }
  return out;
}

// Central specialization data: values for the f*-directions (one for each
// i in S of the chosen splitting, in increasing order of i) and an optional
// value for h; absent h means the symbolic mode.
struct Specialization {
  std::vector<Rational> zeta;
  std::optional<Rational> hbar_value;
};

// Substitutes the central combinations determined by an exceptional splitting:
// for i in S, x_i - sum_j c_ij x_j is central (xbar_i = sum_{j notin S} c_ij
// xbar_j) and is sent to zeta_i.
inline AlgebraElement specialize(const AlgebraElement& a, const Specialization& sp,
                                 const std::set<int>& splitting) {
  const TorusDatum& datum = *a.datum();
  const int n = datum.n();
  const int k = datum.k();
  const auto allowed = exceptional_subsets(datum);
  if (std::find(allowed.begin(), allowed.end(), splitting) == allowed.end())
    throw std::invalid_argument("specialize: splitting is not exceptional");
  if (static_cast<int>(sp.zeta.size()) != n - k)
    throw std::invalid_argument("specialize: zeta must have length n-k");

  std::vector<int> comp;
  for (int i = 1; i <= n; ++i)
    if (!splitting.count(i)) comp.push_back(i);
  std::vector<IntVec> basis_t(static_cast<std::size_t>(k), IntVec(static_cast<std::size_t>(k)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      basis_t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          datum.row(comp[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)];

  std::map<int, GTPoly> repl;
  int pos = 0;
  for (int i : splitting) {
    const IntVec coeffs = k == 0 ? IntVec{} : unimodular_solve(basis_t, datum.row(i));
    GTPoly value = GTPoly::constant(n, sp.zeta[static_cast<std::size_t>(pos)]);
    for (int t = 0; t < k; ++t)
      value += GTPoly::x(n, comp[static_cast<std::size_t>(t)]) *
               make_rational(coeffs[static_cast<std::size_t>(t)]);
    repl[i] = std::move(value);
    ++pos;
  }
  if (sp.hbar_value) repl[0] = GTPoly::constant(n, *sp.hbar_value);

  AlgebraElement out(a.datum());
  for (const auto& [lambda, p] : a.terms()) out.add_term(lambda, p.substitute(repl));
  return out;
}

}  // namespace hypertoric

#endif
