#ifndef HYPERTORIC_RATIONAL_HPP
#define HYPERTORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertoric {

using Rational = mpq_class;
using Int = long long;
using IntVec = std::vector<Int>;

inline Rational make_rational(Int num, Int den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "a" or "a/b" with optional sign.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Largest integer <= q.
inline Int floor_int(const Rational& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("rational: floor out of range");
  return static_cast<Int>(z.get_si());
}

inline Int ceil_int(const Rational& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("rational: ceil out of range");
  return static_cast<Int>(z.get_si());
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(b[i]);
  return s;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hypertoric

#endif
