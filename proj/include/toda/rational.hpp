#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace toda {

// Exact rational scalar used by every algebraic module.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q" and plain decimals ("-0.25", "1.5"); everything a user
// can type is an exact rational, so no value ever enters as a rounded float.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
    return Rat(z);
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class den = 1;
  for (size_t k = 0; k < frac_len; ++k) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical file form: always "p/q" with q >= 1.
inline std::string rat_to_pq(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

namespace detail {
// mpz -> long double keeping the full 64-bit mantissa (mpz_get_d would
// truncate to double precision first).
inline long double mpz_to_long_double(const mpz_class& z) {
  long double acc = 0.0L;
  size_t limbs = mpz_size(z.get_mpz_t());
  for (size_t k = limbs; k-- > 0;) {
    mp_limb_t limb = mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(k));
    acc = acc * 1.8446744073709551616e19L /* 2^64 */ + static_cast<long double>(limb);
  }
  return mpz_sgn(z.get_mpz_t()) < 0 ? -acc : acc;
}
}  // namespace detail

inline long double rat_to_long_double(const Rat& r) {
  // Scale num/den down together so both convert without overflow.
  mpz_class num = r.get_num(), den = r.get_den();
  size_t bn = mpz_sizeinbase(num.get_mpz_t(), 2);
  size_t bd = mpz_sizeinbase(den.get_mpz_t(), 2);
  size_t big = bn > bd ? bn : bd;
  if (big > 8000) {
    unsigned long shift = static_cast<unsigned long>(big - 64);
    mpz_class n2, d2;
    mpz_fdiv_q_2exp(n2.get_mpz_t(), num.get_mpz_t(), shift);
    mpz_fdiv_q_2exp(d2.get_mpz_t(), den.get_mpz_t(), shift);
    if (d2 == 0) d2 = 1;
    return detail::mpz_to_long_double(n2) / detail::mpz_to_long_double(d2);
  }
  return detail::mpz_to_long_double(num) / detail::mpz_to_long_double(den);
}

inline std::vector<Rat> rats_from_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(rat_from_string(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(rat_from_string(cur));
  return out;
}

}  // namespace toda
