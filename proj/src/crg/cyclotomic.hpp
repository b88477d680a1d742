#pragma once

#include <string>
#include <vector>

#include "crg/common.hpp"

namespace crg {

// Exact element of Q(zeta_n), stored as rational coordinates over the power
// basis {zeta_n^i : 0 <= i < phi(n)}, reduced modulo the n-th cyclotomic
// polynomial.  Mixed-conductor arithmetic embeds both operands into the lcm.
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}

  static int phi(int n);
  // Ascending, monic, integer coefficients; length phi(n) + 1.
  static const std::vector<Rat>& cyclotomic_poly(int n);

  static Cyc zero(int n);
  static Cyc one(int n) { return from_rat(n, Rat(1)); }
  static Cyc from_rat(int n, const Rat& v);
  static Cyc from_rat(const Rat& v) { return from_rat(1, v); }
  static Cyc from_coords(int n, std::vector<Rat> coords);
  // zeta_n^k, any integer k.
  static Cyc zeta(int n, long long k = 1);

  int conductor() const { return n_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()
  bool is_integral() const;    // all coordinates have denominator 1

  Cyc conj() const;  // zeta_n -> zeta_n^{-1}
  Cyc inv() const;   // multiplicative inverse; division_by_zero_error on 0
  // Image in Q(zeta_m); requires n | m (not_divisible_error otherwise).
  Cyc embed(int m) const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator*=(const Rat& s);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator*(Cyc a, const Rat& s) { return a *= s; }
  friend Cyc operator*(const Rat& s, Cyc a) { return a *= s; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Coordinates as canonical "num/den" strings.
  std::vector<std::string> coord_strings() const;
  // Canonical human-readable form, e.g. "1 - 2*z6 + 1/2*z6^2".
  std::string str() const;

 private:
  Cyc(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static void align(Cyc& a, Cyc& b);

  int n_;
  std::vector<Rat> c_;
};

// True iff every power-basis coordinate of x is an integer divisible by p^a;
// throws not_integral_error when some coordinate is not an integer.
bool divisible_by_p_power(const Cyc& x, int p, int a);

}  // namespace crg
