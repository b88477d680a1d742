#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crg {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy shared by all modules.  The CLI maps these onto exit codes.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct bad_prime_error : error {
  using error::error;
};
struct weight_mismatch_error : error {
  using error::error;
};
struct mixed_defect_error : error {
  using error::error;
};
struct not_integral_error : error {
  using error::error;
};
struct not_divisible_error : error {
  using error::error;
};
struct not_in_subgroup_error : error {
  using error::error;
};
struct division_by_zero_error : error {
  using error::error;
};
struct desk_bound_error : error {
  using error::error;
};

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt bigint_pow(BigInt base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Exact fraction num/den; the backing rational type rejects negative
// denominators in its two-argument constructor, so move the sign up front.
inline Rat rat_frac(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

// Largest power of p dividing n (n > 0).
inline BigInt p_part(BigInt n, int p) {
  BigInt m = 1;
  while (n % p == 0) {
    n /= p;
    m *= p;
  }
  return m;
}

inline int mod(long long a, int m) {
  long long v = a % m;
  return static_cast<int>(v < 0 ? v + m : v);
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int q = 1; q <= n; ++q)
    if (n % q == 0) out.push_back(q);
  return out;
}

}  // namespace crg
